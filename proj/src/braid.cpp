#include "burau4/braid.hpp"

#include <cstdlib>
#include <stdexcept>

namespace burau4 {

namespace {

void check_letter(const BraidLetter& l) {
  if (l.index < 1 || l.index > 3 || (l.sign != 1 && l.sign != -1)) {
    throw std::invalid_argument("braid letter out of range: index " + std::to_string(l.index) +
                                ", sign " + std::to_string(l.sign));
  }
}

}  // namespace

BraidWord::BraidWord(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    check_letter(l);
  }
}

BraidWord::BraidWord(std::initializer_list<int> signed_indices) {
  letters_.reserve(signed_indices.size());
  for (int s : signed_indices) {
    BraidLetter l{std::abs(s), s < 0 ? -1 : +1};
    check_letter(l);
    letters_.push_back(l);
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  BraidWord w;
  w.letters_ = std::move(out);
  return w;
}

BraidWord BraidWord::pow(long long k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
    out *= base;
  }
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

long long BraidWord::exponent_sum() const noexcept {
  long long s = 0;
  for (const auto& l : letters_) {
    s += l.sign;
  }
  return s;
}

BraidWord BraidWord::free_reduced() const {
  std::vector<BraidLetter> stack;
  stack.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  BraidWord w;
  w.letters_ = std::move(stack);
  return w;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) {
      out += ' ';
    }
    if (l.sign < 0) {
      out += '-';
    }
    out += std::to_string(l.index);
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) { return w.free_reduced(); }

namespace named {
BraidWord alpha() { return {1, 2, -3, 1, -2, -1}; }
BraidWord beta() { return {3, -1}; }
BraidWord tau() { return {1, 2, 3}; }
BraidWord delta() { return {1, 2, 3, 1, 2, 1}; }
BraidWord theta() { return tau().pow(4); }
BraidWord sigma(int index) { return {index}; }
}  // namespace named

FreeWord::FreeWord(std::initializer_list<int> signed_letters) {
  for (int s : signed_letters) {
    push_back(s);
  }
}

void FreeWord::push_back(int signed_letter) {
  if (signed_letter == 0 || signed_letter < -4 || signed_letter > 4) {
    throw std::invalid_argument("free letter out of range: " + std::to_string(signed_letter));
  }
  if (!letters_.empty() && letters_.back() == -signed_letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(static_cast<std::int8_t>(signed_letter));
  }
}

void FreeWord::append(const FreeWord& w) {
  std::size_t i = 0;
  while (i < w.letters_.size() && !letters_.empty() && letters_.back() == -w.letters_[i]) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), w.letters_.begin() + static_cast<std::ptrdiff_t>(i),
                  w.letters_.end());
}

void FreeWord::append_inverse(const FreeWord& w) {
  auto it = w.letters_.rbegin();
  while (it != w.letters_.rend() && !letters_.empty() && letters_.back() == *it) {
    letters_.pop_back();
    ++it;
  }
  for (; it != w.letters_.rend(); ++it) {
    letters_.push_back(static_cast<std::int8_t>(-*it));
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.append_inverse(*this);
  return w;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) {
    return "1";
  }
  std::string out;
  for (auto s : letters_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 'x';
    out += std::to_string(std::abs(s));
    if (s < 0) {
      out += "^-1";
    }
  }
  return out;
}

ArtinImage artin_identity() {
  return {FreeWord::generator(1), FreeWord::generator(2), FreeWord::generator(3),
          FreeWord::generator(4)};
}

namespace {

ArtinImage letter_image(const BraidLetter& l) {
  ArtinImage img = artin_identity();
  const int i = l.index;
  const int j = l.index + 1;
  if (l.sign > 0) {
    img[i - 1] = FreeWord{i, j, -i};
    img[j - 1] = FreeWord{i};
  } else {
    img[i - 1] = FreeWord{j};
    img[j - 1] = FreeWord{-j, i, j};
  }
  return img;
}

FreeWord substitute(const FreeWord& w, const ArtinImage& images) {
  FreeWord out;
  for (auto s : w.letters()) {
    const FreeWord& img = images[static_cast<std::size_t>(std::abs(s)) - 1];
    if (s > 0) {
      out.append(img);
    } else {
      out.append_inverse(img);
    }
  }
  return out;
}

}  // namespace

ArtinImage artin_compose(const ArtinImage& first, const ArtinImage& then) {
  ArtinImage out;
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = substitute(first[k], then);
  }
  return out;
}

ArtinImage artin_image(const BraidWord& w) {
  ArtinImage img = artin_identity();
  for (const auto& l : w.letters()) {
    img = artin_compose(img, letter_image(l));
  }
  return img;
}

bool braid_eq(const BraidWord& u, const BraidWord& v) {
  return artin_image((u * v.inverse()).free_reduced()) == artin_identity();
}

bool is_central(const BraidWord& w) {
  for (int i = 1; i <= 3; ++i) {
    const BraidWord s = named::sigma(i);
    if (!braid_eq(w * s, s * w)) {
      return false;
    }
  }
  return true;
}

}  // namespace burau4
