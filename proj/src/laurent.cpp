#include "burau4/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>

namespace burau4 {

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) {
    coeffs_.push_back(std::move(constant));
  }
}

LaurentPoly::LaurentPoly(Degree min_deg, std::vector<Integer> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(Integer coeff, Degree exponent) {
  if (coeff == 0) {
    return {};
  }
  std::vector<Integer> c;
  c.push_back(std::move(coeff));
  return LaurentPoly(exponent, std::move(c));
}

LaurentPoly LaurentPoly::from_coeffs(Degree min_deg, std::vector<Integer> coeffs) {
  return LaurentPoly(min_deg, std::move(coeffs));
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const Integer& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  min_deg_ += static_cast<Degree>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && min_deg_ == 0 && coeffs_[0] == 1;
}

Integer LaurentPoly::coeff(Degree exponent) const {
  if (is_zero() || exponent < min_deg_ || exponent > max_deg()) {
    return 0;
  }
  return coeffs_[static_cast<std::size_t>(exponent - min_deg_)];
}

std::optional<UnitMonomial> LaurentPoly::as_unit_monomial() const {
  if (coeffs_.size() != 1) {
    return std::nullopt;
  }
  if (coeffs_[0] == 1) {
    return UnitMonomial{+1, min_deg_};
  }
  if (coeffs_[0] == -1) {
    return UnitMonomial{-1, min_deg_};
  }
  return std::nullopt;
}

LaurentPoly LaurentPoly::shifted(Degree by) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) {
    r.min_deg_ += by;
  }
  return r;
}

LaurentPoly LaurentPoly::negated() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) {
    c = -c;
  }
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = rhs;
  }
  Degree lo = std::min(min_deg_, rhs.min_deg_);
  Degree hi = std::max(max_deg(), rhs.max_deg());
  if (lo < min_deg_ || hi > max_deg()) {
    std::vector<Integer> grown(static_cast<std::size_t>(hi - lo + 1));
    std::move(coeffs_.begin(), coeffs_.end(),
              grown.begin() + static_cast<std::ptrdiff_t>(min_deg_ - lo));
    coeffs_ = std::move(grown);
    min_deg_ = lo;
  }
  const auto& src = rhs.coeffs_;
  auto offset = static_cast<std::size_t>(rhs.min_deg_ - min_deg_);
  for (std::size_t j = 0; j < src.size(); ++j) {
    coeffs_[offset + j] += src[j];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += rhs.negated();
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  return *this = *this * rhs;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  PolyAccumulator acc(a.min_deg() + b.min_deg(), a.max_deg() + b.max_deg());
  acc.add_product(a, b);
  return acc.take();
}

std::size_t LaurentPoly::hash() const noexcept {
  std::size_t h = std::hash<Degree>{}(min_deg_);
  for (const auto& c : coeffs_) {
    std::size_t ch = boost::multiprecision::hash_value(c);
    h ^= ch + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

PolyAccumulator::PolyAccumulator(Degree lo, Degree hi)
    : lo_(lo), buf_(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0) {}

void PolyAccumulator::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return;
  }
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  auto base = static_cast<std::size_t>(a.min_deg() + b.min_deg() - lo_);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    const Integer& x = ac[i];
    for (std::size_t j = 0; j < bc.size(); ++j) {
      buf_[base + i + j] += x * bc[j];
    }
  }
}

LaurentPoly PolyAccumulator::take() {
  return LaurentPoly::from_coeffs(lo_, std::move(buf_));
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
std::optional<UnitMonomial> is_unit_monomial(const LaurentPoly& a) {
  return a.as_unit_monomial();
}

// Text form: terms in ascending degree joined by " + " / " - ",
// e.g. "-t^-1 + 1 + 2*t^3".
std::string LaurentPoly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Integer& c = coeffs_[j];
    if (c == 0) {
      continue;
    }
    Degree e = min_deg_ + static_cast<Degree>(j);
    bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) {
      out += mag.str();
      out += '*';
    }
    out += 't';
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

namespace {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    std::map<Degree, Integer> terms;
    skip_ws();
    if (at_end()) {
      fail("empty polynomial");
    }
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, e] = term();
      terms[e] += sign * c;
      skip_ws();
      if (at_end()) {
        break;
      }
    }
    if (terms.empty()) {
      return {};
    }
    Degree lo = terms.begin()->first;
    Degree hi = terms.rbegin()->first;
    std::vector<Integer> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [e, c] : terms) {
      coeffs[static_cast<std::size_t>(e - lo)] = std::move(c);
    }
    return LaurentPoly::from_coeffs(lo, std::move(coeffs));
  }

 private:
  static constexpr Degree kMaxAbsDegree = 1 << 24;

  std::pair<Integer, Degree> term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer c = digits();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        return {c, t_power()};
      }
      return {c, 0};
    }
    if (peek() == 't') {
      return {Integer(1), t_power()};
    }
    fail("expected coefficient or 't'");
  }

  Degree t_power() {
    if (peek() != 't') {
      fail("expected 't'");
    }
    ++pos_;
    skip_ws();
    if (peek() != '^') {
      return 1;
    }
    ++pos_;
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected exponent");
    }
    Integer e = digits();
    if (e > kMaxAbsDegree) {
      fail("exponent out of range");
    }
    auto v = e.convert_to<Degree>();
    return neg ? -v : v;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw LaurentParseError(msg, pos_ + 1);
  }

  std::string_view s_;
  std::size_t      pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  return PolyScanner(text).parse();
}

}  // namespace burau4
