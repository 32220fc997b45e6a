#include "burau4/normalform.hpp"

#include <algorithm>
#include <cstdlib>

#include "burau4/word_syntax.hpp"

namespace burau4 {

GLLetter inverse(GLLetter l) {
  switch (l) {
    case GLLetter::Alpha: return GLLetter::AlphaInv;
    case GLLetter::Beta: return GLLetter::BetaInv;
    case GLLetter::AlphaInv: return GLLetter::Alpha;
    case GLLetter::BetaInv: return GLLetter::Beta;
  }
  return l;
}

GLWord gl_free_reduce(const GLWord& w) {
  GLWord out;
  out.reserve(w.size());
  for (auto l : w) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

bool gl_is_reduced(const GLWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == inverse(w[i - 1])) {
      return false;
    }
  }
  return true;
}

BraidWord gl_to_braid(const GLWord& w) {
  BraidWord out;
  for (auto l : w) {
    switch (l) {
      case GLLetter::Alpha: out *= named::alpha(); break;
      case GLLetter::Beta: out *= named::beta(); break;
      case GLLetter::AlphaInv: out *= named::alpha().inverse(); break;
      case GLLetter::BetaInv: out *= named::beta().inverse(); break;
    }
  }
  return out;
}

GLWord parse_gl_word(std::string_view text) {
  GLWord out;
  for (const auto& tok : tokenize_word(text)) {
    GLLetter pos{};
    GLLetter neg{};
    if (tok.atom == WordAtom::Alpha) {
      pos = GLLetter::Alpha;
      neg = GLLetter::AlphaInv;
    } else if (tok.atom == WordAtom::Beta) {
      pos = GLLetter::Beta;
      neg = GLLetter::BetaInv;
    } else {
      throw WordParseError("only 'a' and 'b' tokens are allowed in this word", tok.line,
                           tok.column);
    }
    long long n = std::llabs(tok.exponent);
    out.insert(out.end(), static_cast<std::size_t>(n), tok.exponent < 0 ? neg : pos);
  }
  return out;
}

std::string format_gl_word(const GLWord& w) {
  std::string out;
  for (auto l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    switch (l) {
      case GLLetter::Alpha: out += "a"; break;
      case GLLetter::Beta: out += "b"; break;
      case GLLetter::AlphaInv: out += "a^-1"; break;
      case GLLetter::BetaInv: out += "b^-1"; break;
    }
  }
  return out;
}

Syllable Syllable::tau(int e) {
  if (e < 1 || e > 3) {
    throw std::invalid_argument("tau syllable exponent must be 1, 2 or 3, got " +
                                std::to_string(e));
  }
  return Syllable(e);
}

std::string Syllable::to_string() const {
  if (is_delta()) {
    return "d";
  }
  return code_ == 1 ? "t" : "t^" + std::to_string(code_);
}

AltWord::AltWord(long long m, std::vector<Syllable> syllables) : m_(m), syl_(std::move(syllables)) {
  for (std::size_t i = 1; i < syl_.size(); ++i) {
    if (syl_[i].is_delta() == syl_[i - 1].is_delta()) {
      throw std::invalid_argument("AltWord syllables must alternate");
    }
  }
}

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

void note(RewriteTrail* trail, std::string s) {
  if (trail != nullptr) {
    trail->push_back(std::move(s));
  }
}

std::string tau_text(long long e) { return e == 1 ? "t" : "t^" + std::to_string(e); }

}  // namespace

void AltWord::append_tau(long long e, RewriteTrail* trail) {
  long long wraps = floor_div(e, 4);
  long long r = e - 4 * wraps;
  if (wraps != 0) {
    m_ += wraps;
    note(trail, tau_text(e) + " -> q^" + std::to_string(wraps) + (r ? " " + tau_text(r) : ""));
  }
  if (r == 0) {
    return;
  }
  if (!syl_.empty() && !syl_.back().is_delta()) {
    long long a = syl_.back().tau_exponent();
    long long s = a + r;
    syl_.pop_back();
    std::string rule = tau_text(a) + " " + tau_text(r) + " -> ";
    if (s >= 4) {
      m_ += 1;
      s -= 4;
      rule += s ? "q " + tau_text(s) : "q";
    } else {
      rule += tau_text(s);
    }
    note(trail, rule);
    if (s == 0) {
      return;
    }
    r = s;
  }
  syl_.push_back(Syllable::tau(static_cast<int>(r)));
}

void AltWord::append_delta(long long e, RewriteTrail* trail) {
  const int step = e < 0 ? -1 : 1;
  for (long long i = 0; i != e; i += step) {
    if (step < 0) {
      m_ -= 1;
      note(trail, "d^-1 -> q^-1 d");
    }
    if (!syl_.empty() && syl_.back().is_delta()) {
      syl_.pop_back();
      m_ += 1;
      note(trail, "d d -> q");
    } else {
      syl_.push_back(Syllable::delta());
    }
  }
}

void AltWord::append(const AltWord& rhs, RewriteTrail* trail) {
  m_ += rhs.m_;
  for (const auto& s : rhs.syl_) {
    if (s.is_delta()) {
      append_delta(1, trail);
    } else {
      append_tau(s.tau_exponent(), trail);
    }
  }
}

std::string AltWord::syllable_string() const {
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += s.to_string();
  }
  return out;
}

std::string AltWord::to_string() const {
  std::string out;
  if (m_ != 0) {
    out = m_ == 1 ? "q" : "q^" + std::to_string(m_);
  }
  std::string syl = syllable_string();
  if (!syl.empty()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += syl;
  }
  return out.empty() ? "1" : out;
}

AltWord gl_substitute(const GLWord& w, RewriteTrail* trail) {
  AltWord out;
  for (auto l : w) {
    switch (l) {
      case GLLetter::Beta:  // d^-1 t^2
        note(trail, "b -> d^-1 t^2");
        out.append_delta(-1, trail);
        out.append_tau(2, trail);
        break;
      case GLLetter::Alpha:  // t^-1 d^-1 t^3
        note(trail, "a -> t^-1 d^-1 t^3");
        out.append_tau(-1, trail);
        out.append_delta(-1, trail);
        out.append_tau(3, trail);
        break;
      case GLLetter::AlphaInv:  // t d^-1 t
        note(trail, "a^-1 -> t d^-1 t");
        out.append_tau(1, trail);
        out.append_delta(-1, trail);
        out.append_tau(1, trail);
        break;
      case GLLetter::BetaInv:  // t^2 d^-1
        note(trail, "b^-1 -> t^2 d^-1");
        out.append_tau(2, trail);
        out.append_delta(-1, trail);
        break;
    }
  }
  return out;
}

std::optional<SearchShape> theorem_shape(const AltWord& a) {
  auto s = a.syllables();
  if (s.size() < 3 || s.size() % 2 == 0) {
    return std::nullopt;
  }
  if (s.front() != Syllable::tau(2) || s.back() != Syllable::tau(2)) {
    return std::nullopt;
  }
  SearchShape shape;
  shape.m = a.center_exponent();
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    bool want_delta = i % 2 == 1;
    if (s[i].is_delta() != want_delta) {
      return std::nullopt;
    }
    if (!want_delta) {
      shape.exps.push_back(s[i].tau_exponent());
    }
  }
  return shape;
}

Conjugated conjugate_to_shape(const GLWord& w) {
  GLWord r = gl_free_reduce(w);
  auto is_beta_power = [](GLLetter l) { return l == GLLetter::Beta || l == GLLetter::BetaInv; };
  std::size_t head = 0;
  while (head < r.size() && is_beta_power(r[head])) {
    ++head;
  }
  if (head == r.size()) {
    throw NotConjugable("word is a power of beta: '" + format_gl_word(r) + "'");
  }
  std::size_t tail = r.size();
  while (is_beta_power(r[tail - 1])) {
    --tail;
  }
  auto signed_count = [](auto first, auto last) {
    long long n = 0;
    for (auto it = first; it != last; ++it) {
      n += *it == GLLetter::Beta ? 1 : -1;
    }
    return n;
  };
  const long long lead = signed_count(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(head));
  const long long trail = signed_count(r.begin() + static_cast<std::ptrdiff_t>(tail), r.end());

  // Need lead - p <= -1 and trail + p >= 1.
  const long long p = std::max({lead + 1, 1 - trail, 0LL});

  Conjugated out;
  out.p = p;
  auto push_beta_power = [&](long long k) {
    out.word.insert(out.word.end(), static_cast<std::size_t>(std::llabs(k)),
                    k < 0 ? GLLetter::BetaInv : GLLetter::Beta);
  };
  push_beta_power(lead - p);
  out.word.insert(out.word.end(), r.begin() + static_cast<std::ptrdiff_t>(head),
                  r.begin() + static_cast<std::ptrdiff_t>(tail));
  push_beta_power(trail + p);
  return out;
}

bool alt_eq_mod_center(const AltWord& u, const AltWord& v) {
  return std::ranges::equal(u.syllables(), v.syllables());
}

BraidWord expand(const AltWord& a) {
  BraidWord out = named::theta().pow(a.center_exponent());
  for (const auto& s : a.syllables()) {
    out *= s.is_delta() ? named::delta() : named::tau().pow(s.tau_exponent());
  }
  return out;
}

}  // namespace burau4
