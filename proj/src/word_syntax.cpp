#include "burau4/word_syntax.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace burau4 {

const char* const kWordGrammarHelp =
    "Braid words: whitespace-separated tokens.\n"
    "  1 2 3        generators s1 s2 s3; prefix '-' for the inverse (-2 is s2^-1)\n"
    "  a            alpha = 1 2 -3 1 -2 -1\n"
    "  b            beta  = 3 -1\n"
    "  t            tau   = 1 2 3\n"
    "  d            Delta = 1 2 3 1 2 1\n"
    "  q            theta = t^4, the full twist\n"
    "Any token may carry an integer power: b^-1 a b, t^4, 2^-3.";

WordParseError::WordParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + msg),
      detail_(msg),
      line_(line),
      column_(column) {}

namespace {

constexpr long long kMaxExponent = 1'000'000;

class TokenScanner {
 public:
  explicit TokenScanner(std::string_view s) : s_(s) {}

  std::vector<WordToken> run() {
    std::vector<WordToken> out;
    while (true) {
      skip_ws();
      if (at_end()) {
        return out;
      }
      out.push_back(token());
      if (!at_end() && !std::isspace(static_cast<unsigned char>(peek()))) {
        fail("expected whitespace between tokens");
      }
    }
  }

 private:
  WordToken token() {
    WordToken tok;
    tok.line = line_;
    tok.column = column_;
    char c = peek();
    if (c == '-' || (c >= '0' && c <= '9')) {
      int sign = 1;
      if (c == '-') {
        sign = -1;
        advance();
      }
      char d = peek();
      if (d < '1' || d > '3') {
        fail("generator index must be 1, 2 or 3");
      }
      advance();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("generator index must be 1, 2 or 3");
      }
      tok.atom = WordAtom::Generator;
      tok.generator = sign * (d - '0');
    } else {
      switch (c) {
        case 'a': tok.atom = WordAtom::Alpha; break;
        case 'b': tok.atom = WordAtom::Beta; break;
        case 't': tok.atom = WordAtom::Tau; break;
        case 'd': tok.atom = WordAtom::Delta; break;
        case 'q': tok.atom = WordAtom::Theta; break;
        default:
          fail(std::string("unknown token '") + c + "'");
      }
      advance();
    }
    if (peek() == '^') {
      advance();
      tok.exponent = integer();
    }
    return tok;
  }

  long long integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') {
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected integer exponent");
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      advance();
    }
    std::string_view num = s_.substr(start, pos_ - start);
    if (num.front() == '+') {
      num.remove_prefix(1);
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc() || ptr != num.data() + num.size() || v > kMaxExponent ||
        v < -kMaxExponent) {
      fail("exponent out of range");
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw WordParseError(msg, line_, column_);
  }

  std::string_view s_;
  std::size_t      pos_ = 0;
  std::size_t      line_ = 1;
  std::size_t      column_ = 1;
};

BraidWord atom_word(const WordToken& tok) {
  switch (tok.atom) {
    case WordAtom::Generator: return BraidWord{tok.generator};
    case WordAtom::Alpha: return named::alpha();
    case WordAtom::Beta: return named::beta();
    case WordAtom::Tau: return named::tau();
    case WordAtom::Delta: return named::delta();
    case WordAtom::Theta: return named::theta();
  }
  return {};
}

}  // namespace

std::vector<WordToken> tokenize_word(std::string_view text) { return TokenScanner(text).run(); }

BraidWord to_braid_word(const std::vector<WordToken>& tokens) {
  BraidWord w;
  for (const auto& tok : tokens) {
    w *= atom_word(tok).pow(tok.exponent);
  }
  return w;
}

BraidWord parse_braid_word(std::string_view text) { return to_braid_word(tokenize_word(text)); }

std::string format_braid_word(const BraidWord& w) { return w.to_string(); }

}  // namespace burau4
