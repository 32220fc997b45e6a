#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "burau4/braid.hpp"

namespace burau4 {

// Grammar, tokens separated by whitespace:
//   token    := atom [ '^' integer ]
//   atom     := ['-'] ('1' | '2' | '3')          generator, '-' for inverse
//             | 'a' | 'b' | 't' | 'd' | 'q'      alpha, beta, tau, Delta, theta
// "1 2 -3" is s1 s2 s3^-1; "b^-1 a b" is beta^-1 alpha beta.

class WordParseError : public std::runtime_error {
 public:
  WordParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

enum class WordAtom { Generator, Alpha, Beta, Tau, Delta, Theta };

struct WordToken {
  WordAtom    atom = WordAtom::Generator;
  int         generator = 0;  // signed index, Generator atoms only
  long long   exponent = 1;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<WordToken> tokenize_word(std::string_view text);
BraidWord to_braid_word(const std::vector<WordToken>& tokens);
BraidWord parse_braid_word(std::string_view text);
std::string format_braid_word(const BraidWord& w);

extern const char* const kWordGrammarHelp;

}  // namespace burau4
