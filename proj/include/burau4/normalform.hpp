#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "burau4/braid.hpp"

namespace burau4 {

/// Letters of the free subgroup generated by alpha and beta.
enum class GLLetter : signed char { Alpha, Beta, AlphaInv, BetaInv };
using GLWord = std::vector<GLLetter>;

GLLetter inverse(GLLetter l);
GLWord gl_free_reduce(const GLWord& w);
bool gl_is_reduced(const GLWord& w);
BraidWord gl_to_braid(const GLWord& w);
// Accepts the braid grammar restricted to 'a' and 'b' tokens with powers.
GLWord parse_gl_word(std::string_view text);
std::string format_gl_word(const GLWord& w);

/// One syllable of the alternating form: Delta, or tau^e with e in {1,2,3}.
class Syllable {
 public:
  static Syllable delta() { return Syllable(0); }
  static Syllable tau(int e);

  bool is_delta() const noexcept { return code_ == 0; }
  int tau_exponent() const noexcept { return code_; }
  std::string to_string() const;

  auto operator<=>(const Syllable&) const = default;

 private:
  explicit Syllable(int code) : code_(code) {}
  int code_;
};

// Human-readable record of each rewrite rule applied, when requested.
using RewriteTrail = std::vector<std::string>;

/// theta^m followed by an alternating sequence of Delta and tau-power
/// syllables.  Always canonical: no two Deltas and no two tau-syllables are
/// adjacent, and tau exponents lie in {1,2,3}.  theta = tau^4 = Delta^2 is
/// central, so every merge just moves a power of theta into m.
class AltWord {
 public:
  AltWord() = default;
  // Throws std::invalid_argument unless the syllables are already canonical.
  AltWord(long long m, std::vector<Syllable> syllables);

  long long center_exponent() const noexcept { return m_; }
  std::span<const Syllable> syllables() const noexcept { return syl_; }

  void append_tau(long long e, RewriteTrail* trail = nullptr);
  void append_delta(long long e, RewriteTrail* trail = nullptr);
  void append(const AltWord& rhs, RewriteTrail* trail = nullptr);
  void shift_center(long long dm) noexcept { m_ += dm; }

  // "t^2 d t^3 d t^2"; empty syllable list prints as "".
  std::string syllable_string() const;
  // "q^-4 t^2 d t^3 d t^2", "1" for the identity.
  std::string to_string() const;

  bool operator==(const AltWord&) const = default;

 private:
  long long             m_ = 0;
  std::vector<Syllable> syl_;
};

AltWord gl_substitute(const GLWord& w, RewriteTrail* trail = nullptr);

struct SearchShape {
  long long        m = 0;
  std::vector<int> exps;  // the interior tau exponents, each in {1,2,3}
  bool operator==(const SearchShape&) const = default;
};

// Present iff the syllables read tau^2 Delta tau^i1 Delta ... tau^ik Delta tau^2
// (k >= 0).
std::optional<SearchShape> theorem_shape(const AltWord& a);

class NotConjugable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Conjugated {
  GLWord    word;
  long long p = 0;  // word == reduce(beta^-p w beta^p)
};

/// The conjugate beta^-p w beta^p with smallest |p| that starts with
/// beta^-1 and ends with beta.  Throws NotConjugable when w reduces to a
/// power of beta.
Conjugated conjugate_to_shape(const GLWord& w);

bool alt_eq_mod_center(const AltWord& u, const AltWord& v);

/// theta^m, then each syllable spelled out with tau = s1 s2 s3 and
/// Delta = s1 s2 s3 s1 s2 s1.
BraidWord expand(const AltWord& a);

}  // namespace burau4
