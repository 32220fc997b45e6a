#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace burau4 {

/// sigma_index^sign, index in {1,2,3}, sign in {+1,-1}.
struct BraidLetter {
  int index = 1;
  int sign  = +1;

  BraidLetter inverse() const noexcept { return {index, -sign}; }
  auto operator<=>(const BraidLetter&) const = default;
};

/// A word in the generators of B4.  Not reduced unless asked.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> letters);
  // Signed shorthand: {1, 2, -3} is s1 s2 s3^-1.
  BraidWord(std::initializer_list<int> signed_indices);

  std::span<const BraidLetter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(long long k) const;
  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }

  // Sum of the letter signs (the abelianization exponent).
  long long exponent_sum() const noexcept;
  BraidWord free_reduced() const;

  // "1 2 -3"; the empty word prints as "".
  std::string to_string() const;

  bool operator==(const BraidWord&) const = default;

 private:
  std::vector<BraidLetter> letters_;
};

BraidWord free_reduce(const BraidWord& w);

namespace named {
BraidWord alpha();  // s1 s2 s3^-1 s1 s2^-1 s1^-1
BraidWord beta();   // s3 s1^-1
BraidWord tau();    // s1 s2 s3
BraidWord delta();  // s1 s2 s3 s1 s2 s1
BraidWord theta();  // (s1 s2 s3)^4, the full twist
BraidWord sigma(int index);
}  // namespace named

/// Reduced word in the free group on x1..x4.  Letters are stored signed:
/// +i is x_i, -i is x_i^-1.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::initializer_list<int> signed_letters);

  static FreeWord generator(int index) { return FreeWord{index}; }

  std::span<const std::int8_t> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Appends with free cancellation at the seam.
  void push_back(int signed_letter);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  FreeWord inverse() const;

  std::string to_string() const;
  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<std::int8_t> letters_;
};

/// Images of x1..x4 under a braid, letters applied left to right:
/// x . (u v) = (x . u) . v, with
///   x_i . s_i = x_i x_{i+1} x_i^-1,   x_{i+1} . s_i = x_i,
/// and the inverse substitution for s_i^-1.
using ArtinImage = std::array<FreeWord, 4>;

ArtinImage artin_identity();
ArtinImage artin_image(const BraidWord& w);
// The image of u v given the images of u and of v.
ArtinImage artin_compose(const ArtinImage& first, const ArtinImage& then);

bool braid_eq(const BraidWord& u, const BraidWord& v);
bool is_central(const BraidWord& w);

}  // namespace burau4
