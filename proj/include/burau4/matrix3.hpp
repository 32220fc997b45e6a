#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "burau4/laurent.hpp"

namespace burau4 {

class MatrixParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 3x3 matrix over Z[t, t^-1], row-major.
class Mat3 {
 public:
  Mat3() = default;
  explicit Mat3(std::array<LaurentPoly, 9> entries) : e_(std::move(entries)) {}
  // Integer-entry convenience for fixtures.
  Mat3(std::initializer_list<std::initializer_list<long long>> rows);

  static Mat3 identity();
  static Mat3 scalar(const LaurentPoly& c);

  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return e_[3 * r + c]; }
  const std::array<LaurentPoly, 9>& entries() const noexcept { return e_; }

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  Mat3& operator*=(const Mat3& rhs) { return *this = *this * rhs; }
  Mat3 scaled(const LaurentPoly& c) const;
  Mat3 shifted(Degree by) const;  // every entry times t^by
  Mat3 pow(unsigned n) const;

  bool is_identity() const { return as_scalar().has_value() && e_[0].is_one(); }
  bool off_diagonal_zero() const;
  // c such that this == c*I, if any.
  std::optional<LaurentPoly> as_scalar() const;
  LaurentPoly det() const;

  // "a, b, c; d, e, f; g, h, i" with entries in the Laurent text grammar.
  std::string to_string() const;
  static Mat3 parse(std::string_view text);

  bool operator==(const Mat3&) const = default;

 private:
  std::array<LaurentPoly, 9> e_;
};

Mat3 mat_mul(const Mat3& a, const Mat3& b);
LaurentPoly det(const Mat3& a);
std::optional<LaurentPoly> as_scalar(const Mat3& a);

/// Representative of a matrix's class up to multiplication by a unit
/// monomial +-t^e.  The pivot (first nonzero entry, row-major) is divided
/// so that its lowest term is +1 * t^0.  The key holds the exact entries, so
/// equal keys mean projectively equal matrices, never a hash collision.
class ProjKey {
 public:
  const Mat3& representative() const noexcept { return rep_; }
  bool operator==(const ProjKey&) const = default;
  std::size_t hash() const noexcept;

 private:
  explicit ProjKey(Mat3 rep) : rep_(std::move(rep)) {}
  Mat3 rep_;
  friend ProjKey canonicalize(const Mat3& a);
};

// The unit monomial u with canonicalize(a).representative() * u == a.
// Absent for the zero matrix.
std::optional<UnitMonomial> projective_pivot(const Mat3& a);
ProjKey canonicalize(const Mat3& a);

}  // namespace burau4

template <>
struct std::hash<burau4::ProjKey> {
  std::size_t operator()(const burau4::ProjKey& k) const noexcept { return k.hash(); }
};
