#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace burau4 {

using Integer = boost::multiprecision::cpp_int;

// Exponents of t. Kept as a plain machine integer: degrees grow linearly
// with word length, coefficients are the part that can blow up.
using Degree = std::int64_t;

class LaurentParseError : public std::runtime_error {
 public:
  LaurentParseError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// sign * t^exponent with sign in {+1, -1}.
struct UnitMonomial {
  int    sign;
  Degree exponent;
  bool operator==(const UnitMonomial&) const = default;
};

/// Integer-coefficient Laurent polynomial in one variable t.
///
/// Stored densely: coeffs()[j] is the coefficient of t^(min_deg() + j).
/// A nonzero value never has zero first or last coefficient, and zero is
/// the empty sequence with min_deg() == 0, so equal values have identical
/// representations.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);
  explicit LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}

  static LaurentPoly monomial(Integer coeff, Degree exponent);
  static LaurentPoly from_coeffs(Degree min_deg, std::vector<Integer> coeffs);
  static LaurentPoly t() { return monomial(1, 1); }

  static LaurentPoly parse(std::string_view text);
  std::string to_string() const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  Degree min_deg() const noexcept { return min_deg_; }
  // Undefined for zero; callers check is_zero() first.
  Degree max_deg() const noexcept {
    return min_deg_ + static_cast<Degree>(coeffs_.size()) - 1;
  }
  std::size_t term_span() const noexcept { return coeffs_.size(); }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  Integer coeff(Degree exponent) const;

  // Present iff the value is exactly +-t^e.
  std::optional<UnitMonomial> as_unit_monomial() const;
  // Single-term check: c * t^e for some nonzero integer c.
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }

  LaurentPoly shifted(Degree by) const;
  LaurentPoly negated() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a) { return a.negated(); }

  bool operator==(const LaurentPoly& rhs) const = default;

  std::size_t hash() const noexcept;

 private:
  LaurentPoly(Degree min_deg, std::vector<Integer> coeffs);
  void trim();

  Degree               min_deg_ = 0;
  std::vector<Integer> coeffs_;

  friend class PolyAccumulator;
};

/// Dense scratch buffer for sums of products over a known degree window.
/// Used by matrix products so each entry allocates once.
class PolyAccumulator {
 public:
  PolyAccumulator(Degree lo, Degree hi);
  void add_product(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly take();

 private:
  Degree               lo_;
  std::vector<Integer> buf_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
std::optional<UnitMonomial> is_unit_monomial(const LaurentPoly& a);

}  // namespace burau4

template <>
struct std::hash<burau4::LaurentPoly> {
  std::size_t operator()(const burau4::LaurentPoly& p) const noexcept { return p.hash(); }
};
