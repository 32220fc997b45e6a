#include "burau4/matrix3.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace burau4 {

Mat3::Mat3(std::initializer_list<std::initializer_list<long long>> rows) {
  if (rows.size() != 3) {
    throw std::invalid_argument("Mat3 needs 3 rows");
  }
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != 3) {
      throw std::invalid_argument("Mat3 rows need 3 entries");
    }
    std::size_t c = 0;
    for (long long v : row) {
      (*this)(r, c++) = LaurentPoly(v);
    }
    ++r;
  }
}

Mat3 Mat3::identity() { return scalar(LaurentPoly(1)); }

Mat3 Mat3::scalar(const LaurentPoly& c) {
  Mat3 m;
  m(0, 0) = c;
  m(1, 1) = c;
  m(2, 2) = c;
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      Degree lo = std::numeric_limits<Degree>::max();
      Degree hi = std::numeric_limits<Degree>::min();
      for (std::size_t k = 0; k < 3; ++k) {
        const auto& x = a(r, k);
        const auto& y = b(k, c);
        if (x.is_zero() || y.is_zero()) {
          continue;
        }
        lo = std::min(lo, x.min_deg() + y.min_deg());
        hi = std::max(hi, x.max_deg() + y.max_deg());
      }
      if (lo > hi) {
        continue;
      }
      PolyAccumulator acc(lo, hi);
      for (std::size_t k = 0; k < 3; ++k) {
        acc.add_product(a(r, k), b(k, c));
      }
      out(r, c) = acc.take();
    }
  }
  return out;
}

Mat3 Mat3::scaled(const LaurentPoly& c) const {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) {
    out.e_[i] = e_[i] * c;
  }
  return out;
}

Mat3 Mat3::shifted(Degree by) const {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) {
    out.e_[i] = e_[i].shifted(by);
  }
  return out;
}

Mat3 Mat3::pow(unsigned n) const {
  Mat3 result = identity();
  Mat3 base = *this;
  while (n != 0) {
    if (n & 1U) {
      result = result * base;
    }
    n >>= 1U;
    if (n != 0) {
      base = base * base;
    }
  }
  return result;
}

bool Mat3::off_diagonal_zero() const {
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

std::optional<LaurentPoly> Mat3::as_scalar() const {
  if (!off_diagonal_zero()) {
    return std::nullopt;
  }
  if (e_[0] != e_[4] || e_[0] != e_[8]) {
    return std::nullopt;
  }
  return e_[0];
}

LaurentPoly Mat3::det() const {
  const Mat3& m = *this;
  LaurentPoly d = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  d -= m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0));
  d += m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return d;
}

std::string Mat3::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < 3; ++r) {
    if (r != 0) {
      out += "; ";
    }
    for (std::size_t c = 0; c < 3; ++c) {
      if (c != 0) {
        out += ", ";
      }
      out += (*this)(r, c).to_string();
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Mat3 Mat3::parse(std::string_view text) {
  auto rows = split(text, ';');
  if (rows.size() != 3) {
    throw MatrixParseError("expected 3 rows separated by ';', got " +
                           std::to_string(rows.size()));
  }
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    auto cells = split(rows[r], ',');
    if (cells.size() != 3) {
      throw MatrixParseError("row " + std::to_string(r + 1) + ": expected 3 entries, got " +
                             std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < 3; ++c) {
      try {
        m(r, c) = LaurentPoly::parse(cells[c]);
      } catch (const LaurentParseError& e) {
        throw MatrixParseError("entry (" + std::to_string(r + 1) + "," +
                               std::to_string(c + 1) + "): " + e.what());
      }
    }
  }
  return m;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) { return a * b; }
LaurentPoly det(const Mat3& a) { return a.det(); }
std::optional<LaurentPoly> as_scalar(const Mat3& a) { return a.as_scalar(); }

std::optional<UnitMonomial> projective_pivot(const Mat3& a) {
  for (const auto& e : a.entries()) {
    if (!e.is_zero()) {
      int sign = e.coeffs().front() < 0 ? -1 : +1;
      return UnitMonomial{sign, e.min_deg()};
    }
  }
  return std::nullopt;
}

ProjKey canonicalize(const Mat3& a) {
  auto pivot = projective_pivot(a);
  if (!pivot) {
    return ProjKey(a);
  }
  Mat3 rep = a.shifted(-pivot->exponent);
  if (pivot->sign < 0) {
    rep = rep.scaled(LaurentPoly(-1));
  }
  return ProjKey(std::move(rep));
}

std::size_t ProjKey::hash() const noexcept {
  std::size_t h = 0;
  for (const auto& e : rep_.entries()) {
    h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace burau4
