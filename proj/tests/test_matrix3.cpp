#include <catch_amalgamated.hpp>

#include "burau4/burau.hpp"
#include "burau4/matrix3.hpp"
#include "generators.hpp"

using namespace burau4;
using burau4::testing::Gen;

namespace {

LaurentPoly m(long long c, Degree e) { return LaurentPoly::monomial(c, e); }
const BurauConstants& C() { return burau_constants(); }

}  // namespace

TEST_CASE("mat_mul examples", "[matrix3]") {
  CHECK(mat_mul(mat_mul(C().T, C().T), mat_mul(C().T, C().T)) == Mat3::identity());
  CHECK(mat_mul(Mat3::identity(), C().B) == C().B);
  CHECK(mat_mul(C().gen[0], C().gen_inv[0]) == Mat3::identity());
}

TEST_CASE("det examples", "[matrix3]") {
  CHECK(det(C().gen[0]) == m(-1, 1));
  CHECK(det(Mat3::identity()) == LaurentPoly(1));
  CHECK(det(C().T_bar) == m(-1, 3));
  CHECK(det(C().T) == LaurentPoly(-1));
}

TEST_CASE("as_scalar examples", "[matrix3]") {
  CHECK(as_scalar(Mat3::scalar(m(1, 4))) == m(1, 4));
  CHECK_FALSE(as_scalar(C().B));
  CHECK(as_scalar(C().D * C().D) == m(1, 4));
  CHECK(as_scalar(Mat3{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}) == LaurentPoly(2));
  CHECK_FALSE(as_scalar(Mat3{{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  CHECK_FALSE(as_scalar(Mat3{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}));
  CHECK(as_scalar(Mat3::scalar(LaurentPoly())) == LaurentPoly());
}

TEST_CASE("canonicalize examples", "[matrix3]") {
  CHECK(canonicalize(C().T_bar) == canonicalize(C().T));
  CHECK(canonicalize(C().T.scaled(LaurentPoly(-1))) == canonicalize(C().T));
  CHECK_FALSE(canonicalize(C().A) == canonicalize(C().B));
  CHECK(projective_pivot(C().T_bar) == UnitMonomial{-1, 1});
  CHECK_FALSE(projective_pivot(Mat3::scalar(LaurentPoly())));
}

TEST_CASE("canonicalize ignores unit monomial factors", "[matrix3][property]") {
  Gen g(0x3a7e1);
  for (int i = 0; i < 300; ++i) {
    const Mat3 a = i % 2 == 0 ? g.generator_product(8) : g.poly_matrix();
    const LaurentPoly u = g.unit_monomial();
    const ProjKey k = canonicalize(a);
    CHECK(canonicalize(a.scaled(u)) == k);
    CHECK(canonicalize(a.shifted(3)) == k);
    CHECK(canonicalize(a.scaled(LaurentPoly(-1))) == k);
    CHECK(k.hash() == canonicalize(a.scaled(u)).hash());
    if (auto p = projective_pivot(a)) {
      CHECK(k.representative().scaled(m(p->sign, p->exponent)) == a);
    }
  }
}

TEST_CASE("canonicalize separates non-associated matrices", "[matrix3][property]") {
  Gen g(0x3a7e2);
  for (int i = 0; i < 300; ++i) {
    const Mat3 a = g.generator_product(6);
    // 2 is not a unit, so 2a is never projectively equal to a.
    CHECK_FALSE(canonicalize(a.scaled(LaurentPoly(2))) == canonicalize(a));
  }
}

TEST_CASE("det is multiplicative", "[matrix3][property]") {
  Gen g(0x3a7e3);
  for (int i = 0; i < 200; ++i) {
    const Mat3 a = g.generator_product(6);
    const Mat3 b = g.generator_product(6);
    CHECK(det(a * b) == det(a) * det(b));
    const Mat3 p = g.poly_matrix();
    const Mat3 q = g.poly_matrix();
    CHECK(det(p * q) == det(p) * det(q));
  }
}

TEST_CASE("mat_mul is associative", "[matrix3][property]") {
  Gen g(0x3a7e4);
  for (int i = 0; i < 200; ++i) {
    const Mat3 a = g.generator_product(5);
    const Mat3 b = g.generator_product(5);
    const Mat3 c = g.generator_product(5);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("scalars commute", "[matrix3][property]") {
  Gen g(0x3a7e5);
  for (int i = 0; i < 100; ++i) {
    const Mat3 s = Mat3::scalar(g.poly());
    REQUIRE(as_scalar(s));
    const Mat3 b = g.poly_matrix();
    CHECK(s * b == b * s);
  }
}

TEST_CASE("pow", "[matrix3]") {
  CHECK(C().T_bar.pow(4) == Mat3::scalar(m(1, 4)));
  CHECK(C().A.pow(0) == Mat3::identity());
  CHECK(C().A.pow(3) == C().A * C().A * C().A);
}

TEST_CASE("text form", "[matrix3]") {
  CHECK(C().gen[0].to_string() == "-t, t, 0; 0, 1, 0; 0, 0, 1");
  CHECK(Mat3::parse("-t, t, 0; 0, 1, 0; 0, 0, 1") == C().gen[0]);
  CHECK(Mat3::parse(C().A.to_string()) == C().A);
  CHECK_THROWS_AS(Mat3::parse("1, 0; 0, 1"), MatrixParseError);
  CHECK_THROWS_AS(Mat3::parse("1, 0, 0; 0, 1, 0; 0, 0"), MatrixParseError);
  CHECK_THROWS(Mat3::parse("1, 0, 0; 0, 1, 0; 0, 0, x"));
}

TEST_CASE("text round trip on random inputs", "[matrix3][property]") {
  Gen g(0x3a7e6);
  for (int i = 0; i < 200; ++i) {
    const Mat3 a = i % 2 == 0 ? g.generator_product(10) : g.poly_matrix(4);
    CHECK(Mat3::parse(a.to_string()) == a);
    CHECK(Mat3::parse(a.to_string()).to_string() == a.to_string());
  }
}
