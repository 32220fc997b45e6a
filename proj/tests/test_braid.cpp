#include <catch_amalgamated.hpp>

#include "burau4/braid.hpp"
#include "burau4/word_syntax.hpp"
#include "generators.hpp"

using namespace burau4;
using burau4::testing::Gen;

namespace {

BraidWord W(std::string_view s) { return parse_braid_word(s); }

}  // namespace

TEST_CASE("free_reduce examples", "[braid]") {
  CHECK(free_reduce(BraidWord{1, -1}).empty());
  CHECK(free_reduce(BraidWord{3, -1, 1, 2}) == BraidWord{3, 2});
  CHECK(free_reduce(named::delta().inverse() * named::delta()).empty());
  CHECK(free_reduce(BraidWord{1, 2, -2, 3, -3, -1, 2}) == BraidWord{2});
  CHECK(free_reduce(BraidWord{1, 1}) == BraidWord{1, 1});
}

TEST_CASE("named elements", "[braid]") {
  CHECK(named::alpha() == BraidWord{1, 2, -3, 1, -2, -1});
  CHECK(named::beta() == BraidWord{3, -1});
  CHECK(named::tau() == BraidWord{1, 2, 3});
  CHECK(named::delta() == BraidWord{1, 2, 3, 1, 2, 1});
  CHECK(named::theta() == named::tau().pow(4));
  CHECK(named::theta().size() == 12);
  CHECK(named::sigma(2) == BraidWord{2});
  CHECK_THROWS(named::sigma(4));
  CHECK_THROWS(BraidWord{0});
  CHECK_THROWS(BraidWord{4});
}

TEST_CASE("word operations", "[braid]") {
  const BraidWord a = named::alpha();
  CHECK(a.inverse() == BraidWord{1, 2, -1, 3, -2, -1});
  CHECK(a.inverse().inverse() == a);
  CHECK(a.exponent_sum() == 0);
  CHECK(named::delta().exponent_sum() == 6);
  CHECK(named::tau().pow(-1) == named::tau().inverse());
  CHECK(named::tau().pow(0).empty());
  CHECK(named::tau().pow(2) == named::tau() * named::tau());
  CHECK(BraidWord{1, 2, -3}.to_string() == "1 2 -3");
  CHECK(BraidWord().to_string().empty());
}

TEST_CASE("artin_image examples", "[braid]") {
  CHECK(artin_image(BraidWord()) == artin_identity());
  const ArtinImage s1 = artin_image(BraidWord{1});
  CHECK(s1[0] == FreeWord{1, 2, -1});
  CHECK(s1[1] == FreeWord{1});
  CHECK(s1[2] == FreeWord{3});
  CHECK(s1[3] == FreeWord{4});
  const ArtinImage s1i = artin_image(BraidWord{-1});
  CHECK(s1i[0] == FreeWord{2});
  CHECK(s1i[1] == FreeWord{-2, 1, 2});
  CHECK(artin_image(BraidWord{1, 2, 1}) == artin_image(BraidWord{2, 1, 2}));
  CHECK(s1[0].to_string() == "x1 x2 x1^-1");
  CHECK(FreeWord().to_string() == "1");
}

TEST_CASE("free words stay reduced", "[braid]") {
  FreeWord w{1, 2};
  w.push_back(-2);
  CHECK(w == FreeWord{1});
  w.append_inverse(FreeWord{1});
  CHECK(w.empty());
  FreeWord v{1, -3, 2};
  FreeWord u = v;
  u.append(v.inverse());
  CHECK(u.empty());
}

TEST_CASE("braid_eq examples", "[braid]") {
  CHECK(braid_eq(named::alpha(), W("t^-1 b t")));
  CHECK(braid_eq(named::beta().inverse(), W("t^2 b t^-2")));
  CHECK_FALSE(braid_eq(BraidWord{1}, BraidWord{2}));
  CHECK_FALSE(braid_eq(BraidWord{1, 2}, BraidWord{2, 1}));
  CHECK_FALSE(braid_eq(BraidWord{1, 1}, BraidWord()));
}

TEST_CASE("braid relations", "[braid]") {
  for (int i = 1; i <= 2; ++i) {
    CHECK(braid_eq(BraidWord{i, i + 1, i}, BraidWord{i + 1, i, i + 1}));
    // Inverse and mixed moves.
    CHECK(braid_eq(BraidWord{-(i + 1), -i, i + 1}, BraidWord{i, -(i + 1), -i}));
    CHECK(braid_eq(BraidWord{-(i + 1), i, i + 1}, BraidWord{i, i + 1, -i}));
  }
  CHECK(braid_eq(BraidWord{1, 3}, BraidWord{3, 1}));
  CHECK_FALSE(braid_eq(BraidWord{1, 2}, BraidWord{2, 1}));
}

TEST_CASE("substitutions for alpha and beta", "[braid]") {
  CHECK(braid_eq(named::beta(), W("d^-1 t^2")));
  CHECK(braid_eq(named::alpha(), W("t^-1 d^-1 t^3")));
  CHECK(braid_eq(named::alpha().inverse(), W("t d^-1 t")));
  CHECK(braid_eq(named::beta().inverse(), W("t^2 d^-1")));
  CHECK(braid_eq(W("t^4"), W("d^2")));
  CHECK(braid_eq(W("d^2"), named::theta()));
}

TEST_CASE("Delta conjugates s1 to s3", "[braid]") {
  const BraidWord d = named::delta();
  CHECK(braid_eq(d * BraidWord{1} * d.inverse(), BraidWord{3}));
  CHECK(braid_eq(d * BraidWord{2} * d.inverse(), BraidWord{2}));
}

TEST_CASE("is_central examples", "[braid]") {
  CHECK(is_central(named::theta()));
  CHECK(is_central(named::theta().inverse()));
  CHECK_FALSE(is_central(named::delta()));
  CHECK(is_central(BraidWord()));
  CHECK_FALSE(is_central(named::tau()));
  CHECK(is_central(named::delta().pow(2)));
}

TEST_CASE("artin_image is multiplicative", "[braid][property]") {
  Gen g(0xb4a1);
  for (int i = 0; i < 300; ++i) {
    const BraidWord u = g.braid(10);
    const BraidWord v = g.braid(10);
    CHECK(artin_image(u * v) == artin_compose(artin_image(u), artin_image(v)));
  }
}

TEST_CASE("relation rewrites preserve equality", "[braid][property]") {
  Gen g(0xb4a2);
  for (int i = 0; i < 200; ++i) {
    const BraidWord u = g.braid(12);
    BraidWord v = u;
    for (int r = g.uniform(1, 3); r > 0; --r) {
      v = g.rewrite(v);
    }
    CHECK(braid_eq(u, v));
    CHECK(braid_eq(v, u));
    // A single extra letter changes the exponent sum, so never equal.
    CHECK_FALSE(braid_eq(u * BraidWord{g.uniform(1, 3)}, v));
  }
}

TEST_CASE("word grammar", "[braid][syntax]") {
  CHECK(W("1 2 -3") == BraidWord{1, 2, -3});
  CHECK(W("b^-1 a b") == named::beta().inverse() * named::alpha() * named::beta());
  CHECK(W("q") == named::theta());
  CHECK(W("d^-2") == named::delta().pow(-2));
  CHECK(W("-1^3") == BraidWord{-1, -1, -1});
  CHECK(W("2^-2") == BraidWord{-2, -2});
  CHECK(W("t^0").empty());
  CHECK(W("").empty());
  CHECK(W("  1\n\t2  ") == BraidWord{1, 2});

  const auto tokens = tokenize_word("a^2\n  -3");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].atom == WordAtom::Alpha);
  CHECK(tokens[0].exponent == 2);
  CHECK(tokens[1].atom == WordAtom::Generator);
  CHECK(tokens[1].generator == -3);
  CHECK(tokens[1].line == 2);
  CHECK(tokens[1].column == 3);
}

TEST_CASE("word grammar errors report line and column", "[braid][syntax]") {
  auto where = [](std::string_view text) {
    try {
      parse_braid_word(text);
    } catch (const WordParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(where("1 4") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(where("1 2\n  x") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(where("a^") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(where("12") == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(where("t^-") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(where("b -0") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(where("-") == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(where("1 2 3") == std::pair<std::size_t, std::size_t>{0, 0});
  try {
    parse_braid_word("1 2\n  x");
    FAIL("no error");
  } catch (const WordParseError& e) {
    CHECK(std::string(e.what()).starts_with("line 2, column 3: "));
  }
}

TEST_CASE("word grammar round trip", "[braid][syntax][property]") {
  for (const auto& w : {named::alpha(), named::beta(), named::tau(), named::delta(),
                        named::theta(), BraidWord()}) {
    CHECK(W(format_braid_word(w)) == w);
  }
  Gen g(0xb4a3);
  for (int i = 0; i < 500; ++i) {
    const BraidWord w = g.braid(20);
    CHECK(W(format_braid_word(w)) == w);
    CHECK(W(w.to_string()) == w);
  }
}
