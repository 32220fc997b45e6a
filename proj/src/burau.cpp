#include "burau4/burau.hpp"

#include <utility>

namespace burau4 {

namespace {

LaurentPoly tp(long long coeff, Degree e) { return LaurentPoly::monomial(coeff, e); }

Mat3 make(std::initializer_list<LaurentPoly> entries) {
  std::array<LaurentPoly, 9> e;
  std::size_t i = 0;
  for (const auto& p : entries) {
    e[i++] = p;
  }
  return Mat3(std::move(e));
}

BurauConstants build_constants() {
  const LaurentPoly kZero;
  const LaurentPoly kOne(1);
  BurauConstants c;
  c.gen[0] = make({tp(-1, 1), tp(1, 1), kZero,  //
                   kZero, kOne, kZero,          //
                   kZero, kZero, kOne});
  c.gen[1] = make({kOne, kZero, kZero,          //
                   kOne, tp(-1, 1), tp(1, 1),   //
                   kZero, kZero, kOne});
  c.gen[2] = make({kOne, kZero, kZero,  //
                   kZero, kOne, kZero,  //
                   kZero, kOne, tp(-1, 1)});

  c.gen_inv[0] = make({tp(-1, -1), kOne, kZero,  //
                       kZero, kOne, kZero,       //
                       kZero, kZero, kOne});
  c.gen_inv[1] = make({kOne, kZero, kZero,                  //
                       tp(1, -1), tp(-1, -1), kOne,         //
                       kZero, kZero, kOne});
  c.gen_inv[2] = make({kOne, kZero, kZero,  //
                       kZero, kOne, kZero,  //
                       kZero, tp(1, -1), tp(-1, -1)});

  c.A = make({kZero, kZero, tp(-1, -1),                   //
              kZero, tp(-1, 1), tp(-1, -1) + tp(1, 1),    //
              tp(-1, 0), kZero, tp(-1, -1) + kOne});
  c.B = make({tp(-1, -1), kOne, kZero,  //
              kZero, kOne, kZero,       //
              kZero, kOne, tp(-1, 1)});
  c.T = Mat3{{-1, 1, 0}, {-1, 0, 1}, {-1, 0, 0}};
  c.T_bar = make({tp(-1, 1), tp(1, 1), kZero,  //
                  tp(-1, 1), kZero, tp(1, 1),  //
                  tp(-1, 1), kZero, kZero});

  Mat3 d = Mat3::identity();
  const BraidWord delta = named::delta();
  for (const auto& l : delta.letters()) {
    d = c.gen[static_cast<std::size_t>(l.index - 1)] * d;
  }
  c.D = std::move(d);
  return c;
}

}  // namespace

const BurauConstants& burau_constants() {
  static const BurauConstants constants = build_constants();
  return constants;
}

Mat3 burau_eval(const BraidWord& w) {
  const auto& c = burau_constants();
  Mat3 m = Mat3::identity();
  for (const auto& l : w.letters()) {
    const auto i = static_cast<std::size_t>(l.index - 1);
    m = (l.sign > 0 ? c.gen[i] : c.gen_inv[i]) * m;
  }
  return m;
}

std::vector<IdentityCheck> verify_matrix_identities(const BurauConstants& c) {
  std::vector<IdentityCheck> out;
  auto check = [&](std::string name, std::string statement, bool ok) {
    out.push_back({std::move(name), std::move(statement), ok});
  };

  const Mat3 I = Mat3::identity();
  const Mat3 t4 = Mat3::scalar(LaurentPoly::monomial(1, 4));
  const Mat3 T2 = c.T * c.T;
  const Mat3 T_inv = T2 * c.T;
  const Mat3 A_inv = burau_eval(named::alpha().inverse());
  const Mat3 B_inv = burau_eval(named::beta().inverse());

  for (std::size_t i = 0; i < 3; ++i) {
    check("rho(s" + std::to_string(i + 1) + ") inverse",
          "rho(s" + std::to_string(i + 1) + ") * rho(s" + std::to_string(i + 1) + ")^-1 = I",
          c.gen[i] * c.gen_inv[i] == I && c.gen_inv[i] * c.gen[i] == I);
  }
  check("rho(alpha) = A", "burau_eval(a) = A", burau_eval(named::alpha()) == c.A);
  check("rho(beta) = B", "burau_eval(b) = B", burau_eval(named::beta()) == c.B);
  check("rho(tau) = T_bar", "burau_eval(t) = T_bar", burau_eval(named::tau()) == c.T_bar);
  check("T order four", "T^4 = I and T^2 != I", T2 * T2 == I && T2 != I);
  check("A inverse", "rho(alpha) * rho(alpha^-1) = I", c.A * A_inv == I);
  check("B inverse", "rho(beta) * rho(beta^-1) = I", c.B * B_inv == I);
  check("A = T B T^-1", "A = T * B * T^3", c.A == c.T * c.B * T_inv);
  check("A^-1 = T^-1 B T", "rho(alpha^-1) = T^3 * B * T", A_inv == T_inv * c.B * c.T);
  check("B^-1 = T^2 B T^2", "rho(beta^-1) = T^2 * B * T^2", B_inv == T2 * c.B * T2);
  check("T_bar = t T", "T_bar = t * T entrywise", c.T_bar == c.T.shifted(1));
  check("T_bar^4 = t^4 I", "T_bar^4 = t^4 * I", c.T_bar.pow(4) == t4);
  check("D^2 = t^4 I", "D^2 = t^4 * I", c.D * c.D == t4);
  check("B = rho(Delta^-1 tau^2)", "B = rho(d^-1 t^2)",
        c.B == burau_eval(named::delta().inverse() * named::tau().pow(2)));
  check("rho(theta) = t^4 I", "rho(q) = t^4 * I", burau_eval(named::theta()) == t4);
  return out;
}

}  // namespace burau4
