#pragma once

#include <array>
#include <string>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/identities.hpp"
#include "burau4/matrix3.hpp"

namespace burau4 {

/// Fixed matrices of the reduced Burau representation of B4.
struct BurauConstants {
  std::array<Mat3, 3> gen;      // rho(s1), rho(s2), rho(s3)
  std::array<Mat3, 3> gen_inv;  // their inverses, entered by hand
  Mat3 A;                       // rho(alpha), printed form
  Mat3 B;                       // rho(beta), printed form
  Mat3 T;                       // order-four integer matrix conjugating B to A
  Mat3 T_bar;                   // rho(tau) = t*T
  Mat3 D;                       // rho(Delta), computed from gen
};

// Built once on first use; immutable afterwards.
const BurauConstants& burau_constants();

/// rho(g1 g2 ... gn) = rho(gn) * ... * rho(g2) * rho(g1).
///
/// The reversed product is the convention under which rho(s1 s2 s3) is
/// T_bar and rho(s3 s1^-1) is B.  Inverse letters use the hard-coded
/// inverse matrices; nothing is ever inverted by elimination.
Mat3 burau_eval(const BraidWord& w);

/// Every matrix-level identity the artifact relies on, checked exactly.
/// Failures become report entries, never exceptions.
std::vector<IdentityCheck> verify_matrix_identities(const BurauConstants& c = burau_constants());

}  // namespace burau4
