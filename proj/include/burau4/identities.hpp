#pragma once

#include <string>
#include <vector>

namespace burau4 {

struct IdentityCheck {
  std::string name;       // short identifier, e.g. "A = T B T^-1"
  std::string statement;  // what was compared
  bool        passed = false;
};

/// Braid-level identities among s1..s3, alpha, beta, tau, Delta and theta,
/// each certified by the Artin-action oracle.
std::vector<IdentityCheck> verify_braid_identities();

}  // namespace burau4
