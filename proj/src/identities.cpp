#include "burau4/identities.hpp"

#include <utility>

#include "burau4/braid.hpp"
#include "burau4/word_syntax.hpp"

namespace burau4 {

std::vector<IdentityCheck> verify_braid_identities() {
  std::vector<IdentityCheck> out;
  auto eq = [&](std::string name, const std::string& lhs, const std::string& rhs) {
    bool ok = braid_eq(parse_braid_word(lhs), parse_braid_word(rhs));
    out.push_back({std::move(name), lhs + "  =  " + rhs, ok});
  };

  eq("braid relation s1 s2", "1 2 1", "2 1 2");
  eq("braid relation s2 s3", "2 3 2", "3 2 3");
  eq("far commutation", "1 3", "3 1");

  eq("alpha = tau^-1 beta tau", "a", "t^-1 b t");
  eq("alpha^-1 = tau beta tau^-1", "a^-1", "t b t^-1");
  eq("beta^-1 = tau^2 beta tau^-2", "b^-1", "t^2 b t^-2");

  for (int i = 1; i <= 2; ++i) {
    const std::string s = std::to_string(i);
    const std::string n = std::to_string(i + 1);
    eq("inverse move (i=" + s + ")", "-" + n + " -" + s + " " + n, s + " -" + n + " -" + s);
    eq("mixed move (i=" + s + ")", "-" + n + " " + s + " " + n, s + " " + n + " -" + s);
  }

  eq("beta = Delta^-1 tau^2", "b", "d^-1 t^2");
  eq("alpha = tau^-1 Delta^-1 tau^3", "a", "t^-1 d^-1 t^3");
  eq("alpha^-1 = tau Delta^-1 tau", "a^-1", "t d^-1 t");
  eq("beta^-1 = tau^2 Delta^-1", "b^-1", "t^2 d^-1");
  eq("Delta^-1 tau^2 = s1^-1 s3", "d^-1 t^2", "-1 3");
  eq("s1^-1 s3 = beta", "-1 3", "b");

  eq("tau^4 = theta", "t^4", "q");
  eq("Delta^2 = theta", "d^2", "q");
  eq("tau^4 = Delta^2", "t^4", "d^2");

  out.push_back({"theta central", "q commutes with 1, 2, 3", is_central(named::theta())});
  return out;
}

}  // namespace burau4
