#include "legendre/proof/verify_all.hpp"

#include <stdexcept>

#include "legendre/proof/identities.hpp"
#include "legendre/proof/quad_system.hpp"

namespace legendre::proof {

Mutation parse_mutation(const std::string& text) {
  if (text.empty() || text == "none") return Mutation::none;
  if (text == "P_b2") return Mutation::p_b2;
  if (text == "eq3") return Mutation::eq3_rhs;
  throw std::invalid_argument("unknown mutation '" + text + "' (expected none, P_b2, eq3)");
}

std::vector<Report> verify_all(int max_n, Mutation mutation) {
  if (max_n < 1) throw std::invalid_argument("verify_all: n must be positive");
  std::vector<Report> out;
  out.push_back(verify_fixed_point_restriction());
  out.push_back(verify_equation_redundancy());
  QuadSystem system = QuadSystem::standard();
  if (mutation == Mutation::eq3_rhs) system.rhs[2] = Rational(2);
  out.push_back(verify_solution_set_complete(system));
  PCheckOptions popts;
  popts.mutate_b2_expansion = mutation == Mutation::p_b2;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(verify_tilde_a(n));
    out.push_back(verify_p_polynomials(n, popts));
    out.push_back(verify_case_conclusions(n));
    out.push_back(verify_legendre_involution(n));
  }
  return out;
}

}  // namespace legendre::proof
