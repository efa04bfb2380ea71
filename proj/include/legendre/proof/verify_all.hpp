#pragma once

#include <string>
#include <vector>

#include "legendre/core/report.hpp"

namespace legendre::proof {

enum class Mutation {
  none,
  p_b2,     // perturbs the displayed b^2 expansion
  eq3_rhs,  // third equation of the quadratic system gets right-hand side 2
};

/// Parses "none", "P_b2", "eq3". Throws std::invalid_argument.
Mutation parse_mutation(const std::string& text);

/// Every proof check; the n-dependent ones run for each n in 1..max_n.
std::vector<Report> verify_all(int max_n, Mutation mutation = Mutation::none);

}  // namespace legendre::proof
