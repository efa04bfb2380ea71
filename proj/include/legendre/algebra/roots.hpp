#pragma once

#include <string>
#include <vector>

#include "legendre/algebra/multipoly.hpp"

namespace legendre::algebra {

struct RationalRoot {
  Rational value;
  unsigned multiplicity = 0;
};

struct RootSet {
  bool identically_zero = false;
  std::vector<RationalRoot> roots;  // ascending
  unsigned degree = 0;
  /// Multiplicities add up to the degree, i.e. the polynomial splits over Q.
  bool splits = false;
};

/// Rational roots of a univariate polynomial via the rational root theorem,
/// with multiplicities from repeated exact deflation. Throws
/// std::invalid_argument if `p` mentions a variable other than `variable`.
RootSet rational_roots(const MultiPoly& p, const std::string& variable);

}  // namespace legendre::algebra
