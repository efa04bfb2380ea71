#pragma once

#include "legendre/algebra/multipoly.hpp"
#include "legendre/algebra/poly_map.hpp"
#include "legendre/core/report.hpp"

namespace legendre::proof {

using algebra::LegendrianPolyMap;
using algebra::MultiPoly;

class NotExactError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Primitive of sum_i b~_i d theta~_i under the frontal rule, with symbolic
/// t_1..t_n. Throws NotExactError if the form has no primitive.
MultiPoly derive_tilde_a(int n);

/// sum_i [t_i(t_i-1)/2 theta_i^2 + t_i(2-t_i) theta_i b_i + (1-t_i)(2-t_i)/2 b_i^2] - a
MultiPoly displayed_tilde_a(int n);

/// The family map with the derived a-component.
LegendrianPolyMap derived_family(int n);

Report verify_tilde_a(int n);

/// Coefficients of theta_i^2, theta_i b_i, b_i^2 in F_2 applied to the
/// transformed data, minus a.
struct PCoefficients {
  MultiPoly theta2;
  MultiPoly theta_b;
  MultiPoly b2;
};

/// P-coefficients for index i of the given n, computed by substitution.
PCoefficients computed_p_coefficients(int n, int i);

/// The four-term expansions as displayed, in t_i.
PCoefficients displayed_p_expansions(int i);

/// The closed forms claimed for them: 0, 0, t(t-1)(2-t)^2/2.
PCoefficients claimed_p_closed_forms(int i);

struct PCheckOptions {
  /// Negative control: flips the sign of the third term of the displayed
  /// b^2 expansion.
  bool mutate_b2_expansion = false;
};

Report verify_p_polynomials(int n, const PCheckOptions& options = {});

Report verify_case_conclusions(int n);

Report verify_legendre_involution(int n);

}  // namespace legendre::proof
