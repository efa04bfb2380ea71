#pragma once

#include <stdexcept>
#include <vector>

#include "legendre/algebra/rational.hpp"
#include "legendre/core/report.hpp"
#include "legendre/frontal/engine.hpp"
#include "legendre/frontal/legendrian_data.hpp"

namespace legendre::lab {

class DegenerateLambda : public std::invalid_argument {
 public:
  DegenerateLambda() : std::invalid_argument("lambda = -1/2 makes 1 + 2 lambda vanish") {}
};

/// Determinant of the Jacobian of polynomials in x1..xn (Leibniz expansion).
algebra::MultiPoly jacobian_determinant(const std::vector<algebra::MultiPoly>& f);

/// Identity-based Y element (x, |x|^2/2, x) in n variables.
frontal::LegendrianData gy_quadratic(int n);

struct FixedCoordinateCounterexample {
  frontal::LegendrianData base;
  frontal::LegendrianData perturbed;  // base + lambda (0, theta_i0^2, 2 theta_i0 e_i0)
  Report report;
};

/// Perturbs (x, |x|^2/2, x) in coordinate i0 (1-based) so that it leaves Y
/// but stays generic, and checks that a transform acting as the identity on
/// (theta_i0, b_i0) and by the linear family with `others` elsewhere leaves
/// theta and b unchanged.
FixedCoordinateCounterexample fixed_coordinate_counterexample(int n, int i0, const algebra::Rational& lambda,
                                                              const frontal::GridSpec& grid,
                                                              const algebra::Rational& others = 1);

struct CollapseDemo {
  frontal::LegendrianData input;
  frontal::LegendrianData output;
  frontal::GenericityReport input_probe;
  frontal::GenericityReport output_probe;
  double max_abs_collapsed = 0.0;  // over grid samples of the sampled pipeline
  Report report;
};

/// Input (x, sum x_i^2, 2x), t_i0 = 2 and t_j = 1 otherwise: b~_i0 = 0.
CollapseDemo b_collapse_demo(int n, int i0, const frontal::GridSpec& grid);

/// Input (2x, sum x_i^2, x), the Legendre image of the above, t_i0 = 0 and
/// t_j = 1 otherwise: theta~_i0 = 0.
CollapseDemo theta_collapse_demo(int n, int i0, const frontal::GridSpec& grid);

}  // namespace legendre::lab
