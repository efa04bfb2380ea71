#include "legendre/lab/membership.hpp"

#include <algorithm>
#include <cmath>

#include "legendre/lab/transforms.hpp"

namespace legendre::lab {

using algebra::MultiPoly;
using frontal::Vec;

namespace {

std::string x_var(int j) { return "x" + std::to_string(j); }

bool creative_exact(const frontal::Symbolic& s, int n) {
  for (int j = 1; j <= n; ++j) {
    MultiPoly r = s.a.derivative(x_var(j));
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      r -= s.b[k] * s.theta[k].derivative(x_var(j));
    }
    if (!r.trimmed().is_zero()) return false;
  }
  return true;
}

bool fixed_exact(const frontal::Symbolic& s, int n) {
  MultiPoly half_sq;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (!(s.b[k] - s.theta[k]).trimmed().is_zero()) return false;
    half_sq += s.theta[k] * s.theta[k];
  }
  return (MultiPoly(algebra::Rational(1, 2)) * half_sq - s.a).trimmed().is_zero();
}

double fixed_residual(const frontal::Sampled& s) {
  double worst = 0.0;
  for (std::size_t k = 0; k < s.theta.size(); ++k) {
    const double db = (s.b[k] - s.theta[k]).cwiseAbs().maxCoeff();
    const double da = std::abs(s.a[k] - 0.5 * s.theta[k].squaredNorm());
    worst = std::max({worst, db, da});
    if (std::isnan(db) || std::isnan(da)) return NAN;
  }
  return worst;
}

}  // namespace

MembershipVerdict membership(const frontal::LegendrianData& d, const frontal::GridSpec& grid,
                             std::optional<double> tol) {
  MembershipVerdict v;
  v.creative_tolerance = tol.value_or(d.exact_derivatives() ? 1e-9 : frontal::default_tolerance(d, grid));
  v.fixed_tolerance = tol.value_or(d.sampled() ? frontal::default_tolerance(grid) : 1e-9);

  const auto creative = frontal::creative_check(d, grid, v.creative_tolerance);
  v.creative_residual = creative.details["max_residual"].get<double>();
  v.fixed_residual = fixed_residual(d.sample(grid));
  v.genericity = frontal::genericity_probe(d, grid);

  if (const auto* s = d.symbolic()) {
    v.exact = true;
    v.in_X = creative_exact(*s, d.n());
    v.in_Y = fixed_exact(*s, d.n());
  } else {
    v.in_X = v.creative_residual <= v.creative_tolerance;
    v.in_Y = v.fixed_residual <= v.fixed_tolerance;
  }
  v.in_GY = v.in_Y && v.in_GX();
  return v;
}

nlohmann::ordered_json to_json(const MembershipVerdict& v) {
  nlohmann::ordered_json j;
  j["in_X"] = v.in_X;
  j["in_GX"] = v.in_GX();
  j["in_Y"] = v.in_Y;
  j["in_GY"] = v.in_GY;
  j["exact"] = v.exact;
  j["genericity"] = {{"fraction_regular_theta", v.genericity.fraction_regular_theta},
                     {"fraction_regular_b", v.genericity.fraction_regular_b},
                     {"min_abs_jacobian", v.genericity.min_abs_jacobian},
                     {"verdict", frontal::to_string(v.genericity.verdict)}};
  j["creative_residual"] = v.creative_residual;
  j["creative_tolerance"] = v.creative_tolerance;
  j["fixed_residual"] = v.fixed_residual;
  j["fixed_tolerance"] = v.fixed_tolerance;
  return j;
}

double legendre_fixedness(const frontal::LegendrianData& d, const frontal::GridSpec& grid) {
  const auto a = d.sample(grid);
  const auto b = legendre_transform(d).sample(grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    worst = std::max({worst, (a.theta[k] - b.theta[k]).cwiseAbs().maxCoeff(), std::abs(a.a[k] - b.a[k]),
                      (a.b[k] - b.b[k]).cwiseAbs().maxCoeff()});
  }
  return worst;
}

}  // namespace legendre::lab
