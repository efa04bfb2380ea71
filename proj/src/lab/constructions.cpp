#include "legendre/lab/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "legendre/lab/membership.hpp"
#include "legendre/lab/transforms.hpp"

namespace legendre::lab {

using algebra::MultiPoly;
using algebra::Rational;
using frontal::LegendrianData;
using frontal::Symbolic;

namespace {

MultiPoly x(int i) { return MultiPoly::variable("x" + std::to_string(i)); }

MultiPoly sum_squares(int n) {
  MultiPoly s;
  for (int i = 1; i <= n; ++i) s += x(i) * x(i);
  return s;
}

LegendrianData scaled_data(int n, const Rational& theta_scale, const MultiPoly& a, const Rational& b_scale) {
  Symbolic s;
  for (int i = 1; i <= n; ++i) {
    s.theta.push_back(MultiPoly(theta_scale) * x(i));
    s.b.push_back(MultiPoly(b_scale) * x(i));
  }
  s.a = a;
  return LegendrianData(n, std::move(s));
}

void check_index(int n, int i0) {
  if (n < 1 || i0 < 1 || i0 > n) throw std::invalid_argument("coordinate index out of range");
}

double max_abs_component(const frontal::Sampled& s, bool theta, int i0) {
  double worst = 0.0;
  for (std::size_t k = 0; k < s.theta.size(); ++k) {
    const auto& v = theta ? s.theta[k] : s.b[k];
    worst = std::max(worst, std::abs(v(i0 - 1)));
  }
  return worst;
}

CollapseDemo collapse_demo(const LegendrianData& input, int n, int i0, const Rational& t_i0, bool theta_side,
                           const frontal::GridSpec& grid) {
  CollapseDemo demo{input, input, {}, {}, 0.0, {}};
  FakeParams t;
  t.t.assign(static_cast<std::size_t>(n), Rational(1));
  t.t[static_cast<std::size_t>(i0 - 1)] = t_i0;
  demo.output = fake_transform(input, t);

  const std::string comp = (theta_side ? "theta" : "b") + std::to_string(i0);
  Report& rep = demo.report;
  rep.check_name = (theta_side ? "theta-collapse" : "b-collapse") + std::string("(n=") + std::to_string(n) +
                   ",i0=" + std::to_string(i0) + ")";
  rep.details["transform"] = Transform{Transform::Kind::fake, t}.name();

  const MembershipVerdict in = membership(input, grid);
  demo.input_probe = in.genericity;
  rep.add_branch("input is creative", in.in_X);
  rep.add_branch("input looks generic", in.in_GX());

  const auto& out = *demo.output.symbolic();
  const MultiPoly& collapsed = theta_side ? out.theta[static_cast<std::size_t>(i0 - 1)]
                                          : out.b[static_cast<std::size_t>(i0 - 1)];
  rep.add_branch("output " + comp + " == 0", collapsed.is_zero(), collapsed.to_string());

  // Same transform on grid samples of the input.
  const LegendrianData sampled_out = fake_transform(LegendrianData(n, input.sample(grid)), t);
  demo.max_abs_collapsed = max_abs_component(*sampled_out.sampled(), theta_side, i0);
  rep.details["max_abs_collapsed_on_grid"] = demo.max_abs_collapsed;
  rep.add_branch("output " + comp + " vanishes at every grid sample", demo.max_abs_collapsed <= 1e-12,
                 format_double(demo.max_abs_collapsed));

  const MembershipVerdict o = membership(demo.output, grid);
  demo.output_probe = o.genericity;
  rep.details["output_verdict"] = frontal::to_string(o.genericity.verdict);
  rep.add_branch("output is creative", o.in_X);
  rep.add_branch("output verdict Degenerate", o.genericity.verdict == frontal::GenericityReport::Verdict::degenerate);
  return demo;
}

}  // namespace

MultiPoly jacobian_determinant(const std::vector<MultiPoly>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  MultiPoly det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    MultiPoly term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) {
      term = term * f[static_cast<std::size_t>(i)].derivative("x" + std::to_string(perm[static_cast<std::size_t>(i)]));
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det.trimmed();
}

LegendrianData gy_quadratic(int n) { return scaled_data(n, 1, MultiPoly(Rational(1, 2)) * sum_squares(n), 1); }

FixedCoordinateCounterexample fixed_coordinate_counterexample(int n, int i0, const Rational& lambda,
                                                              const frontal::GridSpec& grid, const Rational& others) {
  check_index(n, i0);
  if (lambda == Rational(-1, 2)) throw DegenerateLambda();
  const LegendrianData base = gy_quadratic(n);
  Symbolic p = *base.symbolic();
  const auto k0 = static_cast<std::size_t>(i0 - 1);
  const MultiPoly th0 = p.theta[k0];
  p.a += MultiPoly(lambda) * th0 * th0;
  p.b[k0] += MultiPoly(2 * lambda) * th0;
  FixedCoordinateCounterexample out{base, LegendrianData(n, p), {}};

  Report& rep = out.report;
  rep.check_name = "fixed-coordinate(n=" + std::to_string(n) + ",i0=" + std::to_string(i0) +
                   ",lambda=" + lambda.to_string() + ")";
  const MembershipVerdict v = membership(out.perturbed, grid);
  rep.add_branch("perturbed data is creative", v.in_X);
  rep.add_branch(lambda.is_zero() ? "perturbed data is in GY" : "perturbed data is not in Y",
                 lambda.is_zero() ? v.in_GY : !v.in_Y);

  const MultiPoly det_b = jacobian_determinant(p.b);
  const MultiPoly det_theta = jacobian_determinant(p.theta);
  const MultiPoly gap = (det_b - MultiPoly(1 + 2 * lambda) * det_theta).trimmed();
  rep.details["det_Db"] = det_b.to_string();
  rep.add_branch("det Db == (1 + 2 lambda) det Dtheta", gap.is_zero(), gap.to_string());
  rep.details["genericity_verdict"] = frontal::to_string(v.genericity.verdict);
  rep.add_branch("perturbed data looks generic", v.in_GX());

  // Linear part: identity on coordinate i0, the family with `others` elsewhere.
  bool unchanged = true;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const Rational t = i == i0 - 1 ? Rational(1) : others;
    const Rational pe = i == i0 - 1 ? Rational(1) : t - 1, pz = i == i0 - 1 ? Rational(0) : 2 - t;
    const Rational qe = i == i0 - 1 ? Rational(0) : t, qz = i == i0 - 1 ? Rational(1) : 1 - t;
    const MultiPoly th = MultiPoly(pe) * p.theta[k] + MultiPoly(pz) * p.b[k];
    const MultiPoly b = MultiPoly(qe) * p.theta[k] + MultiPoly(qz) * p.b[k];
    unchanged = unchanged && (th - p.theta[k]).trimmed().is_zero() && (b - p.b[k]).trimmed().is_zero();
  }
  rep.details["others_t"] = others.to_string();
  rep.add_branch("transform fixing coordinate i0 leaves theta and b unchanged", unchanged);
  return out;
}

CollapseDemo b_collapse_demo(int n, int i0, const frontal::GridSpec& grid) {
  check_index(n, i0);
  return collapse_demo(scaled_data(n, 1, sum_squares(n), 2), n, i0, 2, false, grid);
}

CollapseDemo theta_collapse_demo(int n, int i0, const frontal::GridSpec& grid) {
  check_index(n, i0);
  return collapse_demo(scaled_data(n, 2, sum_squares(n), 1), n, i0, 0, true, grid);
}

}  // namespace legendre::lab
