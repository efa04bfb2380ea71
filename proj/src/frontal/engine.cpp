#include "legendre/frontal/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "legendre/sphere/sphere.hpp"

namespace legendre::frontal {

namespace {

std::string point_text(const Vec& x) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += format_double(x(i));
  }
  return s + ")";
}

nlohmann::ordered_json point_json(const Vec& x) {
  auto j = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) j.push_back(x(i));
  return j;
}

// Axis neighbours of a node: flat indices at +-1 along each axis.
std::vector<std::size_t> axis_neighbours(const GridSpec& g, std::size_t k) {
  std::vector<std::size_t> out;
  auto idx = g.multi_index(k);
  for (std::size_t ax = 0; ax < idx.size(); ++ax) {
    for (int step : {-1, 1}) {
      const int q = idx[ax] + step;
      if (q < 0 || q >= g.counts[ax]) continue;
      auto j = idx;
      j[ax] = q;
      out.push_back(g.flat_index(j));
    }
  }
  return out;
}

std::size_t nearest_regular(const GridSpec& g, std::size_t k, const std::vector<bool>& regular) {
  const Vec xk = g.point(k);
  std::size_t best = g.size();
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t q = 0; q < g.size(); ++q) {
    if (!regular[q]) continue;
    const double d = (g.point(q) - xk).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

// Quadratic extrapolation 3 b1 - 3 b2 + b3 along grid lines, averaged.
std::optional<Vec> extrapolate(const GridSpec& g, std::size_t k, const std::vector<bool>& regular,
                               const std::vector<Vec>& b) {
  const auto idx = g.multi_index(k);
  Vec sum;
  int used = 0;
  for (std::size_t ax = 0; ax < idx.size(); ++ax) {
    for (int dir : {-1, 1}) {
      std::vector<std::size_t> run;
      for (int s = 1; s <= 3; ++s) {
        const int q = idx[ax] + dir * s;
        if (q < 0 || q >= g.counts[ax]) break;
        auto j = idx;
        j[ax] = q;
        const std::size_t f = g.flat_index(j);
        if (!regular[f]) break;
        run.push_back(f);
      }
      if (run.size() < 3) continue;
      const Vec e = 3.0 * b[run[0]] - 3.0 * b[run[1]] + b[run[2]];
      sum = used == 0 ? e : Vec(sum + e);
      ++used;
    }
  }
  if (used == 0) return std::nullopt;
  return Vec(sum / used);
}

}  // namespace

ChartFailure::ChartFailure(Vec x)
    : std::runtime_error("nu is antipodal to e_1 at x = " + point_text(x)), x_(std::move(x)) {}

NotCreative::NotCreative(Vec x, double residual)
    : std::runtime_error("not creative at x = " + point_text(x) + " (residual " + format_double(residual) +
                         ")"),
      x_(std::move(x)),
      residual_(residual) {}

SparseRegularSet::SparseRegularSet(double fraction)
    : std::runtime_error("only " + format_double(100.0 * fraction) + "% of samples are regular points of theta"),
      fraction_(fraction) {}

double support_function(const FrontalMap& f, const Vec& x) { return f.phi(x).dot(f.nu(x)); }

double default_tolerance(const GridSpec& grid) { return 50.0 * grid.fd_step * grid.fd_step; }

double default_tolerance(const LegendrianData& d, const GridSpec& grid) {
  if (!d.sampled()) return default_tolerance(grid);
  double h = 0.0;
  for (int ax = 0; ax < grid.n(); ++ax) h = std::max(h, grid.spacing(ax));
  return 50.0 * h * h;
}

double frontal_identity_residual(const FrontalMap& f, const GridSpec& grid) {
  grid.validate();
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vec x = grid.point(k);
    const Mat J = f.dphi(x, grid.fd_step);
    const double r = (J.transpose() * f.nu(x)).norm() / std::max(1.0, J.norm());
    worst = std::max(worst, r);
  }
  return worst;
}

FrontalDataResult data_of_frontal(const FrontalMap& f, const GridSpec& grid, const DataOptions& options) {
  grid.validate();
  if (grid.n() != f.n) throw std::invalid_argument("data_of_frontal: grid dimension differs from n");
  const int n = f.n;
  const double h = grid.fd_step;

  // Base-point sign choice.
  const Vec nu0 = f.nu(Vec::Zero(n));
  auto antipodal = [&](const Vec& v) {
    Vec e = Vec::Zero(n + 1);
    e(0) = -1.0;
    return !v.allFinite() || (v - e).norm() <= 1e-12;
  };
  bool flip = false;
  if (antipodal(nu0)) {
    if (antipodal(Vec(-nu0))) throw AntipodalBase();
    flip = true;
  }
  const double sign = flip ? -1.0 : 1.0;
  auto nu = [&](const Vec& x) -> Vec { return sign * f.nu(x); };
  auto theta = [&](const Vec& x) -> Vec {
    try {
      return sphere::log_map(sphere::SpherePoint(nu(x))).components;
    } catch (const sphere::AntipodalPoint&) {
      throw ChartFailure(x);
    }
  };
  auto support = [&](const Vec& x) { return f.phi(x).dot(nu(x)); };

  const double id_tol = options.identity_tol.value_or(std::max(default_tolerance(grid), 1e-9));
  const std::size_t m = grid.size();
  Sampled s;
  s.grid = grid;
  s.theta.resize(m);
  s.a.resize(m);
  s.b.assign(m, Vec::Zero(n));
  std::vector<bool> regular(m, false);
  FrontalDataResult res{LegendrianData(n, ClosedForm{[](const Vec& x) { return x; }, [](const Vec&) { return 0.0; },
                                                      [](const Vec& x) { return x; }, {}, {}, {}}),
                        flip, 0, {}, 0.0};

  for (std::size_t k = 0; k < m; ++k) {
    const Vec x = grid.point(k);
    const Vec v = nu(x);
    const Mat Jphi = f.dphi(x, h);
    const double identity = (Jphi.transpose() * v).norm() / std::max(1.0, Jphi.norm());
    res.max_identity_residual = std::max(res.max_identity_residual, identity);
    if (identity > id_tol) throw NotCreative(x, identity);

    s.theta[k] = theta(x);
    s.a[k] = support(x);
    Mat Dth(n, n);
    Vec grad(n);
    for (int j = 0; j < n; ++j) {
      Vec xp = x, xm = x;
      xp(j) += h;
      xm(j) -= h;
      Dth.col(j) = (theta(xp) - theta(xm)) / (2 * h);
      grad(j) = (support(xp) - support(xm)) / (2 * h);
    }
    if (f.jacobian_phi && f.jacobian_nu) grad = Jphi.transpose() * v + (sign * f.jacobian_nu(x)).transpose() * f.phi(x);
    if (std::abs(Dth.determinant()) > options.regular_eps) {
      regular[k] = true;
      s.b[k] = Dth.transpose().partialPivLu().solve(grad);
      ++res.regular;
    }
  }

  const double fraction = static_cast<double>(res.regular) / static_cast<double>(m);
  if (fraction < options.min_regular_fraction) throw SparseRegularSet(fraction);

  for (std::size_t k = 0; k < m; ++k) {
    if (regular[k]) continue;
    res.filled.push_back(k);
    std::optional<Vec> value;
    if (options.fill == DataOptions::Fill::extrapolate) value = extrapolate(grid, k, regular, s.b);
    if (!value) value = s.b[nearest_regular(grid, k, regular)];
    s.b[k] = *value;
  }
  res.data = LegendrianData(n, std::move(s));
  return res;
}

Vec envelope_reconstruct(const Vec& theta, double a, const Vec& b) {
  const sphere::TangentAtBase v(theta);
  const auto frame = sphere::dual_frame(v);
  Vec out = a * sphere::exp_map(v).coords();
  for (Eigen::Index i = 0; i < b.size(); ++i) out += b(i) * frame[static_cast<std::size_t>(i)];
  return out;
}

Vec envelope_reconstruct(const LegendrianData& d, const Vec& x) {
  const Sample s = d.evaluate(x);
  return envelope_reconstruct(s.theta, s.a, s.b);
}

Report creative_check(const LegendrianData& d, const GridSpec& grid, std::optional<double> tol) {
  Report rep;
  rep.check_name = "creative";
  const double limit = tol.value_or(default_tolerance(d, grid));
  const auto js = d.jets(grid);
  double worst = 0.0;
  Vec where = js.front().x;
  for (const auto& j : js) {
    const double r = (j.da - j.dtheta.transpose() * j.b).norm();
    if (!(r <= worst) || std::isnan(r)) {
      worst = r;
      where = j.x;
    }
  }
  rep.details["max_residual"] = worst;
  rep.details["location"] = point_json(where);
  rep.details["tolerance"] = limit;
  rep.details["samples"] = js.size();
  rep.residuals.push_back(format_double(worst));
  if (!(worst <= limit)) rep.status = Status::fail;
  return rep;
}

std::string to_string(GenericityReport::Verdict verdict) {
  switch (verdict) {
    case GenericityReport::Verdict::looks_generic:
      return "LooksGeneric";
    case GenericityReport::Verdict::degenerate:
      return "Degenerate";
    case GenericityReport::Verdict::inconclusive:
      return "Inconclusive";
  }
  return {};
}

GenericityReport genericity_probe(const LegendrianData& d, const GridSpec& grid, double eps) {
  const auto js = d.jets(grid);
  const std::size_t m = js.size();
  std::vector<bool> reg_theta(m), reg_b(m);
  std::size_t count_theta = 0, count_b = 0;
  GenericityReport out;
  out.min_abs_jacobian = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) {
    const double dt = std::abs(js[k].dtheta.determinant());
    const double db = std::abs(js[k].db.determinant());
    reg_theta[k] = dt > eps;
    reg_b[k] = db > eps;
    count_theta += reg_theta[k];
    count_b += reg_b[k];
    out.min_abs_jacobian = std::min({out.min_abs_jacobian, dt, db});
  }
  out.fraction_regular_theta = static_cast<double>(count_theta) / static_cast<double>(m);
  out.fraction_regular_b = static_cast<double>(count_b) / static_cast<double>(m);

  auto isolated = [&](const std::vector<bool>& reg) {
    for (std::size_t k = 0; k < m; ++k) {
      if (reg[k]) continue;
      const auto nb = axis_neighbours(grid, k);
      if (std::none_of(nb.begin(), nb.end(), [&](std::size_t q) { return static_cast<bool>(reg[q]); })) return false;
    }
    return true;
  };
  using V = GenericityReport::Verdict;
  if (count_theta == 0 || count_b == 0) {
    out.verdict = V::degenerate;
  } else if ((out.fraction_regular_theta >= 0.99 && out.fraction_regular_b >= 0.99) ||
             (isolated(reg_theta) && isolated(reg_b))) {
    out.verdict = V::looks_generic;
  } else {
    out.verdict = V::inconclusive;
  }
  return out;
}

Report wavefront_probe(const FrontalMap& f, const GridSpec& grid, double rank_tol) {
  grid.validate();
  Report rep;
  rep.check_name = "wavefront";
  auto drops = nlohmann::ordered_json::array();
  double smallest = std::numeric_limits<double>::infinity();
  const int n = f.n;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vec x = grid.point(k);
    Mat J(2 * n + 2, n);
    J.topRows(n + 1) = f.dphi(x, grid.fd_step);
    J.bottomRows(n + 1) = f.dnu(x, grid.fd_step);
    const double s = Eigen::JacobiSVD<Mat>(J).singularValues().minCoeff();
    smallest = std::min(smallest, s);
    if (s < rank_tol) drops.push_back(point_json(x));
  }
  rep.details["min_singular_value"] = smallest;
  rep.details["rank_tolerance"] = rank_tol;
  rep.details["rank_drop"] = drops;
  if (!drops.empty()) rep.fail_with(std::to_string(drops.size()) + " rank-deficient samples");
  return rep;
}

EnvelopeInvariants envelope_invariants(const LegendrianData& d, const GridSpec& grid) {
  grid.validate();
  EnvelopeInvariants out;
  const int n = d.n();
  const std::size_t m = grid.size();
  std::vector<Vec> rec(m), nus(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Vec x = grid.point(k);
    const Sample s = d.evaluate(x);
    rec[k] = envelope_reconstruct(s.theta, s.a, s.b);
    nus[k] = sphere::exp_map(sphere::TangentAtBase(s.theta)).coords();
    out.max_incidence = std::max(out.max_incidence, std::abs(rec[k].dot(nus[k]) - s.a));
  }
  if (d.sampled()) {
    for (int c = 0; c <= n; ++c) {
      std::vector<double> comp(m);
      for (std::size_t k = 0; k < m; ++k) comp[k] = rec[k](c);
      const auto g = grid_gradient(grid, comp);
      // Accumulate d rec / dx_j component-wise, then dot with nu below.
      for (std::size_t k = 0; k < m; ++k) {
        if (c == 0) rec[k].conservativeResize(n + 1 + n * (n + 1));
        for (int j = 0; j < n; ++j) rec[k](n + 1 + j * (n + 1) + c) = g[k](j);
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (int j = 0; j < n; ++j) {
        const Vec dj = rec[k].segment(n + 1 + j * (n + 1), n + 1);
        out.max_tangency = std::max(out.max_tangency, std::abs(dj.dot(nus[k])));
      }
    }
    return out;
  }
  const double h = grid.fd_step;
  for (std::size_t k = 0; k < m; ++k) {
    const Vec x = grid.point(k);
    for (int j = 0; j < n; ++j) {
      Vec xp = x, xm = x;
      xp(j) += h;
      xm(j) -= h;
      const Vec dj = (envelope_reconstruct(d, xp) - envelope_reconstruct(d, xm)) / (2 * h);
      out.max_tangency = std::max(out.max_tangency, std::abs(dj.dot(nus[k])));
    }
  }
  return out;
}

Report roundtrip_check(const FrontalMap& f, const GridSpec& grid, double tol, const DataOptions& options) {
  Report rep;
  rep.check_name = "roundtrip:" + f.name;
  const FrontalDataResult res = data_of_frontal(f, grid, options);
  double worst = 0.0;
  Vec where = grid.point(0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vec x = grid.point(k);
    const double e = (envelope_reconstruct(res.data, x) - f.phi(x)).norm();
    if (e > worst || std::isnan(e)) {
      worst = e;
      where = x;
    }
  }
  const EnvelopeInvariants inv = envelope_invariants(res.data, grid);
  rep.details["max_error"] = worst;
  rep.details["location"] = point_json(where);
  rep.details["max_incidence"] = inv.max_incidence;
  rep.details["max_tangency"] = inv.max_tangency;
  rep.details["regular_fraction"] = static_cast<double>(res.regular) / static_cast<double>(grid.size());
  rep.details["filled_nodes"] = res.filled.size();
  rep.details["gauss_map_flipped"] = res.flipped;
  rep.details["tolerance"] = tol;
  rep.add_branch("reconstruction matches phi", worst <= tol, format_double(worst));
  rep.add_branch("hyperplane incidence", inv.max_incidence <= tol, format_double(inv.max_incidence));
  rep.add_branch("tangency", inv.max_tangency <= tol, format_double(inv.max_tangency));
  return rep;
}

}  // namespace legendre::frontal
