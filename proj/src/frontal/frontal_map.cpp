#include "legendre/frontal/frontal_map.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <vector>

namespace legendre::frontal {

namespace {

Mat central(const std::function<Vec(const Vec&)>& f, const Vec& x, double h) {
  const Vec f0 = f(x);
  Mat J(f0.size(), x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Vec xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    J.col(j) = (f(xp) - f(xm)) / (2 * h);
  }
  return J;
}

Vec rotated(const Vec& d) {
  Vec r(2);
  r << -d(1), d(0);
  return r;
}

}  // namespace

Mat FrontalMap::dphi(const Vec& x, double h) const { return jacobian_phi ? jacobian_phi(x) : central(phi, x, h); }

Mat FrontalMap::dnu(const Vec& x, double h) const { return jacobian_nu ? jacobian_nu(x) : central(nu, x, h); }

FrontalMap plane_curve_with_gauss_map(std::string name, std::function<Vec(const Vec&)> phi,
                                      std::function<Mat(const Vec&)> jacobian_phi, const GridSpec& grid,
                                      double eps, double max_turn) {
  grid.validate();
  if (grid.n() != 1) throw std::invalid_argument("plane_curve_with_gauss_map: one-dimensional grid required");
  FrontalMap f;
  f.n = 1;
  f.name = std::move(name);
  f.phi = phi;
  f.jacobian_phi = jacobian_phi;
  const double h = grid.fd_step;
  auto tangent = [phi, jacobian_phi, h](const Vec& x) -> Vec {
    if (jacobian_phi) return jacobian_phi(x).col(0);
    return central(phi, x, h).col(0);
  };

  const std::size_t m = grid.size();
  std::vector<std::optional<Vec>> ref(m);
  std::optional<Vec> previous;
  for (std::size_t k = 0; k < m; ++k) {
    const Vec d = tangent(grid.point(k));
    if (d.norm() <= eps) continue;
    Vec u = rotated(d).normalized();
    if (previous && u.dot(*previous) < 0) u = -u;
    ref[k] = u;
    previous = u;
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (ref[k]) continue;
    std::optional<Vec> left, right;
    for (std::size_t q = k; q-- > 0;) {
      if (ref[q]) {
        left = ref[q];
        break;
      }
    }
    for (std::size_t q = k + 1; q < m; ++q) {
      if (ref[q]) {
        right = ref[q];
        break;
      }
    }
    if (!left && !right) throw std::invalid_argument("plane_curve_with_gauss_map: curve is singular on the whole grid");
    if (left && right) {
      const double turn = std::acos(std::clamp(left->dot(*right), -1.0, 1.0));
      if (turn > max_turn) throw GaussMapDiscontinuous(grid.point(k)(0));
      ref[k] = (*left + *right).normalized();
    } else {
      ref[k] = left ? *left : *right;
    }
  }

  auto table = std::make_shared<std::vector<Vec>>();
  for (auto& r : ref) table->push_back(*r);
  const GridSpec g = grid;
  f.nu = [table, g, tangent, eps](const Vec& x) -> Vec {
    const double s = (x(0) - g.box[0].first) / g.spacing(0);
    const auto k = static_cast<std::size_t>(std::clamp(std::lround(s), 0L, static_cast<long>(g.size()) - 1));
    const Vec& r = (*table)[k];
    const Vec d = tangent(x);
    if (d.norm() <= eps) return r;
    const Vec u = rotated(d).normalized();
    return u.dot(r) < 0 ? Vec(-u) : u;
  };
  return f;
}

}  // namespace legendre::frontal
