#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "legendre/frontal/grid.hpp"

namespace legendre::frontal {

/// A map phi: R^n -> R^{n+1} with a unit normal field nu.
struct FrontalMap {
  int n = 1;
  std::string name;
  std::function<Vec(const Vec&)> phi;
  /// Unit vectors in R^{n+1}.
  std::function<Vec(const Vec&)> nu;
  /// Optional (n+1) x n Jacobians; central differences otherwise.
  std::function<Mat(const Vec&)> jacobian_phi;
  std::function<Mat(const Vec&)> jacobian_nu;

  [[nodiscard]] Mat dphi(const Vec& x, double h) const;
  [[nodiscard]] Mat dnu(const Vec& x, double h) const;
};

class GaussMapDiscontinuous : public std::invalid_argument {
 public:
  explicit GaussMapDiscontinuous(double x)
      : std::invalid_argument("rotated tangent does not extend continuously across the singular point x = " +
                              std::to_string(x)),
        x_(x) {}
  [[nodiscard]] double x() const { return x_; }

 private:
  double x_;
};

/// Plane curve with nu built from the rotated tangent (-phi_2', phi_1')/|phi'|.
/// The sign is chosen continuously along `grid`; at singular nodes
/// (|phi'| <= eps) nu is the normalized mean of the two regular neighbours,
/// which must make an angle below `max_turn` radians or the input is refused.
FrontalMap plane_curve_with_gauss_map(std::string name, std::function<Vec(const Vec&)> phi,
                                      std::function<Mat(const Vec&)> jacobian_phi, const GridSpec& grid,
                                      double eps = 1e-9, double max_turn = 0.25);

}  // namespace legendre::frontal
