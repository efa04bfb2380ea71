#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

// S^n in R^{n+1} seen from the base point e_1. Tangent vectors at e_1 are
// stored by their last n coordinates.
namespace legendre::sphere {

using Vec = Eigen::VectorXd;

class AntipodalPoint : public std::domain_error {
 public:
  AntipodalPoint() : std::domain_error("point is antipodal to e_1; log is undefined") {}
};

class GeodesicUndefined : public std::domain_error {
 public:
  explicit GeodesicUndefined(double length)
      : std::domain_error("radial geodesic of length " + std::to_string(length) + " >= pi"), length_(length) {}
  [[nodiscard]] double length() const { return length_; }

 private:
  double length_;
};

class SpherePoint {
 public:
  /// Renormalizes; throws std::invalid_argument for a (near) zero vector or
  /// fewer than two coordinates.
  explicit SpherePoint(Vec coords);

  [[nodiscard]] const Vec& coords() const { return coords_; }
  /// Dimension of the sphere (ambient dimension minus one).
  [[nodiscard]] int n() const { return static_cast<int>(coords_.size()) - 1; }

  static SpherePoint base(int n);

 private:
  Vec coords_;
};

struct TangentAtBase {
  Vec components;

  TangentAtBase() = default;
  explicit TangentAtBase(Vec c) : components(std::move(c)) {}
  [[nodiscard]] int n() const { return static_cast<int>(components.size()); }
  [[nodiscard]] double norm() const { return components.norm(); }
};

/// sin(r)/r with the series 1 - r^2/6 below 1e-8.
double sinc(double r);

SpherePoint exp_map(const TangentAtBase& v);

/// Inverse of exp_map on the open ball of radius pi. Throws AntipodalPoint
/// within 1e-12 of -e_1.
TangentAtBase log_map(const SpherePoint& p);

/// Levi-Civita transport of w from e_1 to exp(v) along t -> exp(t v), as an
/// ambient vector. Throws GeodesicUndefined when |v| >= pi.
Vec parallel_transport(const TangentAtBase& v, const TangentAtBase& w);

/// parallel_transport(v, e_i) for i = 1..n.
std::vector<Vec> transported_frame(const TangentAtBase& v);

/// Metric duals of the coordinate differentials dTheta_i at exp(v), where
/// Theta = log is the normal chart at e_1:
///   E_i = Pi(P_par e_i + (r / sin r) P_perp e_i),
/// P_par, P_perp the projections along and across v. Equals the transported
/// frame when n = 1 or v = 0.
std::vector<Vec> dual_frame(const TangentAtBase& v);

}  // namespace legendre::sphere
