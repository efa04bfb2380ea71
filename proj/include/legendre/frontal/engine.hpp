#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legendre/core/report.hpp"
#include "legendre/frontal/frontal_map.hpp"
#include "legendre/frontal/legendrian_data.hpp"

namespace legendre::frontal {

class AntipodalBase : public std::runtime_error {
 public:
  AntipodalBase() : std::runtime_error("nu(0) is antipodal to e_1 for both signs") {}
};

/// log_map failed at a grid node after the base-point sign choice.
class ChartFailure : public std::runtime_error {
 public:
  explicit ChartFailure(Vec x);
  [[nodiscard]] const Vec& x() const { return x_; }

 private:
  Vec x_;
};

class NotCreative : public std::runtime_error {
 public:
  NotCreative(Vec x, double residual);
  [[nodiscard]] const Vec& x() const { return x_; }
  [[nodiscard]] double residual() const { return residual_; }

 private:
  Vec x_;
  double residual_;
};

class SparseRegularSet : public std::runtime_error {
 public:
  explicit SparseRegularSet(double fraction);
  [[nodiscard]] double fraction() const { return fraction_; }

 private:
  double fraction_;
};

/// a(x) = <phi(x), nu(x)>
double support_function(const FrontalMap& f, const Vec& x);

struct DataOptions {
  enum class Fill { nearest, extrapolate };
  /// How b is extended to nodes where |det D theta| <= regular_eps.
  /// `extrapolate` uses quadratic extrapolation from three regular nodes along
  /// a grid line (averaged over available directions), falling back to
  /// nearest when no such run exists.
  Fill fill = Fill::nearest;
  double regular_eps = 1e-9;
  /// Bound on |<d phi/dx_j, nu>| / max(1, |d phi|); default max(50 h^2, 1e-9).
  std::optional<double> identity_tol;
  double min_regular_fraction = 0.01;
};

struct FrontalDataResult {
  LegendrianData data;
  bool flipped = false;  // nu was replaced by -nu
  std::size_t regular = 0;
  std::vector<std::size_t> filled;  // flat indices of non-regular nodes
  double max_identity_residual = 0.0;
};

/// theta = log(nu), a = <phi, nu>, b from (D theta)^T b = grad a at regular
/// nodes and the fill rule elsewhere. Sampled output on `grid`.
FrontalDataResult data_of_frontal(const FrontalMap& f, const GridSpec& grid, const DataOptions& options = {});

/// sum_i b_i E_i + a nu with nu = exp(theta) and E_i the metric duals of the
/// chart differentials dTheta_i at nu (see sphere::dual_frame).
Vec envelope_reconstruct(const Vec& theta, double a, const Vec& b);
Vec envelope_reconstruct(const LegendrianData& d, const Vec& x);

/// max |grad a - (D theta)^T b| over the grid.
Report creative_check(const LegendrianData& d, const GridSpec& grid, std::optional<double> tol = std::nullopt);

/// 50 h^2
double default_tolerance(const GridSpec& grid);
/// 50 h^2 with h the difference step creative_check uses for `d`: the grid
/// spacing (largest axis) for sampled data, fd_step otherwise.
double default_tolerance(const LegendrianData& d, const GridSpec& grid);

struct GenericityReport {
  double fraction_regular_theta = 0.0;
  double fraction_regular_b = 0.0;
  double min_abs_jacobian = 0.0;
  enum class Verdict { looks_generic, degenerate, inconclusive } verdict = Verdict::inconclusive;
};

std::string to_string(GenericityReport::Verdict verdict);

/// Degenerate when one of det D theta, det D b is <= eps at every node.
/// LooksGeneric when both regular fractions are >= 0.99, or both are positive
/// and every non-regular node has a regular neighbour along some axis.
GenericityReport genericity_probe(const LegendrianData& d, const GridSpec& grid, double eps = 1e-9);

/// Rank of the (2n+2) x n Jacobian of (phi, nu); nodes whose smallest
/// singular value is below `rank_tol` are listed under details.rank_drop.
Report wavefront_probe(const FrontalMap& f, const GridSpec& grid, double rank_tol = 1e-6);

/// max_x |<d phi/dx_j, nu>| / max(1, |d phi|)
double frontal_identity_residual(const FrontalMap& f, const GridSpec& grid);

struct EnvelopeInvariants {
  double max_incidence = 0.0;  // | <rec, nu> - a |
  double max_tangency = 0.0;   // | <d rec / dx_j, nu> |
};

/// Hyperplane incidence and tangency of the reconstruction. Derivatives use
/// central differences with fd_step for point-evaluable data and grid
/// stencils for sampled data.
EnvelopeInvariants envelope_invariants(const LegendrianData& d, const GridSpec& grid);

/// data_of_frontal, reconstruction, and comparison with phi on the grid.
Report roundtrip_check(const FrontalMap& f, const GridSpec& grid, double tol = 1e-6, const DataOptions& options = {});

}  // namespace legendre::frontal
