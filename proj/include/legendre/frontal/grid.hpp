#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace legendre::frontal {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Tensor grid over a box in R^n, flattened row-major (last axis fastest).
struct GridSpec {
  std::vector<std::pair<double, double>> box;
  std::vector<int> counts;
  double fd_step = 1e-5;

  /// Throws std::invalid_argument unless every axis has lo < hi, count >= 3,
  /// and fd_step > 0.
  void validate() const;

  [[nodiscard]] int n() const { return static_cast<int>(box.size()); }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] double spacing(int axis) const;
  [[nodiscard]] Vec point(std::size_t flat) const;
  [[nodiscard]] std::vector<int> multi_index(std::size_t flat) const;
  [[nodiscard]] std::size_t flat_index(const std::vector<int>& index) const;
  /// Flat index of the node at `x`, or size() if x is not a node (1e-9 relative).
  [[nodiscard]] std::size_t find_node(const Vec& x) const;

  static GridSpec line(double lo, double hi, int count, double fd_step = 1e-5);
  static GridSpec cube(int n, double lo, double hi, int count, double fd_step = 1e-5);

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace legendre::frontal
