#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace testsupport {

/// Rotation by |v| in the plane span{e_1, (0, v/|v|)}, computed as the matrix
/// exponential of the skew generator.
inline Eigen::MatrixXd geodesic_rotation(const Eigen::VectorXd& v) {
  const Eigen::Index m = v.size() + 1;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(m, m);
  // K e_1 = (0, v), K (0, v) = -|v|^2 e_1.
  K.block(1, 0, v.size(), 1) = v;
  K.block(0, 1, 1, v.size()) = -v.transpose();
  return K.exp();
}

}  // namespace testsupport
