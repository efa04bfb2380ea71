#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "legendre/algebra/poly_map.hpp"
#include "legendre/algebra/rational.hpp"
#include "legendre/core/report.hpp"
#include "legendre/frontal/legendrian_data.hpp"

namespace legendre::lab {

using algebra::Rational;
using frontal::GridSpec;
using frontal::LegendrianData;

/// Parameters t_1..t_n of the linear family. A single value applies to every axis.
struct FakeParams {
  std::vector<Rational> t;

  [[nodiscard]] std::vector<Rational> expanded(int n) const;
  /// Every t_i is 0, 1 or 2.
  [[nodiscard]] bool in_involution_set() const;
};

struct Transform {
  enum class Kind { legendre, fake };
  Kind kind = Kind::legendre;
  FakeParams params;

  /// "legendre" or "fake:t=v1,v2,..."
  [[nodiscard]] std::string name() const;
};

class TransformParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts "legendre", "fake:t=2", "fake:t=0,1,2", rationals allowed ("fake:t=3/2").
Transform parse_transform(const std::string& text);

/// (theta, a, b) -> (b, sum b_i theta_i - a, theta)
LegendrianData legendre_transform(const LegendrianData& d);

/// theta_i -> (t_i-1) theta_i + (2-t_i) b_i, b_i -> t_i theta_i + (1-t_i) b_i,
/// a -> sum_i [t_i(t_i-1)/2 theta_i^2 + t_i(2-t_i) theta_i b_i + (1-t_i)(2-t_i)/2 b_i^2] - a.
/// Throws std::invalid_argument if the parameter count is neither 1 nor n.
LegendrianData fake_transform(const LegendrianData& d, const FakeParams& t);

LegendrianData apply(const Transform& tr, const LegendrianData& d);

/// The transform as a polynomial self-map of (theta, a, b) in dimension n.
algebra::LegendrianPolyMap as_poly_map(const Transform& tr, int n);

/// transform(transform(d)) against d. Symbolic data: exact polynomial
/// equality, residuals list the nonzero differences. Otherwise the max
/// pointwise deviation over `grid`.
Report involution_check(const Transform& tr, const LegendrianData& d, const GridSpec& grid, double tol = 1e-9);

/// Composition of the polynomial map with itself against the identity, in
/// free coordinates theta_i, a, b_i. Residuals are the nonzero differences
/// (theta components, then a, then b).
Report involution_check_generic(const Transform& tr, int n);

}  // namespace legendre::lab
