#pragma once

#include <map>
#include <string>
#include <vector>

#include "legendre/algebra/multipoly.hpp"

namespace legendre::algebra {

/// Polynomial self-map of R^{2n+1} written in the coordinates
/// (theta_1..theta_n, a, b_1..b_n): the shape every transform of Legendrian
/// data takes when it acts pointwise.
struct LegendrianPolyMap {
  int n = 0;
  std::vector<MultiPoly> theta;
  MultiPoly a;
  std::vector<MultiPoly> b;

  static LegendrianPolyMap identity(int n);
  /// (theta, a, b) -> (b, sum b_i theta_i - a, theta)
  static LegendrianPolyMap legendre(int n);
  /// The linear family with symbolic parameters t_1..t_n:
  ///   theta_i -> (t_i - 1) theta_i + (2 - t_i) b_i
  ///   b_i     -> t_i theta_i + (1 - t_i) b_i
  ///   a       -> sum_i [t_i(t_i-1)/2 theta_i^2 + t_i(2-t_i) theta_i b_i
  ///                     + (1-t_i)(2-t_i)/2 b_i^2] - a
  static LegendrianPolyMap family(int n);
  /// The family with every t_i replaced by the given rational.
  static LegendrianPolyMap family(const std::vector<Rational>& t);

  /// Variable bindings theta_i -> theta[i], a -> a, b_i -> b[i].
  [[nodiscard]] std::map<std::string, MultiPoly> bindings() const;

  /// Composite map `this ∘ inner`.
  [[nodiscard]] LegendrianPolyMap after(const LegendrianPolyMap& inner) const;

  /// Applies the map to concrete component polynomials (in any variables).
  [[nodiscard]] LegendrianPolyMap apply(const std::vector<MultiPoly>& theta_in, const MultiPoly& a_in,
                                        const std::vector<MultiPoly>& b_in) const;

  friend bool operator==(const LegendrianPolyMap& lhs, const LegendrianPolyMap& rhs);
};

/// Simultaneous substitution that ignores bindings for variables `p` does
/// not have.
MultiPoly substitute_present(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);

}  // namespace legendre::algebra
