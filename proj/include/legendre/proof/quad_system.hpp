#pragma once

#include <array>
#include <optional>
#include <string>

#include "legendre/algebra/multipoly.hpp"
#include "legendre/core/report.hpp"

namespace legendre::proof {

using algebra::MultiPoly;
using algebra::Rational;

/// Linear-form coefficients of one index i:
/// p_e, p_z multiply X_i, Z_i in the theta-component, q_e, q_z in the b-component.
struct QuadSystemPoint {
  Rational p_e;
  Rational p_z;
  Rational q_e;
  Rational q_z;

  friend bool operator==(const QuadSystemPoint&, const QuadSystemPoint&) = default;
};

struct SolutionClass {
  enum class Tag {
    trivial_fixed,  // (1, 0, 0, 1)
    family,         // (t-1, 2-t, t, 1-t)
    not_solution,   // violates equation `failed_equation`
    outside_claim,  // solves a modified system but is neither of the above
  };
  Tag tag = Tag::not_solution;
  std::optional<Rational> t;
  int failed_equation = 0;  // 1-based, only for not_solution

  [[nodiscard]] std::string to_string() const;
};

/// Four equations lhs_k(pe, pz, qe, qz) = rhs_k in the display order
///   pe + pz = 1,  qe + qz = 1,  pe^2 + pz qe = 1,  qe pe + qz qe = 0.
/// `rhs` is mutable so that the checker can be exercised on a broken system.
struct QuadSystem {
  std::array<MultiPoly, 4> lhs;
  std::array<Rational, 4> rhs;

  static QuadSystem standard();

  /// lhs_k - rhs_k at the point; k is 1-based.
  [[nodiscard]] Rational residual(int k, const QuadSystemPoint& pt) const;
};

/// Names of the unknowns as polynomial variables.
inline constexpr const char* kPe = "pe";
inline constexpr const char* kPz = "pz";
inline constexpr const char* kQe = "qe";
inline constexpr const char* kQz = "qz";

SolutionClass classify_quadruple(const QuadSystemPoint& pt, const QuadSystem& system = QuadSystem::standard());

/// Family check, disjointness, and the exact case split on the factored
/// fourth equation.
Report verify_solution_set_complete(const QuadSystem& system = QuadSystem::standard());

/// Under pz = 1 - pe and qz = 1 - qe, the third equation is a constant
/// multiple of the fourth, and the fifth of the sixth, in the six-equation
/// form of the system.
Report verify_equation_redundancy();

/// The restricted linear forms fix every b = theta datum exactly when the
/// coefficient pairs sum to one.
Report verify_fixed_point_restriction();

}  // namespace legendre::proof
