#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "legendre/algebra/multipoly.hpp"
#include "legendre/algebra/symbols.hpp"

namespace legendre::algebra {

/// Formal 1-form sum_k c_k dx_k over the coordinates theta<i>, b<i>.
///
/// Keys are coordinate names ("theta1" stands for dtheta1). There is never
/// a "da" key: the frontal rule rewrites it and the independent rule treats
/// `a` as a constant. Zero coefficients are dropped.
class OneForm {
 public:
  using Coefficients = std::map<std::string, MultiPoly, sym::Less>;

  OneForm() = default;
  explicit OneForm(Coefficients coefficients);

  /// c * d(coordinate). Throws std::invalid_argument for non-coordinates.
  static OneForm basis(const std::string& coordinate, const MultiPoly& coefficient = MultiPoly(1));

  [[nodiscard]] const Coefficients& coefficients() const { return coeffs_; }
  /// Missing keys are zero.
  [[nodiscard]] MultiPoly coefficient(const std::string& coordinate) const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::string to_string() const;

  OneForm& operator+=(const OneForm& rhs);
  OneForm& operator-=(const OneForm& rhs);
  friend OneForm operator+(OneForm lhs, const OneForm& rhs) { return lhs += rhs; }
  friend OneForm operator-(OneForm lhs, const OneForm& rhs) { return lhs -= rhs; }
  friend OneForm operator*(const MultiPoly& scale, const OneForm& form);
  friend bool operator==(const OneForm& lhs, const OneForm& rhs);

 private:
  void normalize();
  Coefficients coeffs_;
};

/// How d(a) is treated by `differential`.
struct DifferentialRule {
  enum class Kind { independent, frontal };
  Kind kind = Kind::independent;
  int n = 0;

  /// theta<i>, b<i> are coordinates; a and t<i> are constants.
  static DifferentialRule independent() { return {Kind::independent, 0}; }
  /// Additionally rewrites d(a) as sum_{i<=n} b_i dtheta_i.
  static DifferentialRule frontal(int n);
};

OneForm differential(const MultiPoly& p, const DifferentialRule& rule);

/// Witness that a 1-form is not closed: d(w_first)/d(second) differs from
/// d(w_second)/d(first).
struct NotExact {
  std::string first;
  std::string second;
  MultiPoly lhs;  // d w_first / d second
  MultiPoly rhs;  // d w_second / d first
};

class PotentialResult {
 public:
  PotentialResult(MultiPoly value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  PotentialResult(NotExact obstruction) : state_(std::move(obstruction)) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] bool exact() const { return std::holds_alternative<MultiPoly>(state_); }
  /// Throws std::logic_error when not exact.
  [[nodiscard]] const MultiPoly& value() const;
  /// Throws std::logic_error when exact.
  [[nodiscard]] const NotExact& obstruction() const;

 private:
  std::variant<MultiPoly, NotExact> state_;
};

/// Primitive P with dP = w in the independent coordinates, normalized so
/// that P vanishes when every coordinate is zero. Integrates along the
/// coordinate axes from the origin in canonical variable order.
PotentialResult potential(const OneForm& w);

/// Primitive under the frontal rule: returns F (possibly involving `a`) with
/// differential(F, frontal(n)) == w. The a-coefficient is read off the
/// (theta1, b1) obstruction and must be free of coordinates.
PotentialResult frontal_potential(const OneForm& w, int n);

}  // namespace legendre::algebra
