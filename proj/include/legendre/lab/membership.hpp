#pragma once

#include <optional>

#include <json.hpp>

#include "legendre/frontal/engine.hpp"
#include "legendre/frontal/legendrian_data.hpp"

namespace legendre::lab {

struct MembershipVerdict {
  bool in_X = false;  // creative condition
  frontal::GenericityReport genericity;
  bool in_Y = false;  // b = theta and a = |theta|^2 / 2
  bool in_GY = false;
  /// True when both tests were decided by polynomial identity.
  bool exact = false;
  double creative_residual = 0.0;
  double fixed_residual = 0.0;
  double creative_tolerance = 0.0;
  double fixed_tolerance = 0.0;

  [[nodiscard]] bool in_GX() const {
    return in_X && genericity.verdict == frontal::GenericityReport::Verdict::looks_generic;
  }
};

/// Tolerances default to 1e-9 for values of closed forms, 50 h^2 where
/// finite differences or grid samples are involved. Symbolic data is
/// decided exactly; genericity always comes from the grid probe.
MembershipVerdict membership(const frontal::LegendrianData& d, const frontal::GridSpec& grid,
                             std::optional<double> tol = std::nullopt);

nlohmann::ordered_json to_json(const MembershipVerdict& v);

/// Max over the grid of |L(d) - d| in all components.
double legendre_fixedness(const frontal::LegendrianData& d, const frontal::GridSpec& grid);

}  // namespace legendre::lab
