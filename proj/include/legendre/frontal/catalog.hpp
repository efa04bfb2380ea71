#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legendre/frontal/frontal_map.hpp"
#include "legendre/frontal/legendrian_data.hpp"

namespace legendre::frontal {

class UnknownCatalogEntry : public std::invalid_argument {
 public:
  explicit UnknownCatalogEntry(const std::string& name)
      : std::invalid_argument("unknown catalog entry '" + name + "'") {}
};

struct CatalogFrontal {
  FrontalMap map;
  GridSpec grid;
  /// Exact data of the frontal when it is known in closed form.
  std::optional<LegendrianData> data;
};

/// example1, cusp, parabola-front, ellipse, paraboloid2d
const std::vector<std::string>& frontal_catalog_names();
CatalogFrontal frontal_catalog(const std::string& name);

/// phi(x) = (x^2, x^5), nu = (-5x^3, 2)/sqrt(25x^6 + 4).
FrontalMap example1_frontal();
/// theta, a, b of example1_frontal with exact first derivatives.
LegendrianData example1_data();

FrontalMap cusp_frontal();
LegendrianData cusp_data();

}  // namespace legendre::frontal
