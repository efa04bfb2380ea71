#pragma once

#include <string>
#include <vector>

#include "legendre/frontal/legendrian_data.hpp"

namespace legendre::lab {

/// gy-quadratic, case-ii1, case-ii2, constant-b, case-i, example1, and the
/// frontal catalog names (cusp, parabola-front, ellipse, paraboloid2d).
const std::vector<std::string>& data_catalog_names();

/// Catalog data in dimension grid.n(). Entries backed by a frontal without
/// closed-form data are computed by data_of_frontal on `grid`. Throws
/// frontal::UnknownCatalogEntry, or std::invalid_argument when the entry does
/// not exist in that dimension.
frontal::LegendrianData catalog_data(const std::string& name, const frontal::GridSpec& grid);

}  // namespace legendre::lab
