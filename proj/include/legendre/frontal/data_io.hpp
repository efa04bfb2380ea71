#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "legendre/frontal/legendrian_data.hpp"

namespace legendre::frontal {

class DataFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {n, mode: "sampled_grid", grid: {box, counts, fd_step}, samples: [{x, theta, a, b}]}
/// Data in any mode is written as its samples on `grid`.
nlohmann::ordered_json data_to_json(const LegendrianData& d, const GridSpec& grid);
LegendrianData data_from_json(const nlohmann::json& j);

void write_data_file(const std::string& path, const LegendrianData& d, const GridSpec& grid);
LegendrianData read_data_file(const std::string& path);

}  // namespace legendre::frontal
