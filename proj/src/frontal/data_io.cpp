#include "legendre/frontal/data_io.hpp"

#include <fstream>

namespace legendre::frontal {

namespace {

nlohmann::ordered_json vec_json(const Vec& v) {
  auto j = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

Vec json_vec(const nlohmann::json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected) {
    throw DataFormatError(std::string(what) + ": expected an array of " + std::to_string(expected) + " numbers");
  }
  Vec v(static_cast<Eigen::Index>(expected));
  for (std::size_t i = 0; i < expected; ++i) {
    if (!j[i].is_number()) throw DataFormatError(std::string(what) + ": non-numeric entry");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

}  // namespace

nlohmann::ordered_json data_to_json(const LegendrianData& d, const GridSpec& grid) {
  const Sampled s = d.sample(grid);
  nlohmann::ordered_json j;
  j["n"] = d.n();
  j["mode"] = to_string(DataMode::sampled_grid);
  auto box = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : grid.box) box.push_back({lo, hi});
  j["grid"] = {{"box", box}, {"counts", grid.counts}, {"fd_step", grid.fd_step}};
  auto samples = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    samples.push_back({{"x", vec_json(grid.point(k))},
                       {"theta", vec_json(s.theta[k])},
                       {"a", s.a[k]},
                       {"b", vec_json(s.b[k])}});
  }
  j["samples"] = std::move(samples);
  return j;
}

LegendrianData data_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw DataFormatError("n must be positive");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != to_string(DataMode::sampled_grid)) {
      throw DataFormatError("mode '" + mode + "' cannot be stored in a file; use sampled_grid");
    }
    const auto& g = j.at("grid");
    GridSpec grid;
    for (const auto& axis : g.at("box")) {
      const Vec lh = json_vec(axis, 2, "grid.box");
      grid.box.emplace_back(lh(0), lh(1));
    }
    grid.counts = g.at("counts").get<std::vector<int>>();
    if (g.contains("fd_step")) grid.fd_step = g.at("fd_step").get<double>();
    if (grid.n() != n || grid.counts.size() != grid.box.size()) {
      throw DataFormatError("grid dimension does not match n");
    }
    grid.validate();

    const auto& samples = j.at("samples");
    if (!samples.is_array() || samples.size() != grid.size()) {
      throw DataFormatError("expected " + std::to_string(grid.size()) + " samples");
    }
    Sampled s;
    s.grid = grid;
    const auto dim = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& e = samples[k];
      const Vec x = json_vec(e.at("x"), dim, "sample x");
      if ((x - grid.point(k)).norm() > 1e-9 * std::max(1.0, x.norm())) {
        throw DataFormatError("sample " + std::to_string(k) + " is not at its grid node");
      }
      s.theta.push_back(json_vec(e.at("theta"), dim, "sample theta"));
      if (!e.at("a").is_number()) throw DataFormatError("sample a: not a number");
      s.a.push_back(e.at("a").get<double>());
      s.b.push_back(json_vec(e.at("b"), dim, "sample b"));
    }
    return LegendrianData(n, std::move(s));
  } catch (const nlohmann::json::exception& e) {
    throw DataFormatError(std::string("malformed data file: ") + e.what());
  } catch (const DataFormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw DataFormatError(e.what());
  }
}

void write_data_file(const std::string& path, const LegendrianData& d, const GridSpec& grid) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data_to_json(d, grid).dump(1) << '\n';
}

LegendrianData read_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFormatError("cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataFormatError(std::string("malformed data file: ") + e.what());
  }
  return data_from_json(j);
}

}  // namespace legendre::frontal
