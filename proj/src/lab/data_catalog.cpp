#include "legendre/lab/data_catalog.hpp"

#include "legendre/frontal/catalog.hpp"
#include "legendre/frontal/engine.hpp"
#include "legendre/lab/constructions.hpp"
#include "legendre/lab/transforms.hpp"

namespace legendre::lab {

using algebra::MultiPoly;
using frontal::LegendrianData;

namespace {

LegendrianData from_strings(int n, const std::string& theta, const std::string& a, const std::string& b) {
  // `theta` and `b` use "x" for the coordinate; "S" in `a` is sum x_i^2.
  auto per_axis = [n](const std::string& pattern) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) {
      std::string s = pattern;
      for (std::size_t p = s.find('x'); p != std::string::npos; p = s.find('x', p + 1)) {
        s.insert(p + 1, std::to_string(i));
      }
      out.push_back(s);
    }
    return out;
  };
  std::string sum;
  std::string linear;
  for (int i = 1; i <= n; ++i) {
    sum += (i > 1 ? " + x" : "x") + std::to_string(i) + "^2";
    linear += (i > 1 ? " + x" : "x") + std::to_string(i);
  }
  std::string a_text = a;
  if (const auto p = a_text.find('S'); p != std::string::npos) a_text.replace(p, 1, "(" + sum + ")");
  if (const auto p = a_text.find('L'); p != std::string::npos) a_text.replace(p, 1, "(" + linear + ")");
  return frontal::symbolic_data(per_axis(theta), a_text, per_axis(b));
}

void require_n(const std::string& name, int n, int want) {
  if (n != want) {
    throw std::invalid_argument("catalog entry '" + name + "' needs n = " + std::to_string(want) + " (got " +
                                std::to_string(n) + ")");
  }
}

}  // namespace

const std::vector<std::string>& data_catalog_names() {
  static const std::vector<std::string> names{"gy-quadratic", "case-ii1", "case-ii2",       "constant-b",
                                              "case-i",       "example1", "cusp",           "parabola-front",
                                              "ellipse",      "paraboloid2d"};
  return names;
}

LegendrianData catalog_data(const std::string& name, const frontal::GridSpec& grid) {
  const int n = grid.n();
  if (n < 1) throw std::invalid_argument("catalog data needs at least one grid axis");
  if (name == "gy-quadratic") return gy_quadratic(n);
  if (name == "case-ii1") return from_strings(n, "x", "S", "2*x");
  if (name == "case-ii2") return from_strings(n, "2*x", "S", "x");
  if (name == "constant-b") return from_strings(n, "x", "L", "1");
  if (name == "case-i") return fixed_coordinate_counterexample(n, 1, 1, grid).perturbed;
  const auto entry = frontal::frontal_catalog(name);
  require_n(name, n, entry.map.n);
  if (entry.data) return *entry.data;
  return frontal::data_of_frontal(entry.map, grid).data;
}

}  // namespace legendre::lab
