#include "legendre/frontal/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace legendre::frontal {

void GridSpec::validate() const {
  if (box.empty()) throw std::invalid_argument("grid: at least one axis required");
  if (box.size() != counts.size()) throw std::invalid_argument("grid: box and counts differ in length");
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (!(box[k].first < box[k].second)) {
      throw std::invalid_argument("grid: axis " + std::to_string(k + 1) + " needs lo < hi");
    }
    if (counts[k] < 3) throw std::invalid_argument("grid: axis " + std::to_string(k + 1) + " needs count >= 3");
  }
  if (!(fd_step > 0.0)) throw std::invalid_argument("grid: fd_step must be positive");
}

std::size_t GridSpec::size() const {
  std::size_t out = 1;
  for (int c : counts) out *= static_cast<std::size_t>(c);
  return out;
}

double GridSpec::spacing(int axis) const {
  const auto k = static_cast<std::size_t>(axis);
  return (box[k].second - box[k].first) / (counts[k] - 1);
}

std::vector<int> GridSpec::multi_index(std::size_t flat) const {
  std::vector<int> idx(counts.size());
  for (std::size_t k = counts.size(); k-- > 0;) {
    const auto c = static_cast<std::size_t>(counts[k]);
    idx[k] = static_cast<int>(flat % c);
    flat /= c;
  }
  return idx;
}

std::size_t GridSpec::flat_index(const std::vector<int>& index) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) flat = flat * static_cast<std::size_t>(counts[k]) + index[k];
  return flat;
}

Vec GridSpec::point(std::size_t flat) const {
  const auto idx = multi_index(flat);
  Vec x(n());
  for (int k = 0; k < n(); ++k) {
    const auto& [lo, hi] = box[static_cast<std::size_t>(k)];
    const int last = counts[static_cast<std::size_t>(k)] - 1;
    // Endpoints are hit exactly; the midpoint of a symmetric box is exactly 0.
    x(k) = idx[static_cast<std::size_t>(k)] == last ? hi : lo + (hi - lo) * idx[static_cast<std::size_t>(k)] / last;
    if (std::abs(x(k)) < 1e-15 * (hi - lo)) x(k) = 0.0;
  }
  return x;
}

std::size_t GridSpec::find_node(const Vec& x) const {
  if (x.size() != n()) return size();
  std::vector<int> idx(counts.size());
  for (int k = 0; k < n(); ++k) {
    const double h = spacing(k);
    const double s = (x(k) - box[static_cast<std::size_t>(k)].first) / h;
    const double r = std::round(s);
    if (std::abs(s - r) > 1e-9 || r < 0 || r > counts[static_cast<std::size_t>(k)] - 1) return size();
    idx[static_cast<std::size_t>(k)] = static_cast<int>(r);
  }
  return flat_index(idx);
}

GridSpec GridSpec::line(double lo, double hi, int count, double fd_step) {
  GridSpec g{{{lo, hi}}, {count}, fd_step};
  g.validate();
  return g;
}

GridSpec GridSpec::cube(int n, double lo, double hi, int count, double fd_step) {
  GridSpec g;
  for (int k = 0; k < n; ++k) {
    g.box.emplace_back(lo, hi);
    g.counts.push_back(count);
  }
  g.fd_step = fd_step;
  g.validate();
  return g;
}

}  // namespace legendre::frontal
