#include "legendre/sphere/sphere.hpp"

#include <cmath>

namespace legendre::sphere {

namespace {

constexpr double kSeriesThreshold = 1e-8;
constexpr double kAntipodalTolerance = 1e-12;

Vec embed(const Vec& tangent) {
  Vec out = Vec::Zero(tangent.size() + 1);
  out.tail(tangent.size()) = tangent;
  return out;
}

void require_geodesic(double r) {
  if (!(r < M_PI)) throw GeodesicUndefined(r);
}

}  // namespace

SpherePoint::SpherePoint(Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("SpherePoint: need at least two coordinates");
  const double norm = coords_.norm();
  if (!(norm > 1e-300) || !std::isfinite(norm)) throw std::invalid_argument("SpherePoint: cannot normalize");
  coords_ /= norm;
}

SpherePoint SpherePoint::base(int n) {
  Vec e = Vec::Zero(n + 1);
  e(0) = 1.0;
  return SpherePoint(e);
}

double sinc(double r) { return std::abs(r) < kSeriesThreshold ? 1.0 - r * r / 6.0 : std::sin(r) / r; }

SpherePoint exp_map(const TangentAtBase& v) {
  const double r = v.norm();
  Vec out = embed(sinc(r) * v.components);
  out(0) = std::cos(r);
  return SpherePoint(out);
}

TangentAtBase log_map(const SpherePoint& p) {
  const Vec& x = p.coords();
  Vec base = Vec::Zero(x.size());
  base(0) = -1.0;
  if ((x - base).norm() <= kAntipodalTolerance) throw AntipodalPoint();
  const Vec tail = x.tail(x.size() - 1);
  const double s = tail.norm();
  const double r = std::atan2(s, x(0));
  // r / sin r = 1 / sinc(r); near e_1 the tail itself is the answer to O(r^3).
  return TangentAtBase(tail / sinc(r));
}

Vec parallel_transport(const TangentAtBase& v, const TangentAtBase& w) {
  if (v.n() != w.n()) throw std::invalid_argument("parallel_transport: dimension mismatch");
  const double r = v.norm();
  require_geodesic(r);
  Vec out = embed(w.components);
  if (r == 0.0) return out;
  const Vec dir = v.components / r;
  const double along = dir.dot(w.components);
  Vec turn = embed(dir) * (std::cos(r) - 1.0);
  turn(0) = -std::sin(r);
  return out + along * turn;
}

std::vector<Vec> transported_frame(const TangentAtBase& v) {
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(v.n()));
  for (int i = 0; i < v.n(); ++i) {
    out.push_back(parallel_transport(v, TangentAtBase(Vec::Unit(v.n(), i))));
  }
  return out;
}

std::vector<Vec> dual_frame(const TangentAtBase& v) {
  const double r = v.norm();
  require_geodesic(r);
  const double stretch = 1.0 / sinc(r);
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(v.n()));
  for (int i = 0; i < v.n(); ++i) {
    Vec e = Vec::Unit(v.n(), i);
    if (r > 0.0) {
      const Vec dir = v.components / r;
      const Vec par = dir.dot(e) * dir;
      e = par + stretch * (e - par);
    }
    out.push_back(parallel_transport(v, TangentAtBase(e)));
  }
  return out;
}

}  // namespace legendre::sphere
