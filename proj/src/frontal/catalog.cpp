#include "legendre/frontal/catalog.hpp"

#include <cmath>

namespace legendre::frontal {

namespace {

Vec v2(double p, double q) { return (Vec(2) << p, q).finished(); }

Mat col2(double p, double q) { return (Mat(2, 1) << p, q).finished(); }

Mat scalar(double v) { return Mat::Constant(1, 1, v); }

Vec single(double v) { return Vec::Constant(1, v); }

FrontalMap parabola_front() {
  FrontalMap f;
  f.n = 1;
  f.name = "parabola-front";
  f.phi = [](const Vec& x) {
    const double t = x(0);
    return Vec(t * v2(-std::sin(t), std::cos(t)) + 0.5 * t * t * v2(std::cos(t), std::sin(t)));
  };
  f.nu = [](const Vec& x) { return v2(std::cos(x(0)), std::sin(x(0))); };
  f.jacobian_phi = [](const Vec& x) {
    const double t = x(0);
    return Mat((1 + 0.5 * t * t) * col2(-std::sin(t), std::cos(t)));
  };
  f.jacobian_nu = [](const Vec& x) { return col2(-std::sin(x(0)), std::cos(x(0))); };
  return f;
}

FrontalMap ellipse() {
  FrontalMap f;
  f.n = 1;
  f.name = "ellipse";
  f.phi = [](const Vec& x) { return v2(2 * std::cos(x(0)), std::sin(x(0))); };
  f.nu = [](const Vec& x) { return v2(std::cos(x(0)), 2 * std::sin(x(0))).normalized(); };
  f.jacobian_phi = [](const Vec& x) { return col2(-2 * std::sin(x(0)), std::cos(x(0))); };
  f.jacobian_nu = [](const Vec& x) {
    const double c = std::cos(x(0)), s = std::sin(x(0));
    const double q = c * c + 4 * s * s;
    const Vec u = v2(c, 2 * s), du = v2(-s, 2 * c);
    return Mat((du * q - u * 3 * s * c) / std::pow(q, 1.5));
  };
  return f;
}

FrontalMap paraboloid2d() {
  FrontalMap f;
  f.n = 2;
  f.name = "paraboloid2d";
  f.phi = [](const Vec& u) { return (Vec(3) << 0.5 * u.squaredNorm(), u(0), u(1)).finished(); };
  f.nu = [](const Vec& u) { return (Vec(3) << 1.0, -u(0), -u(1)).finished().normalized(); };
  f.jacobian_phi = [](const Vec& u) {
    Mat j(3, 2);
    j << u(0), u(1), 1, 0, 0, 1;
    return j;
  };
  f.jacobian_nu = [](const Vec& u) {
    const double q = 1 + u.squaredNorm();
    const Vec w = (Vec(3) << 1.0, -u(0), -u(1)).finished();
    Mat j(3, 2);
    for (int k = 0; k < 2; ++k) {
      Vec dw = Vec::Zero(3);
      dw(k + 1) = -1;
      j.col(k) = dw / std::sqrt(q) - w * u(k) / std::pow(q, 1.5);
    }
    return j;
  };
  return f;
}

}  // namespace

FrontalMap example1_frontal() {
  FrontalMap f;
  f.n = 1;
  f.name = "example1";
  f.phi = [](const Vec& x) { return v2(std::pow(x(0), 2), std::pow(x(0), 5)); };
  f.nu = [](const Vec& x) {
    const double t = x(0);
    return Vec(v2(-5 * t * t * t, 2) / std::sqrt(25 * std::pow(t, 6) + 4));
  };
  f.jacobian_phi = [](const Vec& x) { return col2(2 * x(0), 5 * std::pow(x(0), 4)); };
  f.jacobian_nu = [](const Vec& x) {
    const double t = x(0);
    const double s15 = std::pow(25 * std::pow(t, 6) + 4, 1.5);
    return col2(-60 * t * t / s15, -150 * std::pow(t, 5) / s15);
  };
  return f;
}

LegendrianData example1_data() {
  ClosedForm c;
  auto s = [](double t) { return 25 * std::pow(t, 6) + 4; };
  c.theta = [](const Vec& x) { return single(std::atan2(2.0, -5 * std::pow(x(0), 3))); };
  c.a = [s](const Vec& x) { return -3 * std::pow(x(0), 5) / std::sqrt(s(x(0))); };
  c.b = [s](const Vec& x) {
    const double t = x(0);
    return single(-t * t * (5 * std::pow(t, 6) + 2) / std::sqrt(s(t)));
  };
  c.dtheta = [s](const Vec& x) { return scalar(30 * x(0) * x(0) / s(x(0))); };
  c.da = [s](const Vec& x) {
    const double t = x(0);
    return single((-150 * std::pow(t, 10) - 60 * std::pow(t, 4)) / std::pow(s(t), 1.5));
  };
  c.db = [s](const Vec& x) {
    const double t = x(0);
    return scalar(-t * (625 * std::pow(t, 12) + 110 * std::pow(t, 6) + 16) / std::pow(s(t), 1.5));
  };
  return LegendrianData(1, std::move(c));
}

FrontalMap cusp_frontal() {
  FrontalMap f;
  f.n = 1;
  f.name = "cusp";
  f.phi = [](const Vec& x) { return v2(x(0) * x(0), std::pow(x(0), 3)); };
  f.nu = [](const Vec& x) { return Vec(v2(-3 * x(0), 2) / std::sqrt(9 * x(0) * x(0) + 4)); };
  f.jacobian_phi = [](const Vec& x) { return col2(2 * x(0), 3 * x(0) * x(0)); };
  f.jacobian_nu = [](const Vec& x) {
    const double s15 = std::pow(9 * x(0) * x(0) + 4, 1.5);
    return col2(-12 / s15, -18 * x(0) / s15);
  };
  return f;
}

LegendrianData cusp_data() {
  ClosedForm c;
  auto s = [](double t) { return 9 * t * t + 4; };
  c.theta = [](const Vec& x) { return single(std::atan2(2.0, -3 * x(0))); };
  c.a = [s](const Vec& x) { return -std::pow(x(0), 3) / std::sqrt(s(x(0))); };
  c.b = [s](const Vec& x) {
    const double t = x(0);
    return single(-t * t * (3 * t * t + 2) / std::sqrt(s(t)));
  };
  c.dtheta = [s](const Vec& x) { return scalar(6 / s(x(0))); };
  c.da = [s](const Vec& x) {
    const double t = x(0);
    return single(-6 * t * t * (3 * t * t + 2) / std::pow(s(t), 1.5));
  };
  c.db = [s](const Vec& x) {
    const double t = x(0);
    return scalar(-t * (81 * std::pow(t, 4) + 66 * t * t + 16) / std::pow(s(t), 1.5));
  };
  return LegendrianData(1, std::move(c));
}

const std::vector<std::string>& frontal_catalog_names() {
  static const std::vector<std::string> names{"example1", "cusp", "parabola-front", "ellipse", "paraboloid2d"};
  return names;
}

CatalogFrontal frontal_catalog(const std::string& name) {
  if (name == "example1") return {example1_frontal(), GridSpec::line(-1, 1, 2001), example1_data()};
  if (name == "cusp") return {cusp_frontal(), GridSpec::line(-1, 1, 2001), cusp_data()};
  if (name == "parabola-front") {
    return {parabola_front(), GridSpec::line(-2, 2, 2001), symbolic_data({"x1"}, "1/2*x1^2", {"x1"})};
  }
  if (name == "ellipse") return {ellipse(), GridSpec::line(-1.5, 1.5, 2001), std::nullopt};
  if (name == "paraboloid2d") return {paraboloid2d(), GridSpec::cube(2, -1, 1, 41), std::nullopt};
  throw UnknownCatalogEntry(name);
}

}  // namespace legendre::frontal
