#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "legendre/algebra/multipoly.hpp"
#include "legendre/frontal/catalog.hpp"
#include "legendre/frontal/data_io.hpp"
#include "legendre/frontal/engine.hpp"
#include "legendre/sphere/sphere.hpp"

using namespace legendre::frontal;
using legendre::Status;
using legendre::algebra::MultiPoly;

namespace {

Vec V(std::initializer_list<double> xs) {
  Vec out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) out(k++) = x;
  return out;
}

Vec X(double x) { return V({x}); }

FrontalMap circle() {
  FrontalMap f;
  f.name = "circle";
  f.phi = [](const Vec& x) { return V({std::cos(x(0)), std::sin(x(0))}); };
  f.nu = f.phi;
  return f;
}

FrontalMap negated(FrontalMap f) {
  auto nu = f.nu;
  f.nu = [nu](const Vec& x) { return Vec(-nu(x)); };
  if (f.jacobian_nu) {
    auto jn = f.jacobian_nu;
    f.jacobian_nu = [jn](const Vec& x) { return Mat(-jn(x)); };
  }
  return f;
}

double max_error_vs_phi(const LegendrianData& d, const FrontalMap& f, const GridSpec& g) {
  double worst = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Vec x = g.point(k);
    worst = std::max(worst, (envelope_reconstruct(d, x) - f.phi(x)).norm());
  }
  return worst;
}

}  // namespace

TEST(Grid, NodesAndIndices) {
  const GridSpec g = GridSpec::cube(2, -1, 1, 5);
  EXPECT_EQ(g.size(), 25u);
  EXPECT_EQ(g.point(0), V({-1, -1}));
  EXPECT_EQ(g.point(24), V({1, 1}));
  EXPECT_EQ(g.point(1), V({-1, -0.5}));
  EXPECT_EQ(g.flat_index(g.multi_index(17)), 17u);
  EXPECT_EQ(g.find_node(V({0, 0.5})), 13u);
  EXPECT_EQ(g.find_node(V({0.1, 0})), g.size());
  EXPECT_THROW(GridSpec::line(0, 1, 2).validate(), std::invalid_argument);
  EXPECT_THROW(GridSpec::line(1, 0, 5).validate(), std::invalid_argument);
  EXPECT_THROW(GridSpec::line(0, 1, 5, 0.0).validate(), std::invalid_argument);
}

TEST(SupportFunction, Examples) {
  const FrontalMap e1 = example1_frontal();
  for (double x : {-0.9, -0.3, 0.0, 0.4, 1.0, 1.7}) {
    EXPECT_NEAR(support_function(e1, X(x)), -3 * std::pow(x, 5) / std::sqrt(25 * std::pow(x, 6) + 4), 1e-14);
  }
  FrontalMap zero = circle();
  zero.phi = [](const Vec&) { return V({0, 0}); };
  EXPECT_EQ(support_function(zero, X(0.3)), 0.0);
  EXPECT_NEAR(support_function(circle(), X(2.1)), 1.0, 1e-15);
}

TEST(DataOfFrontal, Example1AtOne) {
  const FrontalMap f = example1_frontal();
  EXPECT_NEAR((f.nu(X(1)) - V({-5, 2}) / std::sqrt(29.0)).norm(), 0.0, 1e-15);

  const GridSpec g = GridSpec::line(-1, 1, 2001);
  const auto res = data_of_frontal(f, g);
  EXPECT_FALSE(res.flipped);
  const Sample s = res.data.evaluate(X(1));
  EXPECT_NEAR(s.a, -3 / std::sqrt(29.0), 1e-15);
  EXPECT_NEAR(s.b(0), -7 / std::sqrt(29.0), 1e-8);
  EXPECT_NEAR(s.theta(0), std::atan2(2.0, -5.0), 1e-15);
  EXPECT_NEAR(s.theta(0), 2.761086276477428, 1e-14);
  // Only x = 0 is non-regular.
  ASSERT_EQ(res.filled.size(), 1u);
  EXPECT_EQ(g.point(res.filled[0])(0), 0.0);
}

TEST(DataOfFrontal, FixedPointDataIsRecovered) {
  const auto c = frontal_catalog("parabola-front");
  const auto res = data_of_frontal(c.map, c.grid);
  for (std::size_t k = 0; k < c.grid.size(); k += 97) {
    const double x = c.grid.point(k)(0);
    const Sample s = res.data.evaluate(X(x));
    EXPECT_NEAR(s.theta(0), x, 1e-12);
    EXPECT_NEAR(s.a, 0.5 * x * x, 1e-12);
    EXPECT_NEAR(s.b(0), x, 1e-8);
  }
}

TEST(DataOfFrontal, CuspMatchesExactQuotient) {
  // a = A/sqrt(s), theta = atan2(v, u): da/dx = (A's - As'/2)/s^{3/2},
  // dtheta/dx = (u v' - v u')/s, so b = (A's - As'/2) / ((u v' - v u') sqrt(s)).
  const MultiPoly A = MultiPoly::parse("-x1^3");
  const MultiPoly s = MultiPoly::parse("9*x1^2 + 4");
  const MultiPoly u = MultiPoly::parse("-3*x1");
  const MultiPoly v = MultiPoly::parse("2");
  const MultiPoly num = A.derivative("x1") * s - MultiPoly(legendre::algebra::Rational(1, 2)) * A * s.derivative("x1");
  const MultiPoly den = u * v.derivative("x1") - v * u.derivative("x1");

  const GridSpec g = GridSpec::line(-1, 1, 401);
  const auto res = data_of_frontal(cusp_frontal(), g);
  const LegendrianData exact = cusp_data();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double x = g.point(k)(0);
    const std::map<std::string, double> at{{"x1", x}};
    const double oracle = num.evaluate(at) / (den.evaluate(at) * std::sqrt(s.evaluate(at)));
    EXPECT_NEAR(res.data.evaluate(X(x)).b(0), oracle, 1e-8) << "x = " << x;
    EXPECT_NEAR(exact.evaluate(X(x)).b(0), oracle, 1e-14) << "x = " << x;
  }
}

TEST(DataOfFrontal, GaussMapSignInvariance) {
  for (const char* name : {"cusp", "ellipse", "paraboloid2d"}) {
    const auto c = frontal_catalog(name);
    const auto flipped = negated(c.map);
    const auto res = data_of_frontal(flipped, c.grid);
    EXPECT_LE(max_error_vs_phi(res.data, c.map, c.grid), 1e-6) << name;
  }
  // The ellipse has nu(0) = e_1, so the negated map needs the global flip.
  const auto c = frontal_catalog("ellipse");
  EXPECT_TRUE(data_of_frontal(negated(c.map), c.grid).flipped);
}

TEST(DataOfFrontal, Errors) {
  FrontalMap broken = circle();
  broken.nu = [](const Vec&) { return V({NAN, NAN}); };
  EXPECT_THROW((void)data_of_frontal(broken, GridSpec::line(-1, 1, 5)), AntipodalBase);

  try {
    (void)data_of_frontal(circle(), GridSpec::line(0, M_PI, 3));
    FAIL() << "expected ChartFailure";
  } catch (const ChartFailure& e) {
    EXPECT_EQ(e.x()(0), M_PI);
  }

  FrontalMap line = circle();
  line.phi = [](const Vec& x) { return V({x(0), 0}); };
  line.nu = [](const Vec&) { return V({1, 0}); };
  EXPECT_THROW((void)data_of_frontal(line, GridSpec::line(-1, 1, 11)), NotCreative);

  FrontalMap point = circle();
  point.phi = [](const Vec&) { return V({0, 0}); };
  point.nu = [](const Vec&) { return V({1, 0}); };
  EXPECT_THROW((void)data_of_frontal(point, GridSpec::line(-1, 1, 11)), SparseRegularSet);
}

TEST(DataOfFrontal, FillModes) {
  const FrontalMap f = example1_frontal();
  const GridSpec g = GridSpec::line(-1, 1, 2001);
  DataOptions extrap;
  extrap.fill = DataOptions::Fill::extrapolate;
  const double near0 = data_of_frontal(f, g).data.evaluate(X(0)).b(0);
  const double ext0 = data_of_frontal(f, g, extrap).data.evaluate(X(0)).b(0);
  // True b(0) = 0; the nearest node is x = 0.001.
  EXPECT_NEAR(near0, example1_data().evaluate(X(0.001)).b(0), 1e-10);
  EXPECT_LT(std::abs(ext0), 1e-9);
}

TEST(EnvelopeReconstruct, Example1ClosedForm) {
  const LegendrianData d = example1_data();
  const GridSpec g = GridSpec::line(-1, 1, 2001);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double x = g.point(k)(0);
    EXPECT_LE((envelope_reconstruct(d, X(x)) - V({x * x, std::pow(x, 5)})).norm(), 1e-9);
  }
  // b (-sin theta, cos theta) + a nu, with b as stated rather than doubled.
  const double x = 0.8;
  const Sample s = d.evaluate(X(x));
  const Vec direct = s.b(0) * V({-std::sin(s.theta(0)), std::cos(s.theta(0))}) +
                     s.a * V({std::cos(s.theta(0)), std::sin(s.theta(0))});
  EXPECT_NEAR((direct - V({x * x, std::pow(x, 5)})).norm(), 0.0, 1e-15);
}

TEST(EnvelopeReconstruct, RadialWhenBVanishes) {
  const Vec theta = V({0.3, -0.4});
  const Vec nu = V({std::cos(0.5), 0.6 * std::sin(0.5) / 0.5 * 0.5, -0.8 * std::sin(0.5)});
  EXPECT_NEAR((envelope_reconstruct(theta, 2.5, V({0, 0})) - 2.5 * nu).norm(), 0.0, 1e-15);
}

TEST(CreativeCheck, Examples) {
  const GridSpec g = GridSpec::line(-1, 1, 2001, 1e-5);
  EXPECT_EQ(creative_check(example1_data(), g, 1e-6).status, Status::pass);

  // Same data without derivative callables goes through central differences.
  ClosedForm fd = *example1_data().closed();
  fd.dtheta = nullptr;
  fd.da = nullptr;
  fd.db = nullptr;
  EXPECT_EQ(creative_check(LegendrianData(1, fd), g, 1e-6).status, Status::pass);

  ClosedForm bumped = fd;
  auto theta = fd.theta;
  auto a = fd.a;
  bumped.a = [theta, a](const Vec& x) { return a(x) + 0.1 * theta(x)(0); };
  const auto rep = creative_check(LegendrianData(1, bumped), g, 1e-6);
  EXPECT_EQ(rep.status, Status::fail);
  // 0.1 max |theta'| over the grid, theta' = 30x^2/(25x^6+4).
  double oracle = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double x = g.point(k)(0);
    oracle = std::max(oracle, 0.1 * 30 * x * x / (25 * std::pow(x, 6) + 4));
  }
  EXPECT_NEAR(rep.details["max_residual"].get<double>(), oracle, 1e-8);

  const auto y = symbolic_data({"x1", "x2"}, "1/2*x1^2 + 1/2*x2^2", {"x1", "x2"});
  const auto yrep = creative_check(y, GridSpec::cube(2, -1, 1, 9), std::nullopt);
  EXPECT_EQ(yrep.status, Status::pass);
  EXPECT_EQ(yrep.details["max_residual"].get<double>(), 0.0);
}

TEST(Genericity, Examples) {
  const GridSpec g = GridSpec::line(-1, 1, 2001);
  const auto lin = genericity_probe(symbolic_data({"x1"}, "1/2*x1^2", {"x1"}), g);
  EXPECT_EQ(lin.fraction_regular_theta, 1.0);
  EXPECT_EQ(lin.fraction_regular_b, 1.0);
  EXPECT_EQ(lin.verdict, GenericityReport::Verdict::looks_generic);

  // |3x^2| <= 1e-9 only at the node x = 0 (next node has 3e-6).
  const auto cubic = genericity_probe(symbolic_data({"x1^3"}, "3/4*x1^4", {"x1^3"}), g);
  EXPECT_LT(cubic.fraction_regular_theta, 1.0);
  EXPECT_EQ(cubic.fraction_regular_theta, 2000.0 / 2001.0);
  EXPECT_EQ(cubic.verdict, GenericityReport::Verdict::looks_generic);

  const auto flat = genericity_probe(symbolic_data({"x1"}, "2*x1", {"2"}), g);
  EXPECT_EQ(flat.fraction_regular_b, 0.0);
  EXPECT_EQ(flat.verdict, GenericityReport::Verdict::degenerate);
  EXPECT_EQ(to_string(flat.verdict), "Degenerate");

  // theta' vanishes on a whole interval: neither generic nor degenerate.
  ClosedForm plateau;
  plateau.theta = [](const Vec& x) { return X(x(0) > 0 ? std::pow(x(0), 4) : 0.0); };
  plateau.a = [](const Vec& x) { return x(0) > 0 ? 0.8 * std::pow(x(0), 5) : 0.0; };
  plateau.b = [](const Vec& x) { return X(x(0)); };
  EXPECT_EQ(genericity_probe(LegendrianData(1, plateau), g).verdict, GenericityReport::Verdict::inconclusive);
}

TEST(Wavefront, Examples) {
  const GridSpec g = GridSpec::line(-1, 1, 2001);
  const auto e1 = wavefront_probe(example1_frontal(), g);
  EXPECT_EQ(e1.status, Status::fail);
  ASSERT_EQ(e1.details["rank_drop"].size(), 1u);
  EXPECT_EQ(e1.details["rank_drop"][0][0].get<double>(), 0.0);

  EXPECT_EQ(wavefront_probe(cusp_frontal(), g).status, Status::pass);

  FrontalMap line = circle();
  line.phi = [](const Vec& x) { return V({x(0), 0}); };
  line.nu = [](const Vec&) { return V({0, 1}); };
  EXPECT_EQ(wavefront_probe(line, g).status, Status::pass);
}

TEST(GaussMapSynthesis, MatchesClosedFormNormal) {
  const GridSpec g = GridSpec::line(-1, 1, 201);
  const FrontalMap ref = example1_frontal();
  const FrontalMap f = plane_curve_with_gauss_map("example1", ref.phi, ref.jacobian_phi, g);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Vec x = g.point(k);
    const Vec r = ref.nu(x);
    const Vec got = f.nu(x);
    EXPECT_LE(std::min((got - r).norm(), (got + r).norm()), 1e-12) << x(0);
  }
  // The synthesized sign may be -nu; the reconstruction does not depend on it.
  DataOptions extrap;
  extrap.fill = DataOptions::Fill::extrapolate;
  EXPECT_LE(max_error_vs_phi(data_of_frontal(f, g, extrap).data, ref, g), 1e-6);

  // (x^3, x^2|x|): the rotated tangent jumps by a right angle at 0.
  auto kink = [](const Vec& x) { return V({std::pow(x(0), 3), x(0) * x(0) * std::abs(x(0))}); };
  auto dkink = [](const Vec& x) {
    Mat j(2, 1);
    j << 3 * x(0) * x(0), 3 * x(0) * std::abs(x(0));
    return j;
  };
  EXPECT_THROW((void)plane_curve_with_gauss_map("kink", kink, dkink, g), GaussMapDiscontinuous);
}

TEST(Roundtrip, CatalogFrontals) {
  for (const auto& name : frontal_catalog_names()) {
    const auto c = frontal_catalog(name);
    const auto rep = roundtrip_check(c.map, c.grid, 1e-6);
    EXPECT_EQ(rep.status, Status::pass) << name << " " << rep.details.dump();
    if (c.data) EXPECT_LE(max_error_vs_phi(*c.data, c.map, c.grid), 1e-9) << name;
  }
}

TEST(DataIo, RoundtripIsLossless) {
  const GridSpec g = GridSpec::line(-1, 1, 21);
  const LegendrianData d = example1_data();
  const auto path = (std::filesystem::temp_directory_path() / "legendre_data_io_test.json").string();
  write_data_file(path, d, g);
  const LegendrianData back = read_data_file(path);
  std::remove(path.c_str());
  ASSERT_EQ(back.mode(), DataMode::sampled_grid);
  EXPECT_EQ(back.sampled()->grid, g);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Sample s = d.evaluate(g.point(k));
    const Sample t = back.evaluate(g.point(k));
    EXPECT_EQ(s.theta, t.theta);
    EXPECT_EQ(s.a, t.a);
    EXPECT_EQ(s.b, t.b);
  }
}

TEST(DataIo, RejectsMalformedInput) {
  auto j = nlohmann::json(data_to_json(example1_data(), GridSpec::line(-1, 1, 5)));
  EXPECT_NO_THROW((void)data_from_json(j));
  auto bad = j;
  bad["samples"].erase(0);
  EXPECT_THROW((void)data_from_json(bad), DataFormatError);
  bad = j;
  bad["mode"] = "symbolic";
  EXPECT_THROW((void)data_from_json(bad), DataFormatError);
  bad = j;
  bad["samples"][2]["b"] = {1.0, 2.0};
  EXPECT_THROW((void)data_from_json(bad), DataFormatError);
  bad = j;
  bad["grid"]["counts"] = {2};
  EXPECT_THROW((void)data_from_json(bad), DataFormatError);
  EXPECT_THROW((void)data_from_json(nlohmann::json::parse("[1,2]")), DataFormatError);
}

TEST(EnvelopeReconstruct, NonRadialBNeedsDualFrame) {
  // Graph of f = u1^2/2 + u2^2 with nu = (1, -grad f)/|.|; b is not radial in theta.
  FrontalMap f;
  f.n = 2;
  f.name = "anisotropic";
  f.phi = [](const Vec& u) { return V({0.5 * u(0) * u(0) + u(1) * u(1), u(0), u(1)}); };
  f.nu = [](const Vec& u) { return Vec(V({1, -u(0), -2 * u(1)}).normalized()); };
  const GridSpec g = GridSpec::cube(2, -1, 1, 41);
  const auto res = data_of_frontal(f, g);
  EXPECT_LE(max_error_vs_phi(res.data, f, g), 1e-6);

  double transported = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Sample s = res.data.evaluate(g.point(k));
    const legendre::sphere::TangentAtBase v(s.theta);
    const auto frame = legendre::sphere::transported_frame(v);
    const Vec p = s.a * legendre::sphere::exp_map(v).coords() + s.b(0) * frame[0] + s.b(1) * frame[1];
    transported = std::max(transported, (p - f.phi(g.point(k))).norm());
  }
  EXPECT_GT(transported, 1e-3);
}
