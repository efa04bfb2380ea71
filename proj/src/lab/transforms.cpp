#include "legendre/lab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "legendre/algebra/symbols.hpp"

namespace legendre::lab {

using algebra::MultiPoly;
using frontal::ClosedForm;
using frontal::Jet;
using frontal::Mat;
using frontal::Sample;
using frontal::Sampled;
using frontal::Symbolic;
using frontal::Vec;

namespace {

// Pointwise action on values and on first-order jets.
struct PointMap {
  std::function<Sample(const Sample&)> value;
  std::function<Jet(const Jet&)> jet;
};

PointMap legendre_point_map() {
  PointMap m;
  m.value = [](const Sample& s) { return Sample{s.b, s.b.dot(s.theta) - s.a, s.theta}; };
  m.jet = [](const Jet& j) {
    Jet o;
    o.x = j.x;
    o.theta = j.b;
    o.a = j.b.dot(j.theta) - j.a;
    o.b = j.theta;
    o.dtheta = j.db;
    o.da = j.db.transpose() * j.theta + j.dtheta.transpose() * j.b - j.da;
    o.db = j.dtheta;
    return o;
  };
  return m;
}

PointMap fake_point_map(const std::vector<Rational>& tr) {
  const auto n = static_cast<Eigen::Index>(tr.size());
  Vec t(n);
  for (Eigen::Index i = 0; i < n; ++i) t(i) = tr[static_cast<std::size_t>(i)].to_double();
  const Vec ones = Vec::Ones(n);
  const Vec p_th = t - ones, p_b = 2 * ones - t, q_th = t, q_b = ones - t;
  const Vec alpha = 0.5 * t.cwiseProduct(t - ones);
  const Vec beta = t.cwiseProduct(2 * ones - t);
  const Vec gamma = 0.5 * (ones - t).cwiseProduct(2 * ones - t);

  auto support = [=](const Vec& th, double a, const Vec& b) {
    return (alpha.cwiseProduct(th).cwiseProduct(th) + beta.cwiseProduct(th).cwiseProduct(b) +
            gamma.cwiseProduct(b).cwiseProduct(b))
               .sum() -
           a;
  };
  PointMap m;
  m.value = [=](const Sample& s) {
    return Sample{Vec(p_th.cwiseProduct(s.theta) + p_b.cwiseProduct(s.b)), support(s.theta, s.a, s.b),
                  Vec(q_th.cwiseProduct(s.theta) + q_b.cwiseProduct(s.b))};
  };
  m.jet = [=](const Jet& j) {
    Jet o;
    o.x = j.x;
    o.theta = p_th.cwiseProduct(j.theta) + p_b.cwiseProduct(j.b);
    o.a = support(j.theta, j.a, j.b);
    o.b = q_th.cwiseProduct(j.theta) + q_b.cwiseProduct(j.b);
    o.dtheta = p_th.asDiagonal() * j.dtheta + p_b.asDiagonal() * j.db;
    o.db = q_th.asDiagonal() * j.dtheta + q_b.asDiagonal() * j.db;
    o.da = j.dtheta.transpose() * (2 * alpha.cwiseProduct(j.theta) + beta.cwiseProduct(j.b)) +
           j.db.transpose() * (beta.cwiseProduct(j.theta) + 2 * gamma.cwiseProduct(j.b)) - j.da;
    return o;
  };
  return m;
}

Jet source_jet(const ClosedForm& c, const Vec& x) {
  Jet j;
  j.x = x;
  j.theta = c.theta(x);
  j.a = c.a(x);
  j.b = c.b(x);
  j.dtheta = c.dtheta(x);
  j.da = c.da(x);
  j.db = c.db(x);
  return j;
}

LegendrianData apply_numeric(const PointMap& m, const LegendrianData& d) {
  if (const auto* s = d.sampled()) {
    Sampled out;
    out.grid = s->grid;
    for (std::size_t k = 0; k < s->theta.size(); ++k) {
      const Sample r = m.value(Sample{s->theta[k], s->a[k], s->b[k]});
      out.theta.push_back(r.theta);
      out.a.push_back(r.a);
      out.b.push_back(r.b);
    }
    return LegendrianData(d.n(), std::move(out));
  }
  const ClosedForm src = *d.closed();
  auto value = [src, m](const Vec& x) { return m.value(Sample{src.theta(x), src.a(x), src.b(x)}); };
  ClosedForm out;
  out.theta = [value](const Vec& x) { return value(x).theta; };
  out.a = [value](const Vec& x) { return value(x).a; };
  out.b = [value](const Vec& x) { return value(x).b; };
  if (src.has_derivatives()) {
    auto jet = [src, m](const Vec& x) { return m.jet(source_jet(src, x)); };
    out.dtheta = [jet](const Vec& x) { return jet(x).dtheta; };
    out.da = [jet](const Vec& x) { return jet(x).da; };
    out.db = [jet](const Vec& x) { return jet(x).db; };
  }
  return LegendrianData(d.n(), std::move(out));
}

LegendrianData apply_symbolic(const algebra::LegendrianPolyMap& m, const Symbolic& s, int n) {
  const auto r = m.apply(s.theta, s.a, s.b);
  return LegendrianData(n, Symbolic{r.theta, r.a, r.b});
}

double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::vector<Rational> FakeParams::expanded(int n) const {
  if (t.size() == 1) return std::vector<Rational>(static_cast<std::size_t>(n), t.front());
  if (static_cast<int>(t.size()) != n) {
    throw std::invalid_argument("fake transform: " + std::to_string(t.size()) + " parameters for n = " +
                                std::to_string(n));
  }
  return t;
}

bool FakeParams::in_involution_set() const {
  return std::all_of(t.begin(), t.end(), [](const Rational& v) { return v == 0 || v == 1 || v == 2; });
}

std::string Transform::name() const {
  if (kind == Kind::legendre) return "legendre";
  std::string out = "fake:t=";
  for (std::size_t i = 0; i < params.t.size(); ++i) {
    if (i) out += ',';
    out += params.t[i].to_string();
  }
  return out;
}

Transform parse_transform(const std::string& text) {
  if (text == "legendre") return {};
  const std::string prefix = "fake:t=";
  if (text.rfind(prefix, 0) != 0) {
    throw TransformParseError("unknown transform '" + text + "' (expected legendre or fake:t=...)");
  }
  Transform tr;
  tr.kind = Transform::Kind::fake;
  std::stringstream list(text.substr(prefix.size()));
  std::string item;
  while (std::getline(list, item, ',')) {
    try {
      tr.params.t.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw TransformParseError("bad fake parameter '" + item + "' in '" + text + "'");
    }
  }
  if (tr.params.t.empty() || text.back() == ',') throw TransformParseError("missing fake parameters in '" + text + "'");
  return tr;
}

algebra::LegendrianPolyMap as_poly_map(const Transform& tr, int n) {
  if (tr.kind == Transform::Kind::legendre) return algebra::LegendrianPolyMap::legendre(n);
  return algebra::LegendrianPolyMap::family(tr.params.expanded(n));
}

LegendrianData legendre_transform(const LegendrianData& d) {
  if (const auto* s = d.symbolic()) return apply_symbolic(algebra::LegendrianPolyMap::legendre(d.n()), *s, d.n());
  return apply_numeric(legendre_point_map(), d);
}

LegendrianData fake_transform(const LegendrianData& d, const FakeParams& t) {
  const auto tv = t.expanded(d.n());
  if (const auto* s = d.symbolic()) return apply_symbolic(algebra::LegendrianPolyMap::family(tv), *s, d.n());
  return apply_numeric(fake_point_map(tv), d);
}

LegendrianData apply(const Transform& tr, const LegendrianData& d) {
  return tr.kind == Transform::Kind::legendre ? legendre_transform(d) : fake_transform(d, tr.params);
}

Report involution_check(const Transform& tr, const LegendrianData& d, const GridSpec& grid, double tol) {
  Report rep;
  rep.check_name = "involution:" + tr.name();
  const LegendrianData twice = apply(tr, apply(tr, d));
  if (const auto* s = d.symbolic()) {
    const auto* t = twice.symbolic();
    rep.details["mode"] = "symbolic";
    auto compare = [&](const MultiPoly& got, const MultiPoly& want, const std::string& label) {
      const MultiPoly diff = (got - want).trimmed();
      rep.add_branch(label + " restored", diff.is_zero(), diff.to_string());
      if (!diff.is_zero()) rep.residuals.push_back(diff.to_string());
    };
    for (int i = 0; i < d.n(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      compare(t->theta[k], s->theta[k], "theta" + std::to_string(i + 1));
    }
    compare(t->a, s->a, "a");
    for (int i = 0; i < d.n(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      compare(t->b[k], s->b[k], "b" + std::to_string(i + 1));
    }
    return rep;
  }
  const auto orig = d.sample(grid);
  const auto back = twice.sample(grid);
  double worst = 0.0;
  std::size_t where = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double e = std::max({max_abs(back.theta[k] - orig.theta[k]), std::abs(back.a[k] - orig.a[k]),
                               max_abs(back.b[k] - orig.b[k])});
    if (e > worst || std::isnan(e)) {
      worst = e;
      where = k;
    }
  }
  rep.details["mode"] = frontal::to_string(d.mode());
  rep.details["max_deviation"] = worst;
  auto loc = nlohmann::ordered_json::array();
  const Vec x = grid.point(where);
  for (Eigen::Index i = 0; i < x.size(); ++i) loc.push_back(x(i));
  rep.details["location"] = loc;
  rep.details["tolerance"] = tol;
  rep.residuals.push_back(format_double(worst));
  if (!(worst <= tol)) rep.status = Status::fail;
  return rep;
}

Report involution_check_generic(const Transform& tr, int n) {
  Report rep;
  rep.check_name = "involution-generic:" + tr.name() + "(n=" + std::to_string(n) + ")";
  const auto m = as_poly_map(tr, n);
  const auto twice = m.after(m);
  const auto id = algebra::LegendrianPolyMap::identity(n);
  auto compare = [&](const MultiPoly& got, const MultiPoly& want, const std::string& label) {
    const MultiPoly diff = (got - want).trimmed();
    rep.add_branch(label + " restored", diff.is_zero(), diff.to_string());
    if (!diff.is_zero()) rep.residuals.push_back(diff.to_string());
  };
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    compare(twice.theta[k], id.theta[k], algebra::sym::theta(i + 1));
  }
  compare(twice.a, id.a, algebra::sym::a());
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    compare(twice.b[k], id.b[k], algebra::sym::b(i + 1));
  }
  return rep;
}

}  // namespace legendre::lab
