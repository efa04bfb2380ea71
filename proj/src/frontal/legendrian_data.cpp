#include "legendre/frontal/legendrian_data.hpp"

#include <map>

#include "legendre/algebra/symbols.hpp"

namespace legendre::frontal {

using algebra::MultiPoly;
namespace sym = algebra::sym;

namespace {

std::map<std::string, double> bind_x(const Vec& x) {
  std::map<std::string, double> out;
  for (int i = 0; i < x.size(); ++i) out.emplace(sym::x(i + 1), x(i));
  return out;
}

// Polynomial evaluation that tolerates variables outside x1..xn being absent.
double eval(const MultiPoly& p, const std::map<std::string, double>& xs) { return p.evaluate(xs); }

Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x, double h, Eigen::Index rows) {
  Mat J(rows, x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Vec xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    J.col(j) = (f(xp) - f(xm)) / (2 * h);
  }
  return J;
}

Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x, double h) {
  Vec g(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Vec xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    g(j) = (f(xp) - f(xm)) / (2 * h);
  }
  return g;
}

// d/ds at node k of a line with m nodes and spacing h; v(q) reads node q.
template <class Line>
double stencil(const Line& v, int k, int m, double h) {
  if (m >= 5) {
    if (k >= 2 && k <= m - 3) return (v(k - 2) - 8 * v(k - 1) + 8 * v(k + 1) - v(k + 2)) / (12 * h);
    if (k < 2) {
      return (-25 * v(k) + 48 * v(k + 1) - 36 * v(k + 2) + 16 * v(k + 3) - 3 * v(k + 4)) / (12 * h);
    }
    return (25 * v(k) - 48 * v(k - 1) + 36 * v(k - 2) - 16 * v(k - 3) + 3 * v(k - 4)) / (12 * h);
  }
  if (k == 0) return (-3 * v(0) + 4 * v(1) - v(2)) / (2 * h);
  if (k == m - 1) return (3 * v(k) - 4 * v(k - 1) + v(k - 2)) / (2 * h);
  return (v(k + 1) - v(k - 1)) / (2 * h);
}

}  // namespace

std::string to_string(DataMode mode) {
  switch (mode) {
    case DataMode::closed_form:
      return "closed_form";
    case DataMode::sampled_grid:
      return "sampled_grid";
    case DataMode::symbolic:
      return "symbolic";
  }
  return {};
}

LegendrianData::LegendrianData(int n, ClosedForm f) : n_(n), repr_(std::move(f)) {
  const auto& c = std::get<ClosedForm>(repr_);
  if (n < 1 || !c.theta || !c.a || !c.b) throw std::invalid_argument("LegendrianData: incomplete closed form");
}

LegendrianData::LegendrianData(int n, Sampled s) : n_(n), repr_(std::move(s)) {
  const auto& d = std::get<Sampled>(repr_);
  d.grid.validate();
  if (d.grid.n() != n) throw std::invalid_argument("LegendrianData: grid dimension differs from n");
  const std::size_t m = d.grid.size();
  if (d.theta.size() != m || d.a.size() != m || d.b.size() != m) {
    throw std::invalid_argument("LegendrianData: sample count does not match the grid");
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (d.theta[k].size() != n || d.b[k].size() != n) {
      throw std::invalid_argument("LegendrianData: sample " + std::to_string(k) + " has wrong dimension");
    }
  }
}

LegendrianData::LegendrianData(int n, Symbolic s) : n_(n), repr_(std::move(s)) {
  const auto& d = std::get<Symbolic>(repr_);
  if (n < 1 || static_cast<int>(d.theta.size()) != n || static_cast<int>(d.b.size()) != n) {
    throw std::invalid_argument("LegendrianData: symbolic components have wrong dimension");
  }
  auto check = [&](const MultiPoly& p) {
    for (const auto& v : p.used_variables()) {
      const auto idx = sym::index_of(v);
      if (v.rfind("x", 0) != 0 || !idx || *idx < 1 || *idx > n) {
        throw std::invalid_argument("LegendrianData: symbolic data may only use x1..x" + std::to_string(n) +
                                    ", found " + v);
      }
    }
  };
  for (const auto& p : d.theta) check(p);
  for (const auto& p : d.b) check(p);
  check(d.a);
}

DataMode LegendrianData::mode() const {
  if (closed()) return DataMode::closed_form;
  if (sampled()) return DataMode::sampled_grid;
  return DataMode::symbolic;
}

bool LegendrianData::exact_derivatives() const {
  if (symbolic()) return true;
  if (const auto* c = closed()) return c->has_derivatives();
  return false;
}

Sample LegendrianData::evaluate(const Vec& x) const {
  if (x.size() != n_) throw std::invalid_argument("LegendrianData::evaluate: point has wrong dimension");
  if (const auto* c = closed()) return {c->theta(x), c->a(x), c->b(x)};
  if (const auto* s = symbolic()) {
    const auto xs = bind_x(x);
    Sample out{Vec(n_), eval(s->a, xs), Vec(n_)};
    for (int i = 0; i < n_; ++i) {
      out.theta(i) = eval(s->theta[static_cast<std::size_t>(i)], xs);
      out.b(i) = eval(s->b[static_cast<std::size_t>(i)], xs);
    }
    return out;
  }
  const auto& d = *sampled();
  const std::size_t k = d.grid.find_node(x);
  if (k == d.grid.size()) throw GridMismatch("sampled data has no node at the requested point");
  return {d.theta[k], d.a[k], d.b[k]};
}

Sampled LegendrianData::sample(const GridSpec& grid) const {
  grid.validate();
  if (const auto* d = sampled()) {
    if (!(d->grid.box == grid.box && d->grid.counts == grid.counts)) {
      throw GridMismatch("sampled data lives on a different grid");
    }
    Sampled out = *d;
    out.grid = grid;
    return out;
  }
  Sampled out;
  out.grid = grid;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Sample s = evaluate(grid.point(k));
    out.theta.push_back(s.theta);
    out.a.push_back(s.a);
    out.b.push_back(s.b);
  }
  return out;
}

std::vector<Jet> LegendrianData::jets(const GridSpec& grid) const {
  grid.validate();
  if (grid.n() != n_) throw std::invalid_argument("jets: grid dimension differs from n");
  std::vector<Jet> out;
  out.reserve(grid.size());

  if (const auto* c = closed()) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      Jet j;
      j.x = grid.point(k);
      j.theta = c->theta(j.x);
      j.a = c->a(j.x);
      j.b = c->b(j.x);
      j.dtheta = c->dtheta ? c->dtheta(j.x) : fd_jacobian(c->theta, j.x, grid.fd_step, n_);
      j.da = c->da ? c->da(j.x) : fd_gradient(c->a, j.x, grid.fd_step);
      j.db = c->db ? c->db(j.x) : fd_jacobian(c->b, j.x, grid.fd_step, n_);
      out.push_back(std::move(j));
    }
    return out;
  }

  if (const auto* s = symbolic()) {
    std::vector<std::vector<MultiPoly>> dth(static_cast<std::size_t>(n_)), dbb(static_cast<std::size_t>(n_));
    std::vector<MultiPoly> da;
    const auto xi = [](int j) { return sym::x(j + 1); };
    auto partial = [&](const MultiPoly& p, int j) { return p.mentions(xi(j)) ? p.derivative(xi(j)) : MultiPoly(); };
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        dth[static_cast<std::size_t>(i)].push_back(partial(s->theta[static_cast<std::size_t>(i)], j));
        dbb[static_cast<std::size_t>(i)].push_back(partial(s->b[static_cast<std::size_t>(i)], j));
      }
    }
    for (int j = 0; j < n_; ++j) da.push_back(partial(s->a, j));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      Jet j;
      j.x = grid.point(k);
      const auto xs = bind_x(j.x);
      const Sample v = evaluate(j.x);
      j.theta = v.theta;
      j.a = v.a;
      j.b = v.b;
      j.dtheta.resize(n_, n_);
      j.db.resize(n_, n_);
      j.da.resize(n_);
      for (int r = 0; r < n_; ++r) {
        j.da(r) = eval(da[static_cast<std::size_t>(r)], xs);
        for (int q = 0; q < n_; ++q) {
          j.dtheta(r, q) = eval(dth[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)], xs);
          j.db(r, q) = eval(dbb[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)], xs);
        }
      }
      out.push_back(std::move(j));
    }
    return out;
  }

  const Sampled d = sample(grid);
  const std::size_t m = grid.size();
  std::vector<std::vector<Vec>> gth(static_cast<std::size_t>(n_)), gb(static_cast<std::size_t>(n_));
  std::vector<double> comp(m);
  for (int i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < m; ++k) comp[k] = d.theta[k](i);
    gth[static_cast<std::size_t>(i)] = grid_gradient(grid, comp);
    for (std::size_t k = 0; k < m; ++k) comp[k] = d.b[k](i);
    gb[static_cast<std::size_t>(i)] = grid_gradient(grid, comp);
  }
  const auto ga = grid_gradient(grid, d.a);
  for (std::size_t k = 0; k < m; ++k) {
    Jet j;
    j.x = grid.point(k);
    j.theta = d.theta[k];
    j.a = d.a[k];
    j.b = d.b[k];
    j.dtheta.resize(n_, n_);
    j.db.resize(n_, n_);
    for (int i = 0; i < n_; ++i) {
      j.dtheta.row(i) = gth[static_cast<std::size_t>(i)][k].transpose();
      j.db.row(i) = gb[static_cast<std::size_t>(i)][k].transpose();
    }
    j.da = ga[k];
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<Vec> grid_gradient(const GridSpec& grid, const std::vector<double>& values) {
  const std::size_t m = grid.size();
  if (values.size() != m) throw std::invalid_argument("grid_gradient: value count does not match the grid");
  std::vector<Vec> out(m, Vec::Zero(grid.n()));
  for (int axis = 0; axis < grid.n(); ++axis) {
    const int count = grid.counts[static_cast<std::size_t>(axis)];
    const double h = grid.spacing(axis);
    // Flat stride of this axis in row-major order.
    std::size_t stride = 1;
    for (int later = axis + 1; later < grid.n(); ++later) stride *= static_cast<std::size_t>(grid.counts[static_cast<std::size_t>(later)]);
    for (std::size_t k = 0; k < m; ++k) {
      const int pos = grid.multi_index(k)[static_cast<std::size_t>(axis)];
      const std::size_t origin = k - static_cast<std::size_t>(pos) * stride;
      const auto line = [&](int q) { return values[origin + static_cast<std::size_t>(q) * stride]; };
      out[k](axis) = stencil(line, pos, count, h);
    }
  }
  return out;
}

LegendrianData symbolic_data(const std::vector<std::string>& theta, const std::string& a,
                             const std::vector<std::string>& b) {
  Symbolic s;
  for (const auto& t : theta) s.theta.push_back(MultiPoly::parse(t));
  for (const auto& t : b) s.b.push_back(MultiPoly::parse(t));
  s.a = MultiPoly::parse(a);
  return LegendrianData(static_cast<int>(theta.size()), std::move(s));
}

}  // namespace legendre::frontal
