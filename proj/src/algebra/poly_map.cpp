#include "legendre/algebra/poly_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "legendre/algebra/symbols.hpp"

namespace legendre::algebra {

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

LegendrianPolyMap family_with(int n, const std::vector<MultiPoly>& t) {
  LegendrianPolyMap m;
  m.n = n;
  const Rational half(1, 2);
  MultiPoly support = -var(sym::a());
  for (int i = 1; i <= n; ++i) {
    const MultiPoly& ti = t[static_cast<std::size_t>(i - 1)];
    const MultiPoly th = var(sym::theta(i));
    const MultiPoly bi = var(sym::b(i));
    m.theta.push_back((ti - 1) * th + (2 - ti) * bi);
    m.b.push_back(ti * th + (1 - ti) * bi);
    support += MultiPoly(half) * ti * (ti - 1) * th * th + ti * (2 - ti) * th * bi +
               MultiPoly(half) * (1 - ti) * (2 - ti) * bi * bi;
  }
  m.a = support;
  return m;
}

}  // namespace

MultiPoly substitute_present(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
  std::map<std::string, MultiPoly> present;
  for (const auto& [name, value] : bindings) {
    if (std::binary_search(p.variables().begin(), p.variables().end(), name, sym::Less{})) {
      present.emplace(name, value);
    }
  }
  if (present.empty()) return p;
  return p.substitute(present);
}

LegendrianPolyMap LegendrianPolyMap::identity(int n) {
  LegendrianPolyMap m;
  m.n = n;
  for (int i = 1; i <= n; ++i) {
    m.theta.push_back(var(sym::theta(i)));
    m.b.push_back(var(sym::b(i)));
  }
  m.a = var(sym::a());
  return m;
}

LegendrianPolyMap LegendrianPolyMap::legendre(int n) {
  LegendrianPolyMap m;
  m.n = n;
  MultiPoly pairing;
  for (int i = 1; i <= n; ++i) {
    m.theta.push_back(var(sym::b(i)));
    m.b.push_back(var(sym::theta(i)));
    pairing += var(sym::b(i)) * var(sym::theta(i));
  }
  m.a = pairing - var(sym::a());
  return m;
}

LegendrianPolyMap LegendrianPolyMap::family(int n) {
  std::vector<MultiPoly> t;
  for (int i = 1; i <= n; ++i) t.push_back(var(sym::t(i)));
  return family_with(n, t);
}

LegendrianPolyMap LegendrianPolyMap::family(const std::vector<Rational>& t) {
  std::vector<MultiPoly> tp(t.begin(), t.end());
  return family_with(static_cast<int>(t.size()), tp);
}

std::map<std::string, MultiPoly> LegendrianPolyMap::bindings() const {
  std::map<std::string, MultiPoly> out;
  for (int i = 1; i <= n; ++i) {
    out.emplace(sym::theta(i), theta[static_cast<std::size_t>(i - 1)]);
    out.emplace(sym::b(i), b[static_cast<std::size_t>(i - 1)]);
  }
  out.emplace(sym::a(), a);
  return out;
}

LegendrianPolyMap LegendrianPolyMap::after(const LegendrianPolyMap& inner) const {
  if (inner.n != n) throw std::invalid_argument("LegendrianPolyMap::after: dimension mismatch");
  return apply(inner.theta, inner.a, inner.b);
}

LegendrianPolyMap LegendrianPolyMap::apply(const std::vector<MultiPoly>& theta_in, const MultiPoly& a_in,
                                           const std::vector<MultiPoly>& b_in) const {
  if (static_cast<int>(theta_in.size()) != n || static_cast<int>(b_in.size()) != n) {
    throw std::invalid_argument("LegendrianPolyMap::apply: dimension mismatch");
  }
  std::map<std::string, MultiPoly> binds;
  for (int i = 1; i <= n; ++i) {
    binds.emplace(sym::theta(i), theta_in[static_cast<std::size_t>(i - 1)]);
    binds.emplace(sym::b(i), b_in[static_cast<std::size_t>(i - 1)]);
  }
  binds.emplace(sym::a(), a_in);
  LegendrianPolyMap out;
  out.n = n;
  for (const auto& p : theta) out.theta.push_back(substitute_present(p, binds));
  for (const auto& p : b) out.b.push_back(substitute_present(p, binds));
  out.a = substitute_present(a, binds);
  return out;
}

bool operator==(const LegendrianPolyMap& lhs, const LegendrianPolyMap& rhs) {
  return lhs.n == rhs.n && lhs.theta == rhs.theta && lhs.a == rhs.a && lhs.b == rhs.b;
}

}  // namespace legendre::algebra
