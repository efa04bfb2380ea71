#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "legendre/algebra/poly_map.hpp"
#include "legendre/frontal/legendrian_data.hpp"
#include "support/random_poly.hpp"

// Creative data by construction: pull back (u, g(u), grad g(u)) along a
// random polynomial map psi(x) = x + quadratic terms. With g = |u|^2/2 the
// result lies in Y.
namespace testsupport {

inline legendre::frontal::LegendrianData random_creative(std::mt19937_64& rng, int n, bool fixed_point) {
  std::vector<std::string> xs, us;
  for (int i = 1; i <= n; ++i) {
    xs.push_back("x" + std::to_string(i));
    us.push_back("u" + std::to_string(i));
  }
  std::map<std::string, MultiPoly> psi;
  std::vector<MultiPoly> theta;
  for (int i = 0; i < n; ++i) {
    MultiPoly p = MultiPoly::variable(xs[static_cast<std::size_t>(i)]) + random_poly(rng, xs, 2, 2);
    psi.emplace(us[static_cast<std::size_t>(i)], p);
    theta.push_back(p);
  }
  MultiPoly g;
  if (fixed_point) {
    for (const auto& u : us) g += MultiPoly(Rational(1, 2)) * MultiPoly::variable(u) * MultiPoly::variable(u);
  } else {
    g = random_poly(rng, us, 4, 3) + MultiPoly::variable(us[0]) * MultiPoly::variable(us[0]);
  }
  auto pull = [&](const MultiPoly& p) { return legendre::algebra::substitute_present(p, psi).trimmed(); };
  legendre::frontal::Symbolic s;
  s.theta = theta;
  s.a = pull(g);
  for (const auto& u : us) s.b.push_back(pull(g.derivative(u)));
  return legendre::frontal::LegendrianData(n, std::move(s));
}

}  // namespace testsupport
