#include "legendre/algebra/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace legendre::algebra {

namespace {

// Coefficients low-to-high.
using Dense = std::vector<Rational>;

Rational horner(const Dense& c, const Rational& x) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - r); assumes r is a root.
Dense deflate(const Dense& c, const Rational& r) {
  Dense q(c.size() - 1);
  Rational carry(0);
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    carry = c[k] + carry * r;
    q[k - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) throw std::invalid_argument("rational_roots: coefficient too large");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

RootSet rational_roots(const MultiPoly& p, const std::string& variable) {
  for (const auto& v : p.used_variables()) {
    if (v != variable) throw std::invalid_argument("rational_roots: polynomial mentions " + v);
  }
  RootSet out;
  if (p.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  const MultiPoly q = p.with_variables({variable});
  out.degree = q.total_degree();
  Dense c(out.degree + 1, Rational(0));
  for (const auto& [e, coef] : q.terms()) c[e.empty() ? 0 : e[0]] = coef;

  // Roots at zero first.
  unsigned zero_mult = 0;
  while (c.size() > 1 && c.front().is_zero()) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});

  // Integer-coefficient image for candidate generation.
  mpz_class lcm_den = 1;
  for (const auto& r : c) lcm_den = lcm(lcm_den, r.denominator());
  const mpz_class lead = (c.back() * Rational(mpq_class(lcm_den))).numerator();
  const mpz_class tail = (c.front() * Rational(mpq_class(lcm_den))).numerator();

  std::vector<Rational> candidates;
  if (c.size() > 1) {
    for (const auto& num : divisors(tail)) {
      for (const auto& den : divisors(lead)) {
        const Rational r(mpq_class(num, den));
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& r : candidates) {
    unsigned mult = 0;
    while (c.size() > 1 && horner(c, r).is_zero()) {
      c = deflate(c, r);
      ++mult;
    }
    if (mult > 0) out.roots.push_back({r, mult});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& l, const RationalRoot& r) { return l.value < r.value; });
  unsigned total = 0;
  for (const auto& r : out.roots) total += r.multiplicity;
  out.splits = total == out.degree;
  return out;
}

}  // namespace legendre::algebra
