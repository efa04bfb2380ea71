#include "legendre/proof/quad_system.hpp"

#include <sstream>
#include <stdexcept>

#include "legendre/algebra/roots.hpp"

namespace legendre::proof {

using algebra::rational_roots;

namespace {

MultiPoly V(const char* name) { return MultiPoly::variable(name); }

std::map<std::string, Rational> as_values(const QuadSystemPoint& pt) {
  return {{kPe, pt.p_e}, {kPz, pt.p_z}, {kQe, pt.q_e}, {kQz, pt.q_z}};
}

bool is_family_point(const QuadSystemPoint& pt) {
  const Rational& t = pt.q_e;
  return pt.p_e == t - Rational(1) && pt.p_z == Rational(2) - t && pt.q_z == Rational(1) - t;
}

const QuadSystemPoint kFixed{Rational(1), Rational(0), Rational(0), Rational(1)};

std::string point_string(const QuadSystemPoint& pt) {
  return "(" + pt.p_e.to_string() + ", " + pt.p_z.to_string() + ", " + pt.q_e.to_string() + ", " +
         pt.q_z.to_string() + ")";
}

// Equation k minus its right-hand side, as a polynomial.
MultiPoly equation(const QuadSystem& s, int k) {
  return s.lhs[static_cast<std::size_t>(k - 1)] - MultiPoly(s.rhs[static_cast<std::size_t>(k - 1)]);
}

MultiPoly eval_in(const MultiPoly& p, const std::map<std::string, MultiPoly>& binds) {
  std::map<std::string, MultiPoly> present;
  for (const auto& [k, v] : binds) {
    if (p.mentions(k)) present.emplace(k, v);
  }
  return present.empty() ? p : p.substitute(present).trimmed();
}

}  // namespace

std::string SolutionClass::to_string() const {
  switch (tag) {
    case Tag::trivial_fixed:
      return "TrivialFixed";
    case Tag::family:
      return "Family(t=" + t->to_string() + ")";
    case Tag::not_solution:
      return "NotSolution(eq " + std::to_string(failed_equation) + ")";
    case Tag::outside_claim:
      return "OutsideClaim";
  }
  return {};
}

QuadSystem QuadSystem::standard() {
  QuadSystem s;
  s.lhs = {V(kPe) + V(kPz), V(kQe) + V(kQz), V(kPe) * V(kPe) + V(kPz) * V(kQe), V(kQe) * V(kPe) + V(kQz) * V(kQe)};
  s.rhs = {Rational(1), Rational(1), Rational(1), Rational(0)};
  return s;
}

Rational QuadSystem::residual(int k, const QuadSystemPoint& pt) const {
  if (k < 1 || k > 4) throw std::out_of_range("QuadSystem::residual: equation index");
  const auto idx = static_cast<std::size_t>(k - 1);
  return lhs[idx].evaluate(as_values(pt)) - rhs[idx];
}

SolutionClass classify_quadruple(const QuadSystemPoint& pt, const QuadSystem& system) {
  SolutionClass out;
  for (int k = 1; k <= 4; ++k) {
    if (!system.residual(k, pt).is_zero()) {
      out.tag = SolutionClass::Tag::not_solution;
      out.failed_equation = k;
      return out;
    }
  }
  if (pt == kFixed) {
    out.tag = SolutionClass::Tag::trivial_fixed;
  } else if (is_family_point(pt)) {
    out.tag = SolutionClass::Tag::family;
    out.t = pt.q_e;
  } else {
    out.tag = SolutionClass::Tag::outside_claim;
  }
  return out;
}

Report verify_solution_set_complete(const QuadSystem& system) {
  Report rep;
  rep.check_name = "solution-set";
  const MultiPoly t = V("t");

  // (i) Both claimed sets satisfy every equation.
  const std::map<std::string, MultiPoly> family = {
      {kPe, t - 1}, {kPz, 2 - t}, {kQe, t}, {kQz, 1 - t}};
  {
    std::ostringstream bad;
    for (int k = 1; k <= 4; ++k) {
      const MultiPoly r = eval_in(equation(system, k), family);
      if (!r.is_zero()) {
        bad << "eq" << k << ": " << r.to_string() << "; ";
        rep.residuals.push_back(r.to_string());
      }
    }
    rep.add_branch("family satisfies system identically in t", bad.str().empty(), bad.str());
  }
  {
    std::ostringstream bad;
    for (int k = 1; k <= 4; ++k) {
      const Rational r = system.residual(k, kFixed);
      if (!r.is_zero()) bad << "eq" << k << ": " << r.to_string() << "; ";
    }
    rep.add_branch("(1,0,0,1) satisfies system", bad.str().empty(), bad.str());
  }

  // Disjointness: the family point with q_e = 0 is (-1, 2, 0, 1).
  {
    const bool disjoint = !is_family_point(kFixed);
    rep.add_branch("(1,0,0,1) is not a family point", disjoint, "family at t=0 is (-1, 2, 0, 1)");
  }

  // (ii) Case split. The two linear equations eliminate pz and qz.
  if (!(system.lhs[0] == V(kPe) + V(kPz)) || !(system.lhs[1] == V(kQe) + V(kQz))) {
    rep.add_branch("elimination", false, "first two equations are not pe + pz and qe + qz");
    return rep;
  }
  const std::map<std::string, MultiPoly> elim = {{kPz, MultiPoly(system.rhs[0]) - V(kPe)},
                                                 {kQz, MultiPoly(system.rhs[1]) - V(kQe)}};
  const MultiPoly r3 = eval_in(equation(system, 3), elim);
  const MultiPoly r4 = eval_in(equation(system, 4), elim);
  rep.details["reduced_eq3"] = r3.to_string();
  rep.details["reduced_eq4"] = r4.to_string();

  MultiPoly cofactor;
  try {
    cofactor = r4.divide_by_variable(kQe).trimmed();
  } catch (const std::domain_error&) {
    rep.add_branch("eq4 factors as qe * (...)", false, r4.to_string());
    return rep;
  }
  rep.add_branch("eq4 factors as qe * (" + cofactor.to_string() + ")", true);

  auto complete = [&](const Rational& pe, const Rational& qe) {
    return QuadSystemPoint{pe, system.rhs[0] - pe, qe, system.rhs[1] - qe};
  };
  bool saw_fixed = false;
  bool saw_family = false;

  // Branch qe = 0: eq3 becomes univariate in pe.
  {
    const MultiPoly s = eval_in(r3, {{kQe, MultiPoly(0)}});
    std::ostringstream detail;
    bool ok = true;
    const auto roots = rational_roots(s, kPe);
    if (roots.identically_zero) {
      ok = false;
      detail << "eq3 vanishes for every pe: a one-parameter set outside the claim";
    } else {
      if (!roots.splits) {
        ok = false;
        detail << "eq3 restricted polynomial " << s.to_string() << " has irrational roots; ";
      }
      for (const auto& root : roots.roots) {
        const QuadSystemPoint pt = complete(root.value, Rational(0));
        const SolutionClass cls = classify_quadruple(pt, system);
        detail << point_string(pt) << " -> " << cls.to_string() << "; ";
        if (cls.tag == SolutionClass::Tag::trivial_fixed) saw_fixed = true;
        else if (cls.tag == SolutionClass::Tag::family) saw_family = true;
        else ok = false;
      }
    }
    rep.add_branch("qe = 0", ok, detail.str());
  }

  // Branch cofactor = 0: the cofactor must be linear in pe with a constant
  // coefficient, giving pe as a polynomial in qe.
  {
    std::ostringstream detail;
    bool ok = true;
    const MultiPoly lead = cofactor.derivative(kPe);
    if (cofactor.degree_in(kPe) != 1 || !lead.is_constant()) {
      ok = false;
      detail << "cofactor " << cofactor.to_string() << " is not linear in pe";
    } else {
      const MultiPoly rest = eval_in(cofactor, {{kPe, MultiPoly(0)}});
      const MultiPoly pe_of_qe = MultiPoly(Rational(-1) / lead.constant_term()) * rest;
      detail << "pe = " << pe_of_qe.to_string() << "; ";
      const MultiPoly s = eval_in(r3, {{kPe, pe_of_qe}});
      if (s.is_zero()) {
        // Whole line parameterized by qe; compare with the family at t = qe.
        const MultiPoly pz = MultiPoly(system.rhs[0]) - pe_of_qe;
        const MultiPoly qz = MultiPoly(system.rhs[1]) - V(kQe);
        const MultiPoly q = V(kQe);
        const bool in_family = pe_of_qe == q - 1 && pz == 2 - q && qz == 1 - q;
        detail << "eq3 vanishes identically; line " << (in_family ? "equals" : "differs from")
               << " the family with t = qe";
        ok = in_family;
        saw_family = saw_family || in_family;
        rep.details["family_branch_covers_family"] = in_family;
      } else {
        // Only isolated points; the claimed family cannot be covered.
        detail << "eq3 reduces to " << s.to_string() << " (not identically zero); ";
        const auto roots = rational_roots(s.with_variables({kQe}), kQe);
        for (const auto& root : roots.roots) {
          const Rational pe = pe_of_qe.evaluate(std::map<std::string, Rational>{{kQe, root.value}});
          const QuadSystemPoint pt = complete(pe, root.value);
          detail << point_string(pt) << " -> " << classify_quadruple(pt, system).to_string() << "; ";
        }
        ok = false;
        rep.residuals.push_back(s.to_string());
        rep.details["family_branch_covers_family"] = false;
      }
    }
    rep.add_branch("qe != 0 (cofactor = 0)", ok, detail.str());
  }

  rep.add_branch("claimed set covered by branches", saw_fixed && saw_family,
                 std::string("fixed point found: ") + (saw_fixed ? "yes" : "no") +
                     ", family found: " + (saw_family ? "yes" : "no"));
  return rep;
}

Report verify_equation_redundancy() {
  Report rep;
  rep.check_name = "equation-redundancy";
  const MultiPoly pe = V(kPe), pz = V(kPz), qe = V(kQe), qz = V(kQz);
  const std::array<MultiPoly, 4> eqs = {
      pe * pe + pz * qe - 1,  // (3)
      pe * pz + pz * qz,      // (4)
      qe * pe + qz * qe,      // (5)
      qe * pz + qz * qz - 1,  // (6)
  };
  const std::map<std::string, MultiPoly> elim = {{kPz, 1 - pe}, {kQz, 1 - qe}};
  std::array<MultiPoly, 4> red;
  for (std::size_t k = 0; k < 4; ++k) {
    red[k] = eval_in(eqs[k], elim);
    rep.residuals.push_back(red[k].to_string());
  }

  auto proportional = [&](const MultiPoly& lhs, const MultiPoly& rhs, const std::string& name,
                          const std::string& key) {
    if (lhs.is_zero() || rhs.is_zero()) {
      const bool both = lhs.is_zero() && rhs.is_zero();
      rep.add_branch(name, both, both ? "both reduce to 0 = 0" : "exactly one side reduces to 0");
      return;
    }
    const Rational c = lhs.terms().begin()->second / rhs.terms().begin()->second;
    const bool ok = (lhs - MultiPoly(c) * rhs).is_zero();
    rep.details[key] = c.to_string();
    rep.add_branch(name, ok, "(" + lhs.to_string() + ") = " + c.to_string() + " * (" + rhs.to_string() + ")");
  };
  proportional(red[0], red[1], "eq3 equivalent to eq4", "constant_3_4");
  proportional(red[2], red[3], "eq5 equivalent to eq6", "constant_5_6");
  return rep;
}

Report verify_fixed_point_restriction() {
  Report rep;
  rep.check_name = "fixed-point-restriction";
  const MultiPoly pe = V(kPe), pz = V(kPz), qe = V(kQe), qz = V(kQz);
  const MultiPoly th = MultiPoly::variable("theta1");
  const QuadSystem s = QuadSystem::standard();
  // On data with b = theta the restricted forms read pe X + pz Z at X = Z = theta.
  const MultiPoly f1 = pe * th + pz * th;
  const MultiPoly f3 = qe * th + qz * th;
  const MultiPoly d1 = f1 - th - equation(s, 1) * th;
  const MultiPoly d3 = f3 - th - equation(s, 2) * th;
  rep.add_branch("theta-component fixes b = theta iff pe + pz = 1", d1.is_zero(), d1.to_string());
  rep.add_branch("b-component fixes b = theta iff qe + qz = 1", d3.is_zero(), d3.to_string());
  if (!d1.is_zero()) rep.residuals.push_back(d1.to_string());
  if (!d3.is_zero()) rep.residuals.push_back(d3.to_string());
  return rep;
}

}  // namespace legendre::proof
