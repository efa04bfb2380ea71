#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "legendre/algebra/symbols.hpp"
#include "legendre/proof/identities.hpp"
#include "legendre/proof/verify_all.hpp"
#include "support/naive_family.hpp"
#include "support/random_poly.hpp"

using namespace legendre::proof;
using legendre::algebra::Rational;
namespace sym = legendre::algebra::sym;

namespace {

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

const legendre::Branch* find_branch(const legendre::Report& r, const std::string& name) {
  for (const auto& b : r.branches) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

}  // namespace

TEST(TildeA, DerivedMatchesDisplayedFormula) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(derive_tilde_a(n), displayed_tilde_a(n)) << n;
  EXPECT_EQ(derive_tilde_a(1),
            P("t1*(t1 - 1)/2*theta1^2 + t1*(2 - t1)*theta1*b1 + (1 - t1)*(2 - t1)/2*b1^2 - a"));
}

TEST(TildeA, LegendreSpecialization) {
  const MultiPoly at1 = derive_tilde_a(1).substitute({{"t1", MultiPoly(1)}}).trimmed();
  EXPECT_EQ(at1, P("theta1*b1 - a"));
}

TEST(TildeA, ReportPassesForSeveralN) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_tilde_a(n).passed()) << n;
}

// Numeric shadow: the derived polynomial agrees with the hand-coded formula
// at random rational points.
TEST(TildeA, NumericShadowAgainstNaiveFormula) {
  std::mt19937_64 rng(99);
  const MultiPoly ta = derive_tilde_a(2);
  for (int k = 0; k < 100; ++k) {
    testsupport::NaivePoint p;
    std::vector<Rational> t;
    std::map<std::string, Rational> values;
    for (int i = 1; i <= 2; ++i) {
      p.theta.push_back(testsupport::random_rational(rng));
      p.b.push_back(testsupport::random_rational(rng));
      t.push_back(testsupport::random_rational(rng));
      values[sym::theta(i)] = p.theta.back();
      values[sym::b(i)] = p.b.back();
      values[sym::t(i)] = t.back();
    }
    p.a = testsupport::random_rational(rng);
    values[sym::a()] = p.a;
    ASSERT_EQ(ta.evaluate(values), testsupport::naive_tilde_a(p, t));
  }
}

// Applying the family twice at random rational points returns the input
// exactly, for every t: a~~ - a vanishes, so P_b^2 is the zero polynomial.
TEST(PPolynomials, DoubleApplicationIsIdentityForEveryT) {
  std::mt19937_64 rng(123);
  for (int k = 0; k < 200; ++k) {
    testsupport::NaivePoint p{{testsupport::random_rational(rng)}, testsupport::random_rational(rng),
                              {testsupport::random_rational(rng)}};
    const std::vector<Rational> t{testsupport::random_rational(rng)};
    const auto twice = testsupport::naive_family(testsupport::naive_family(p, t), t);
    ASSERT_EQ(twice.theta[0], p.theta[0]);
    ASSERT_EQ(twice.b[0], p.b[0]);
    ASSERT_EQ(twice.a, p.a);
  }
}

TEST(PPolynomials, ComputedCoefficientsAreZero) {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      const auto c = computed_p_coefficients(n, i);
      EXPECT_TRUE(c.theta2.is_zero());
      EXPECT_TRUE(c.theta_b.is_zero());
      EXPECT_TRUE(c.b2.is_zero()) << c.b2;
    }
  }
}

TEST(PPolynomials, DisplayedExpansionsSumToZero) {
  const auto e = displayed_p_expansions(1);
  EXPECT_TRUE(e.theta2.is_zero());
  EXPECT_TRUE(e.theta_b.is_zero());
  EXPECT_TRUE(e.b2.is_zero());
  // The quoted closed form is only the first of the four b^2 terms.
  EXPECT_EQ(claimed_p_closed_forms(1).b2, P("1/2*t1*(t1 - 1)*(2 - t1)^2"));
}

TEST(PPolynomials, ReportFlagsOnlyTheB2ClosedFormAndItsRoots) {
  const auto r = verify_p_polynomials(2);
  EXPECT_FALSE(r.passed());
  for (const auto& b : r.branches) {
    const bool expected_fail = b.name.rfind("P_b^2 == ", 0) == 0 || b.name.rfind("roots of P_b^2", 0) == 0;
    EXPECT_EQ(b.status == legendre::Status::fail, expected_fail) << b.name;
  }
  const auto* claim = find_branch(r, "P_b^2 == t(t-1)(2-t)^2/2 [i=1]");
  ASSERT_NE(claim, nullptr);
  EXPECT_EQ(claim->detail, "residual -1/2*t1^4 + 5/2*t1^3 - 4*t1^2 + 2*t1");
  EXPECT_EQ(r.details["double_a_minus_a"], "0");
}

TEST(PPolynomials, MutationBreaksExpansionBranch) {
  PCheckOptions o;
  o.mutate_b2_expansion = true;
  const auto r = verify_p_polynomials(1, o);
  const auto* b = find_branch(r, "P_b^2 equals displayed expansion [i=1]");
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->status, legendre::Status::fail);
}

TEST(CaseConclusions, PassForSeveralN) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_case_conclusions(n).passed()) << n;
}

TEST(LegendreInvolution, ExactForSeveralN) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verify_legendre_involution(n).passed()) << n;
}

TEST(VerifyAll, RunsQuicklyAndNamesEveryCheck) {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = verify_all(3);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 5.0);
  ASSERT_EQ(reports.size(), 3u + 4u * 3u);
  EXPECT_EQ(reports[0].check_name, "fixed-point-restriction");
  EXPECT_EQ(reports.back().check_name, "legendre-involution(n=3)");
}

TEST(VerifyAll, ParseMutation) {
  EXPECT_EQ(parse_mutation("P_b2"), Mutation::p_b2);
  EXPECT_EQ(parse_mutation("eq3"), Mutation::eq3_rhs);
  EXPECT_EQ(parse_mutation(""), Mutation::none);
  EXPECT_THROW(parse_mutation("bogus"), std::invalid_argument);
}
