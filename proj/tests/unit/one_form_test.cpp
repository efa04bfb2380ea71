#include <gtest/gtest.h>

#include <random>

#include "legendre/algebra/one_form.hpp"
#include "support/random_poly.hpp"

using namespace legendre::algebra;

namespace {

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

}  // namespace

TEST(OneForm, RejectsNonCoordinates) {
  EXPECT_THROW((void)OneForm::basis("a"), std::invalid_argument);
  EXPECT_THROW((void)OneForm::basis("t1"), std::invalid_argument);
}

TEST(OneForm, FrontalRuleOnLegendreSupport) {
  // d(sum b_i theta_i - a) = sum theta_i db_i once da = sum b_i dtheta_i.
  const MultiPoly f = P("b1*theta1 + b2*theta2 - a");
  const OneForm d = differential(f, DifferentialRule::frontal(2));
  EXPECT_EQ(d, OneForm::basis("b1", P("theta1")) + OneForm::basis("b2", P("theta2")));
}

TEST(OneForm, IndependentRuleTreatsAAsConstant) {
  const OneForm d = differential(P("a*theta1 + t1*b1"), DifferentialRule::independent());
  EXPECT_EQ(d, OneForm::basis("theta1", P("a")) + OneForm::basis("b1", P("t1")));
}

TEST(OneForm, PotentialOfFamilyForm) {
  // theta~ = (t-1)theta + (2-t)b, b~ = t theta + (1-t)b. b~ d theta~ fails the
  // mixed-partials test by exactly -1, which the frontal rule absorbs as -a.
  const MultiPoly th = P("(t1 - 1)*theta1 + (2 - t1)*b1");
  const MultiPoly bt = P("t1*theta1 + (1 - t1)*b1");
  const OneForm w = bt * differential(th, DifferentialRule::independent());
  const PotentialResult plain = potential(w);
  ASSERT_FALSE(plain.exact());
  EXPECT_EQ(plain.obstruction().lhs - plain.obstruction().rhs, MultiPoly(-1));
  const PotentialResult res = frontal_potential(w, 1);
  ASSERT_TRUE(res.exact());
  EXPECT_EQ(res.value(),
            P("t1*(t1 - 1)/2*theta1^2 + t1*(2 - t1)*theta1*b1 + (1 - t1)*(2 - t1)/2*b1^2 - a"));
}

TEST(OneForm, NonClosedFormReportsWitness) {
  const PotentialResult res = potential(OneForm::basis("theta1", P("b1")));
  ASSERT_FALSE(res.exact());
  EXPECT_EQ(res.obstruction().first, "theta1");
  EXPECT_EQ(res.obstruction().second, "b1");
  EXPECT_EQ(res.obstruction().lhs, P("1"));
  EXPECT_TRUE(res.obstruction().rhs.is_zero());
  EXPECT_THROW((void)res.value(), std::logic_error);
}

TEST(OneForm, FrontalPotentialRecoversSupport) {
  const MultiPoly f = P("3*theta1^2*b2 - 2*a + b1*theta2 + t1*b1^2");
  const OneForm w = differential(f, DifferentialRule::frontal(2));
  const PotentialResult res = frontal_potential(w, 2);
  ASSERT_TRUE(res.exact());
  EXPECT_EQ(res.value(), f);
}

TEST(OneForm, FrontalPotentialRejectsCoordinateDependentObstruction) {
  const OneForm w = OneForm::basis("theta1", P("b1^2"));
  EXPECT_FALSE(frontal_potential(w, 1).exact());
}

// d(dP) = 0 in the sense that dP always passes the mixed-partials test, and
// the potential of dP recovers P up to its constant term.
TEST(OneFormProperty, ExactFormsOfRandomPolynomials) {
  std::mt19937_64 rng(4242);
  const std::vector<std::string> vars = {"theta1", "theta2", "b1", "b2"};
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly p = testsupport::random_poly(rng, vars, 5, 4);
    const OneForm w = differential(p, DifferentialRule::independent());
    const PotentialResult res = potential(w);
    ASSERT_TRUE(res.exact()) << p;
    ASSERT_EQ(res.value(), p - MultiPoly(p.constant_term())) << p;
  }
}

// Brute force over monomial 1-forms of degree <= 4 in <= 4 coordinates:
// m * dx_k is exact iff the monomial does not involve any other coordinate.
TEST(OneFormProperty, MonomialExactnessBruteForce) {
  const std::vector<std::string> vars = {"theta1", "b1", "theta2", "b2"};
  int checked = 0;
  for (unsigned e0 = 0; e0 <= 4; ++e0)
    for (unsigned e1 = 0; e0 + e1 <= 4; ++e1)
      for (unsigned e2 = 0; e0 + e1 + e2 <= 4; ++e2)
        for (unsigned e3 = 0; e0 + e1 + e2 + e3 <= 4; ++e3) {
          const unsigned e[4] = {e0, e1, e2, e3};
          const MultiPoly m = MultiPoly::monomial(
              Rational(1), {{vars[0], e0}, {vars[1], e1}, {vars[2], e2}, {vars[3], e3}});
          for (std::size_t k = 0; k < 4; ++k) {
            bool expect = true;
            for (std::size_t j = 0; j < 4; ++j) {
              if (j != k && e[j] > 0) expect = false;
            }
            ASSERT_EQ(potential(OneForm::basis(vars[k], m)).exact(), expect) << m << " d" << vars[k];
            ++checked;
          }
        }
  EXPECT_EQ(checked, 70 * 4);
}
