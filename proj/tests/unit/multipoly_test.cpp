#include <gtest/gtest.h>

#include <random>

#include "legendre/algebra/multipoly.hpp"
#include "support/random_poly.hpp"

using legendre::algebra::MultiPoly;
using legendre::algebra::ParseError;
using legendre::algebra::Rational;
using legendre::algebra::UnknownVariable;

namespace {

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

}  // namespace

TEST(MultiPoly, DifferenceOfSquares) {
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  EXPECT_EQ((x - y) * (x + y), x * x - y * y);
  EXPECT_EQ(((x - y) * (x + y)).to_string(), "x^2 - y^2");
}

TEST(MultiPoly, CanonicalOrderAndPrinting) {
  const MultiPoly p = P("a - b1*t1^2*3/2 + theta1");
  EXPECT_EQ(p.to_string(), "-3/2*b1*t1^2 + theta1 + a");
  EXPECT_EQ(MultiPoly().to_string(), "0");
  EXPECT_EQ(P(p.to_string().c_str()), p);
}

TEST(MultiPoly, ParseErrors) {
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("x^y"), ParseError);
  EXPECT_THROW(P("1/(x)"), ParseError);
  EXPECT_THROW(P("(x"), ParseError);
}

TEST(MultiPoly, SubstituteIsSimultaneous) {
  const MultiPoly p = P("x - 2*y");
  const MultiPoly swapped = p.substitute({{"x", P("y")}, {"y", P("x")}});
  EXPECT_EQ(swapped, P("y - 2*x"));
  EXPECT_THROW((void)p.substitute({{"z", P("1")}}), UnknownVariable);
}

TEST(MultiPoly, CoefficientExtraction) {
  const MultiPoly p = P("t1^2*theta1^2 + 3*t1*theta1*b1 - b1^2 + theta1^2");
  const std::vector<std::string> main = {"theta1", "b1"};
  EXPECT_EQ(p.coefficient({{"theta1", 2}}, main), P("t1^2 + 1"));
  EXPECT_EQ(p.coefficient({{"theta1", 1}, {"b1", 1}}, main), P("3*t1"));
  EXPECT_EQ(p.coefficient({{"b1", 2}}, main), P("-1"));
  EXPECT_TRUE(p.coefficient({{"b1", 1}}, main).is_zero());
}

TEST(MultiPoly, DivideByVariable) {
  EXPECT_EQ(P("qe*pe + qe^2").divide_by_variable("qe"), P("pe + qe"));
  EXPECT_THROW((void)P("qe + 1").divide_by_variable("qe"), std::domain_error);
}

TEST(MultiPoly, WithVariablesRefusesToDropUsed) {
  EXPECT_THROW((void)P("x*y").with_variables({"x"}), std::invalid_argument);
  EXPECT_EQ(P("x").with_variables({"x", "z"}), P("x"));
}

TEST(MultiPoly, EvaluateRationalAndDouble) {
  const MultiPoly p = P("x^2*y - 1/3");
  EXPECT_EQ(p.evaluate(std::map<std::string, Rational>{{"x", Rational(2)}, {"y", Rational(1, 4)}}), Rational(2, 3));
  EXPECT_DOUBLE_EQ(p.evaluate(std::map<std::string, double>{{"x", 2.0}, {"y", 0.25}}), 2.0 / 3.0);
}

// Ring laws and Leibniz, checked structurally; the evaluation homomorphism
// checks them against plain rational arithmetic.
TEST(MultiPolyProperty, RingLawsLeibnizAndEvaluation) {
  std::mt19937_64 rng(20260105);
  const std::vector<std::string> vars = {"theta1", "b1", "a", "t1"};
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly p = testsupport::random_poly(rng, vars, 4, 3);
    const MultiPoly q = testsupport::random_poly(rng, vars, 4, 3);
    const MultiPoly r = testsupport::random_poly(rng, vars, 3, 2);
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_TRUE((p - p).is_zero());
    for (const auto& v : vars) {
      ASSERT_EQ((p * q).derivative(v), p.derivative(v) * q + p * q.derivative(v));
    }
    const auto pt = testsupport::random_point(rng, vars);
    ASSERT_EQ((p * q).evaluate(pt), p.evaluate(pt) * q.evaluate(pt));
    ASSERT_EQ((p + q).evaluate(pt), p.evaluate(pt) + q.evaluate(pt));
    ASSERT_EQ(MultiPoly::parse(p.to_string()), p);
  }
}

TEST(MultiPolyProperty, SubstitutionCommutesWithEvaluation) {
  std::mt19937_64 rng(77);
  const std::vector<std::string> vars = {"x", "y"};
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly p = testsupport::random_poly(rng, vars, 4, 3);
    const MultiPoly fx = testsupport::random_poly(rng, vars, 3, 2);
    const MultiPoly fy = testsupport::random_poly(rng, vars, 3, 2);
    const auto pt = testsupport::random_point(rng, vars);
    const MultiPoly composed = p.with_variables(vars).substitute({{"x", fx}, {"y", fy}});
    const Rational expect =
        p.evaluate(std::map<std::string, Rational>{{"x", fx.evaluate(pt)}, {"y", fy.evaluate(pt)}});
    ASSERT_EQ(composed.evaluate(pt), expect);
  }
}

TEST(MultiPoly, AntiderivativeInvertsDerivative) {
  const MultiPoly p = P("3*x^2*y + y^3 - 5");
  EXPECT_EQ(p.antiderivative("x").derivative("x"), p);
  EXPECT_EQ(p.pow(3), p * p * p);
}
