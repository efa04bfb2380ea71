#include <gtest/gtest.h>

#include <random>

#include "legendre/proof/quad_system.hpp"

using namespace legendre::proof;
using Tag = SolutionClass::Tag;
using legendre::Report;

namespace {

QuadSystemPoint Q(long pe, long pz, long qe, long qz) {
  return {Rational(pe), Rational(pz), Rational(qe), Rational(qz)};
}

// The four equations evaluated directly.
int first_violated(const QuadSystemPoint& x) {
  const Rational one(1);
  if (x.p_e + x.p_z != one) return 1;
  if (x.q_e + x.q_z != one) return 2;
  if (x.p_e * x.p_e + x.p_z * x.q_e != one) return 3;
  if (x.q_e * x.p_e + x.q_z * x.q_e != Rational(0)) return 4;
  return 0;
}

bool on_family(const QuadSystemPoint& x) {
  const Rational t = x.q_e;
  return x.p_e == t - Rational(1) && x.p_z == Rational(2) - t && x.q_z == Rational(1) - t;
}

}  // namespace

TEST(ClassifyQuadruple, DocumentedExamples) {
  EXPECT_EQ(classify_quadruple(Q(1, 0, 0, 1)).tag, Tag::trivial_fixed);
  const auto f0 = classify_quadruple(Q(-1, 2, 0, 1));
  EXPECT_EQ(f0.tag, Tag::family);
  EXPECT_EQ(*f0.t, Rational(0));
  const auto bad = classify_quadruple(Q(1, 1, 1, 1));
  EXPECT_EQ(bad.tag, Tag::not_solution);
  EXPECT_EQ(bad.failed_equation, 1);
  const auto f1 = classify_quadruple(Q(0, 1, 1, 0));
  EXPECT_EQ(f1.tag, Tag::family);
  EXPECT_EQ(*f1.t, Rational(1));
  EXPECT_EQ(f1.to_string(), "Family(t=1)");
}

TEST(ClassifyQuadruple, FamilyAtRationalParameter) {
  const Rational t(7, 3);
  const auto c = classify_quadruple({t - Rational(1), Rational(2) - t, t, Rational(1) - t});
  ASSERT_EQ(c.tag, Tag::family);
  EXPECT_EQ(*c.t, t);
}

TEST(ClassifyQuadruple, RandomQuadruplesOffBothFamiliesAreNotSolutions) {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<long> den(1, 12);
  auto draw = [&] {
    // Numerator range keeps the value inside [-3, 3].
    const long d = den(rng);
    std::uniform_int_distribution<long> n(-3 * d, 3 * d);
    return Rational(n(rng), d);
  };
  int tested = 0;
  while (tested < 100000) {
    const QuadSystemPoint x{draw(), draw(), draw(), draw()};
    if (on_family(x) || x == Q(1, 0, 0, 1)) continue;
    const auto c = classify_quadruple(x);
    ASSERT_EQ(c.tag, Tag::not_solution);
    ASSERT_EQ(c.failed_equation, first_violated(x));
    ++tested;
  }
}

TEST(ClassifyQuadruple, ConsistentWithDirectEvaluationOnGrid) {
  std::vector<Rational> grid;
  for (long k = -6; k <= 6; ++k) grid.emplace_back(k, 2);
  int solutions = 0;
  for (const auto& pe : grid)
    for (const auto& pz : grid)
      for (const auto& qe : grid)
        for (const auto& qz : grid) {
          const QuadSystemPoint x{pe, pz, qe, qz};
          const auto c = classify_quadruple(x);
          const int v = first_violated(x);
          if (v != 0) {
            ASSERT_EQ(c.tag, Tag::not_solution);
            ASSERT_EQ(c.failed_equation, v);
          } else {
            ++solutions;
            ASSERT_TRUE(c.tag == Tag::trivial_fixed || c.tag == Tag::family);
          }
        }
  // (1,0,0,1) plus the family for t in {-1, -1/2, ..., 3}, where all four
  // entries stay inside [-3, 3].
  EXPECT_EQ(solutions, 1 + 9);
}

TEST(SolutionSet, StandardSystemPasses) {
  const Report r = verify_solution_set_complete();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details["reduced_eq4"], "pe*qe - qe^2 + qe");
  bool saw_qe0 = false, saw_family = false;
  for (const auto& b : r.branches) {
    if (b.name == "qe = 0") saw_qe0 = b.status == legendre::Status::pass;
    if (b.name == "qe != 0 (cofactor = 0)") saw_family = b.status == legendre::Status::pass;
  }
  EXPECT_TRUE(saw_qe0);
  EXPECT_TRUE(saw_family);
}

TEST(SolutionSet, MutatedThirdEquationFailsOnFamilyBranch) {
  QuadSystem s = QuadSystem::standard();
  s.rhs[2] = Rational(2);
  const Report r = verify_solution_set_complete(s);
  EXPECT_FALSE(r.passed());
  bool family_branch_failed = false;
  for (const auto& b : r.branches) {
    if (b.name == "qe != 0 (cofactor = 0)") family_branch_failed = b.status == legendre::Status::fail;
  }
  EXPECT_TRUE(family_branch_failed);
}

TEST(EquationRedundancy, ThirdIsMinusFourthAndFifthIsMinusSixth) {
  const Report r = verify_equation_redundancy();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details["constant_3_4"], "-1");
  EXPECT_EQ(r.details["constant_5_6"], "-1");
}

TEST(EquationRedundancy, RandomPointsOnConstraintSurface) {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 17);
  const Rational one(1);
  for (int k = 0; k < 50; ++k) {
    const Rational pe(num(rng), den(rng)), qe(num(rng), den(rng));
    const Rational pz = one - pe, qz = one - qe;
    const Rational e3 = pe * pe + pz * qe - one;
    const Rational e4 = pe * pz + pz * qz;
    const Rational e5 = qe * pe + qz * qe;
    const Rational e6 = qe * pz + qz * qz - one;
    ASSERT_EQ(e3, -e4);
    ASSERT_EQ(e5, -e6);
    ASSERT_EQ(e3.is_zero(), e4.is_zero());
  }
}

TEST(FixedPointRestriction, Passes) { EXPECT_TRUE(verify_fixed_point_restriction().passed()); }
