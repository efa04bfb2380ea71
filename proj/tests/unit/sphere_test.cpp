#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "legendre/sphere/sphere.hpp"
#include "support/rotation_oracle.hpp"

using namespace legendre::sphere;

namespace {

Vec V(std::initializer_list<double> xs) {
  Vec out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) out(k++) = x;
  return out;
}

TangentAtBase T(std::initializer_list<double> xs) { return TangentAtBase(V(xs)); }

Vec random_ball(std::mt19937_64& rng, int n, double radius) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec d(n);
  for (int i = 0; i < n; ++i) d(i) = g(rng);
  return d.normalized() * radius * u(rng);
}

}  // namespace

TEST(Sphere, ExpExamples) {
  EXPECT_TRUE(exp_map(T({0.0, 0.0})).coords().isApprox(V({1, 0, 0})));
  EXPECT_NEAR((exp_map(T({M_PI / 2})).coords() - V({0, 1})).norm(), 0.0, 1e-15);
  EXPECT_NEAR((exp_map(T({M_PI, 0.0})).coords() - V({-1, 0, 0})).norm(), 0.0, 1e-15);
}

TEST(Sphere, LogExamples) {
  EXPECT_EQ(log_map(SpherePoint::base(2)).norm(), 0.0);
  EXPECT_NEAR(log_map(SpherePoint(V({0, 1}))).components(0), M_PI / 2, 1e-15);
  EXPECT_THROW((void)log_map(SpherePoint(V({-1, 0, 0}))), AntipodalPoint);
  EXPECT_THROW((void)log_map(SpherePoint(V({-1, 1e-14}))), AntipodalPoint);
  EXPECT_NO_THROW((void)log_map(SpherePoint(V({-1, 1e-6}))));
}

TEST(Sphere, SpherePointRenormalizes) {
  EXPECT_NEAR(SpherePoint(V({3, 4})).coords()(1), 0.8, 1e-16);
  EXPECT_THROW(SpherePoint(V({0, 0})), std::invalid_argument);
  EXPECT_THROW(SpherePoint(V({1})), std::invalid_argument);
}

TEST(Sphere, SincSeriesIsContinuous) {
  EXPECT_DOUBLE_EQ(sinc(0.0), 1.0);
  EXPECT_NEAR(sinc(0.99e-8), std::sin(1.01e-8) / 1.01e-8, 1e-15);
}

TEST(Sphere, TransportExamples) {
  EXPECT_TRUE(parallel_transport(T({0.0, 0.0}), T({2.0, 3.0})).isApprox(V({0, 2, 3})));
  const double th = 0.7;
  EXPECT_NEAR((parallel_transport(T({th}), T({1.0})) - V({-std::sin(th), std::cos(th)})).norm(), 0.0, 1e-15);
  EXPECT_NEAR((parallel_transport(T({M_PI / 2, 0.0}), T({0.0, 1.0})) - V({0, 0, 1})).norm(), 0.0, 1e-15);
  EXPECT_THROW((void)parallel_transport(T({M_PI}), T({1.0})), GeodesicUndefined);
}

TEST(Sphere, TransportMatchesMatrixExponentialRotation) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 200; ++k) {
      const Vec v = random_ball(rng, n, 3.1);
      const Vec w = random_ball(rng, n, 2.0);
      const Eigen::MatrixXd R = testsupport::geodesic_rotation(v);
      Vec ew = Vec::Zero(n + 1);
      ew.tail(n) = w;
      ASSERT_NEAR((parallel_transport(TangentAtBase(v), TangentAtBase(w)) - R * ew).norm(), 0.0, 1e-12);
      ASSERT_NEAR((exp_map(TangentAtBase(v)).coords() - R.col(0)).norm(), 0.0, 1e-12);
    }
  }
}

TEST(Sphere, TransportedFrameIsOrthonormalAndTangent) {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 100; ++k) {
      const TangentAtBase v(random_ball(rng, n, 3.1));
      const auto frame = transported_frame(v);
      const Vec p = exp_map(v).coords();
      for (int i = 0; i < n; ++i) {
        ASSERT_NEAR(frame[static_cast<std::size_t>(i)].dot(p), 0.0, 1e-12);
        for (int j = 0; j < n; ++j) {
          ASSERT_NEAR(frame[static_cast<std::size_t>(i)].dot(frame[static_cast<std::size_t>(j)]), i == j ? 1.0 : 0.0,
                      1e-12);
        }
      }
    }
  }
}

TEST(Sphere, TransportedFrameAtZeroAndInOneDimension) {
  const auto f0 = transported_frame(T({0.0, 0.0}));
  EXPECT_TRUE(f0[0].isApprox(V({0, 1, 0})));
  EXPECT_TRUE(f0[1].isApprox(V({0, 0, 1})));
  const auto f1 = transported_frame(T({-1.2}));
  EXPECT_NEAR((f1[0] - V({-std::sin(-1.2), std::cos(-1.2)})).norm(), 0.0, 1e-15);
}

// <E_i, d exp_v(e_j)> = delta_ij with d exp from central differences.
TEST(Sphere, DualFrameInvertsTheChartDifferential) {
  std::mt19937_64 rng(7);
  const double h = 1e-6;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 50; ++k) {
      const Vec v = random_ball(rng, n, 2.5);
      const auto E = dual_frame(TangentAtBase(v));
      const Vec p = exp_map(TangentAtBase(v)).coords();
      for (int j = 0; j < n; ++j) {
        const Vec dv = h * Vec::Unit(n, j);
        const Vec dj = (exp_map(TangentAtBase(v + dv)).coords() - exp_map(TangentAtBase(v - dv)).coords()) / (2 * h);
        for (int i = 0; i < n; ++i) {
          ASSERT_NEAR(E[static_cast<std::size_t>(i)].dot(dj), i == j ? 1.0 : 0.0, 1e-8) << n << " " << v.transpose();
        }
      }
      for (const auto& e : E) ASSERT_NEAR(e.dot(p), 0.0, 1e-12);
    }
  }
}

TEST(Sphere, DualFrameAgreesWithTransportForRadialOrOneDimensional) {
  const auto a = dual_frame(T({0.9}));
  const auto b = transported_frame(T({0.9}));
  EXPECT_NEAR((a[0] - b[0]).norm(), 0.0, 1e-15);
  // Along v the two frames agree, across v they differ by r / sin r.
  const TangentAtBase v(V({0.6, 0.0}));
  const auto d = dual_frame(v);
  const auto t = transported_frame(v);
  EXPECT_NEAR((d[0] - t[0]).norm(), 0.0, 1e-15);
  EXPECT_NEAR(d[1].norm(), 0.6 / std::sin(0.6), 1e-15);
}

TEST(SphereProperty, ExpLogInverseAndIsometry) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 2000; ++k) {
      const Vec v = random_ball(rng, n, 3.1);
      const TangentAtBase tv(v);
      ASSERT_NEAR((log_map(exp_map(tv)).components - v).norm(), 0.0, 1e-12);
      const Vec w1 = random_ball(rng, n, 1.0), w2 = random_ball(rng, n, 1.0);
      const Vec p1 = parallel_transport(tv, TangentAtBase(w1));
      const Vec p2 = parallel_transport(tv, TangentAtBase(w2));
      ASSERT_NEAR(p1.dot(p2), w1.dot(w2), 1e-12);
      ASSERT_NEAR(p1.dot(exp_map(tv).coords()), 0.0, 1e-12);
    }
  }
}
