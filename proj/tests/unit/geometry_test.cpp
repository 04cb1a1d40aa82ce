#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "equiform/analysis.hpp"
#include "equiform/fd_oracle.hpp"
#include "equiform/geometry.hpp"
#include "equiform/sampling.hpp"

namespace equiform {
namespace {

using R = Rational;
using T = TrigPoly<R>;

MotionParams<R> block(long a, long c, long s) { return block_rotation_instance<R>(R(a), R(c), R(s)); }
MotionParams<R> scaling() { return block(0, 0, 1); }
MotionParams<R> rotation() { return block(1, 0, 0); }

T cos_sq_phi() {
  return T::constant(R(1, 2)) + T::make_term({0, 2}, Basis::cos, TPoly<R>(R(1, 2)));
}

TEST(Surface, IdentityMotionIsTheSphere) {
  const auto x = sphere_chart<R>();
  const auto X = surface(MotionParams<R>{});
  for (int k = 0; k < 7; ++k) EXPECT_EQ(X.components[k], x[k]);
}

TEST(Surface, ScalingIsOnePlusT) {
  const auto x = sphere_chart<R>();
  const auto X = surface(scaling());
  const T one_plus_t = T::make_term({0, 0}, Basis::cos, TPoly<R>(std::vector<R>{R(1), R(1)}));
  for (int k = 0; k < 7; ++k) EXPECT_EQ(X.components[k], x[k] * one_plus_t);
}

TEST(Surface, ZeroPositionIsTheSphere) {
  const auto x = sphere_chart<R>();
  const auto X = surface(sample_instance<R>(FamilyKind::Unconstrained, 3, 0));
  for (int k = 0; k < 7; ++k) EXPECT_EQ(X.components[k].substitute_t(R(0)), x[k]);
}

TEST(Tangents, ScalingAtZero) {
  const auto x = sphere_chart<R>();
  const auto tg = tangents(scaling());
  for (int k = 0; k < 7; ++k) {
    EXPECT_EQ(tg.dt[k].substitute_t(R(0)), x[k]);
    EXPECT_EQ(tg.dtheta[k].substitute_t(R(0)), x[k].differentiate(Var::theta));
    EXPECT_EQ(tg.dphi[k].substitute_t(R(0)), x[k].differentiate(Var::phi));
  }
}

TEST(Tangents, ZeroMotionHasNoVelocity) {
  const auto tg = tangents(MotionParams<R>{});
  for (const auto& c : tg.dt) EXPECT_TRUE(c.is_zero());
}

TEST(Tangents, ThetaTangentVanishesAtPole) {
  const auto tg = tangents(sample_instance<R>(FamilyKind::Unconstrained, 3, 1));
  for (const auto& c : tg.dtheta) EXPECT_NEAR(c.evaluate(R(0), 0.4, std::numbers::pi / 2), 0.0, 1e-12);
}

TEST(Metric, Block211AtZero) {
  const auto g = metric(block(2, 1, 1));
  EXPECT_EQ(g(0, 0).substitute_t(R(0)), T::constant(R(6)));
  EXPECT_EQ(g(1, 1).substitute_t(R(0)), cos_sq_phi());
  EXPECT_EQ(g(2, 2).substitute_t(R(0)), T::constant(R(1)));
  EXPECT_TRUE(g(0, 1).substitute_t(R(0)).is_zero());
  EXPECT_TRUE(g(0, 2).substitute_t(R(0)).is_zero());
  EXPECT_TRUE(g(1, 2).substitute_t(R(0)).is_zero());
}

TEST(Metric, ZeroMotionIsDegenerate) { EXPECT_TRUE(metric(MotionParams<R>{})(0, 0).is_zero()); }

TEST(Metric, ScalingAtZero) {
  const auto g = metric(scaling());
  EXPECT_EQ(g(0, 0).substitute_t(R(0)), T::constant(R(1)));
  EXPECT_EQ(g(1, 1).substitute_t(R(0)), cos_sq_phi());
  EXPECT_EQ(g(2, 2).substitute_t(R(0)), T::constant(R(1)));
}

TEST(Metric, ClosedFormMatchesCalibrations) {
  EXPECT_EQ(metric(block(2, 1, 1)), metric_closed_form(block(2, 1, 1)));
  EXPECT_EQ(metric(scaling()), metric_closed_form(scaling()));
}

TEST(Metric, ClosedFormRejectsConditionViolations) {
  MotionParams<R> p;
  p.w(3) = 1;
  EXPECT_THROW(metric_closed_form(p), PreconditionError);
}

TEST(GeometryProperties, MetricOracleEquivalence) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto p = sample_instance<R>(FamilyKind::Unconstrained, 101, i);
    ASSERT_EQ(metric(p), metric_closed_form(p)) << describe(p);
  }
}

TEST(GeometryProperties, PositiveDefiniteAtZero) {
  SampleRng rng(5, 0);
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto p = sample_instance<R>(FamilyKind::Unconstrained, 5, i);
    const auto g = metric(p);
    for (int k = 0; k < 4; ++k) {
      const double th = rng.real() * 1.0, ph = rng.real() * 0.45;
      if (std::abs(std::cos(ph)) <= 0.1) continue;
      double m[3][3];
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m[a][b] = g(a, b).evaluate(R(0), th, ph);
      const double m1 = m[0][0];
      const double m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      const double m3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      EXPECT_GT(m1, 0.0);
      EXPECT_GT(m2, 0.0);
      EXPECT_GT(m3, 0.0) << describe(p) << " at " << th << ", " << ph;
    }
  }
}

TEST(Christoffel, RoundSphereSymbol) {
  const auto c = christoffel(rotation());
  EXPECT_NEAR(c.symbol(1, 1, 2).evaluate(R(0), 1.0, 0.5), -std::tan(0.5), 1e-12);
  EXPECT_NEAR(c.symbol(1, 2, 1).evaluate(R(0), 1.0, 0.5), -std::tan(0.5), 1e-12);
}

TEST(Christoffel, DegenerateMotionThrows) {
  EXPECT_THROW(christoffel(MotionParams<R>{}), DegenerateMetricError);
  EXPECT_THROW(scalar_curvature(MotionParams<R>{}), DegenerateMetricError);
}

TEST(ScalarCurvature, Calibrations) {
  const std::pair<MotionParams<R>, long> cases[] = {{scaling(), 0}, {block(2, 1, 1), 1}, {rotation(), 2}};
  for (const auto& [p, k] : cases) {
    const auto cq = scalar_curvature(p);
    EXPECT_FALSE(cq.Q.is_zero());
    EXPECT_TRUE((cq.P - cq.Q.scaled(R(k))).is_zero()) << describe(p);
  }
}

TEST(ScalarCurvature, RiemannianSignFlips) {
  const auto k = scalar_curvature(rotation());
  const auto r = scalar_curvature(rotation(), CurvatureSign::riemannian);
  EXPECT_TRUE((k.P * r.Q + r.P * k.Q).is_zero());
}

TEST(CurvatureAt, Examples) {
  EXPECT_NEAR(curvature_at(scaling(), 0.7, 0.3), 0.0, 1e-12);
  EXPECT_NEAR(curvature_at(block(2, 1, 1), 0.7, 0.3), 1.0, 1e-12);
  EXPECT_NEAR(curvature_at(block(2, 1, 1), -2.1, 1.2), 1.0, 1e-12);
  EXPECT_THROW(curvature_at(block(2, 1, 1), 0.7, std::numbers::pi / 2), PoleOfChartError);
}

TEST(GeometryProperties, Periodicity) {
  for (std::uint64_t i = 0; i < 5; ++i) {
    const auto cq = scalar_curvature(sample_instance<R>(FamilyKind::Unconstrained, 17, i));
    for (double th : {0.3, 1.7, -2.2}) {
      const double a = curvature_at(cq, th, 0.4);
      const double b = curvature_at(cq, th + 2 * std::numbers::pi, 0.4);
      EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST(GeometryProperties, FiniteDifferenceAgreement) {
  SampleRng rng(23, 0);
  for (std::uint64_t i = 0; i < 4; ++i) {
    const auto p = sample_instance<double>(FamilyKind::Unconstrained, 23, i);
    const auto cq = scalar_curvature(p);
    for (int k = 0; k < 20; ++k) {
      const double th = rng.real(), ph = rng.real() * 0.4;
      double sym = 0.0;
      try {
        sym = curvature_at(cq, th, ph);
      } catch (const PoleOfChartError&) {
        continue;
      }
      const double fd = fd_curvature(p, th, ph);
      EXPECT_LE(std::abs(fd - sym) / std::max(1.0, std::abs(sym)), 1e-6) << describe(p);
    }
  }
}

}  // namespace
}  // namespace equiform
