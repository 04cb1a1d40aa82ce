#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "equiform/rational_trig.hpp"
#include "equiform/trig_poly.hpp"
#include "support.hpp"

namespace equiform {
namespace {

using R = Rational;
using T = TrigPoly<R>;
using testing::random_trig;
using testing::rat_term;

T cos_theta() { return rat_term(1, 0, Basis::cos, R(1)); }

TEST(MakeTerm, ConstantAtOrigin) {
  const T c = rat_term(0, 0, Basis::cos, R(1));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.coefficient(0, 0).first, TPoly<R>(R(1)));
}

TEST(MakeTerm, SineParityFoldsToCanonicalKey) {
  const T s = rat_term(-1, 2, Basis::sin, R(1));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.terms()[0].key, (FreqKey{1, -2}));
  EXPECT_EQ(s.terms()[0].sin, TPoly<R>(R(-1)));
  // Reading back at the original key undoes the flip.
  EXPECT_EQ(s.coefficient(-1, 2).second, TPoly<R>(R(1)));
}

TEST(MakeTerm, SineAtOriginIsZero) { EXPECT_TRUE(rat_term(0, 0, Basis::sin, R(5)).is_zero()); }

TEST(Add, IdentityInverseDoubling) {
  const T c = cos_theta();
  EXPECT_EQ(c + T{}, c);
  EXPECT_TRUE((c + (-c)).is_zero());
  EXPECT_EQ(c + c, rat_term(1, 0, Basis::cos, R(2)));
}

TEST(Mul, DoubleAngle) {
  const T expected = rat_term(0, 0, Basis::cos, R(1, 2)) + rat_term(2, 0, Basis::cos, R(1, 2));
  EXPECT_EQ(cos_theta() * cos_theta(), expected);
}

TEST(Mul, ProductToSum) {
  const T p = rat_term(1, 0, Basis::sin, R(1)) * rat_term(0, 1, Basis::cos, R(1));
  const T expected = rat_term(1, 1, Basis::sin, R(1, 2)) + rat_term(1, -1, Basis::sin, R(1, 2));
  EXPECT_EQ(p, expected);
}

TEST(Mul, TDegreesAdd) {
  const T tc = T::make_term({1, 0}, Basis::cos, TPoly<R>::monomial(R(1), 1));
  const T expected = T::make_term({0, 0}, Basis::cos, TPoly<R>::monomial(R(1, 2), 2)) +
                     T::make_term({2, 0}, Basis::cos, TPoly<R>::monomial(R(1, 2), 2));
  EXPECT_EQ(tc * tc, expected);
}

TEST(Mul, TruncationDropsHighTDegrees) {
  const T tc = T::make_term({1, 0}, Basis::cos, TPoly<R>(std::vector<R>{R(1), R(1)}));
  EXPECT_EQ(mul(tc, tc, 1).t_degree(), 1);
}

TEST(Differentiate, Examples) {
  EXPECT_EQ(rat_term(1, 1, Basis::sin, R(1)).differentiate(Var::theta), rat_term(1, 1, Basis::cos, R(1)));
  const T t2 = T::make_term({2, 0}, Basis::cos, TPoly<R>::monomial(R(1), 2));
  EXPECT_EQ(t2.differentiate(Var::t), T::make_term({2, 0}, Basis::cos, TPoly<R>::monomial(R(2), 1)));
  EXPECT_EQ(rat_term(2, -3, Basis::cos, R(1)).differentiate(Var::phi), rat_term(2, -3, Basis::sin, R(3)));
}

TEST(Evaluate, Examples) {
  EXPECT_DOUBLE_EQ(T::constant(R(1)).evaluate(R(0), 0.4, -1.2), 1.0);
  EXPECT_DOUBLE_EQ(cos_theta().evaluate(R(0), 0.0, 0.0), 1.0);
  const T half = rat_term(0, 0, Basis::cos, R(1, 2)) + rat_term(2, 0, Basis::cos, R(1, 2));
  EXPECT_NEAR(half.evaluate(R(0), std::numbers::pi / 4, 0.0), 0.5, 1e-15);
}

TEST(SubstituteT, Examples) {
  const T p = T::make_term({1, 0}, Basis::cos, TPoly<R>(std::vector<R>{R(1), R(2)}));
  EXPECT_EQ(p.substitute_t(R(0)), cos_theta());
  EXPECT_TRUE(T::make_term({0, 1}, Basis::sin, TPoly<R>::monomial(R(1), 2)).substitute_t(R(0)).is_zero());
  EXPECT_EQ(p.substitute_t(R(1)), rat_term(1, 0, Basis::cos, R(3)));
}

TEST(Coefficient, Examples) {
  const T half = rat_term(0, 0, Basis::cos, R(1, 2)) + rat_term(2, 0, Basis::cos, R(1, 2));
  EXPECT_EQ(half.coefficient(2, 0).first, TPoly<R>(R(1, 2)));
  EXPECT_TRUE(half.coefficient(2, 0).second.is_zero());
  EXPECT_EQ(half.coefficient(0, 0).first, TPoly<R>(R(1, 2)));
  EXPECT_TRUE(half.coefficient(5, 5).first.is_zero());
}

TEST(IsZero, ExactAndFloat) {
  EXPECT_TRUE(is_zero(T{}, 1.0));
  EXPECT_TRUE(is_zero(cos_theta() - cos_theta(), 1.0));
  EXPECT_FALSE(is_zero(cos_theta(), 1.0));
  const auto tiny = TrigPoly<double>::make_term({1, 0}, Basis::cos, TPoly<double>(1e-12));
  EXPECT_TRUE(is_zero(tiny, 10.0));
  EXPECT_FALSE(is_zero(tiny, 1e-6));
}

TEST(RationalTrig, RejectsZeroDenominator) {
  EXPECT_THROW(RationalTrig<R>(cos_theta(), T{}), std::invalid_argument);
}

TEST(RationalTrig, QuotientRuleMatchesCrossMultiplication) {
  // d/dtheta (cos / (2 + sin)) = -(1 + 2 sin) / (2 + sin)^2.
  const T sin1 = rat_term(1, 0, Basis::sin, R(1));
  const RationalTrig<R> f(cos_theta(), T::constant(R(2)) + sin1);
  const T den = T::constant(R(2)) + sin1;
  const RationalTrig<R> expected(-(T::constant(R(1)) + sin1.scaled(R(2))), den * den);
  EXPECT_TRUE(f.differentiate(Var::theta).equivalent(expected));
}

// ---- randomized algebra suite, 1000 cases each -------------------------------

constexpr int kCases = 1000;

TEST(AlgebraProperties, RingAxioms) {
  std::mt19937_64 rng(2024);
  for (int n = 0; n < kCases; ++n) {
    const T p = random_trig(rng), q = random_trig(rng), r = random_trig(rng);
    ASSERT_TRUE(((p + q) + r - (p + (q + r))).is_zero()) << "case " << n;
    ASSERT_TRUE((p * (q + r) - (p * q + p * r)).is_zero()) << "case " << n;
    ASSERT_TRUE((p * q - q * p).is_zero()) << "case " << n;
  }
}

TEST(AlgebraProperties, DerivationRule) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < kCases; ++n) {
    const T p = random_trig(rng), q = random_trig(rng);
    for (Var v : kCoordinates) {
      const T lhs = (p * q).differentiate(v);
      const T rhs = p.differentiate(v) * q + p * q.differentiate(v);
      ASSERT_TRUE((lhs - rhs).is_zero()) << "case " << n << " var " << static_cast<int>(v);
    }
  }
}

TEST(AlgebraProperties, EvaluationHomomorphism) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<int> tn(-4, 4);
  for (int n = 0; n < kCases; ++n) {
    const T p = random_trig(rng), q = random_trig(rng);
    const R t(tn(rng), 3);
    const double th = angle(rng), ph = angle(rng);
    const double lhs = (p * q).evaluate(t, th, ph);
    const double rhs = p.evaluate(t, th, ph) * q.evaluate(t, th, ph);
    const double scale = std::max(1.0, (p * q).max_abs_coefficient() * 64.0);
    ASSERT_LE(std::abs(lhs - rhs), 1e-12 * scale) << "case " << n;
  }
}

TEST(AlgebraProperties, CoefficientRoundtrip) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> freq(-6, 6), num(-9, 9), den(1, 9);
  for (int n = 0; n < kCases; ++n) {
    // Canonical keys with distinct entries, so the table is the series.
    std::map<FreqKey, std::pair<R, R>> table;
    for (int k = 0; k < 5; ++k) {
      FreqKey key{std::abs(freq(rng)), freq(rng)};
      if (key.i == 0) key.j = std::abs(key.j);
      R c(num(rng), den(rng)), s(num(rng), den(rng));
      c.canonicalize();
      s.canonicalize();
      if (key.is_origin()) s = 0;
      table[key] = {c, s};
    }
    std::vector<TrigTerm<R>> terms;
    for (const auto& [key, cs] : table) terms.push_back({key, TPoly<R>(cs.first), TPoly<R>(cs.second)});
    const T p = T::from_terms(terms);
    for (const auto& [key, cs] : table) {
      const auto [c, s] = p.coefficient(key.i, key.j);
      ASSERT_EQ(c[0], cs.first) << "case " << n;
      ASSERT_EQ(s[0], cs.second) << "case " << n;
      // The negated key sees the same cosine and the opposite sine.
      const auto [cn, sn] = p.coefficient(-key.i, -key.j);
      ASSERT_EQ(cn[0], cs.first);
      ASSERT_EQ(sn[0], key.is_origin() ? R(0) : R(-cs.second));
    }
  }
}

TEST(AlgebraProperties, SpectrumBound) {
  std::mt19937_64 rng(17);
  for (int n = 0; n < kCases; ++n) {
    const T p = random_trig(rng), q = random_trig(rng);
    const T pq = p * q;
    ASSERT_LE(pq.max_i(), p.max_i() + q.max_i());
    ASSERT_LE(pq.max_abs_j(), p.max_abs_j() + q.max_abs_j());
  }
}

TEST(AlgebraProperties, StoredKeysStayCanonical) {
  std::mt19937_64 rng(19);
  for (int n = 0; n < 200; ++n) {
    const T pq = random_trig(rng) * random_trig(rng);
    for (const auto& term : pq.terms()) {
      ASSERT_TRUE(term.key.is_canonical());
      ASSERT_FALSE(term.cos.is_zero() && term.sin.is_zero());
      if (term.key.is_origin()) ASSERT_TRUE(term.sin.is_zero());
    }
  }
}

}  // namespace
}  // namespace equiform
