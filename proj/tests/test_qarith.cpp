#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hecke/qint.hpp"
#include "hecke/ratfunc.hpp"

using namespace hecke;

namespace {

QLaurent q_pow(int k) { return QLaurent::q_power(k); }

}  // namespace

TEST(QInt, SmallValues) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), QLaurent(1));
  EXPECT_EQ(qint(2), q_pow(1) + q_pow(-1));
  EXPECT_EQ(qint(3), q_pow(2) + QLaurent(1) + q_pow(-2));
  EXPECT_EQ(qint(-3), -qint(3));
}

// [k](q - q^-1) = q^k - q^-k, the defining quotient, checked by multiplying back.
TEST(QInt, MatchesDefiningQuotient) {
  const QLaurent denom = q_pow(1) - q_pow(-1);
  for (int k = -12; k <= 12; ++k) EXPECT_EQ(qint(k) * denom, q_pow(k) - q_pow(-k)) << k;
}

TEST(QInt, Rendering) {
  EXPECT_EQ(qint(2).to_string(), "1*q^1 + 1*q^-1");
  EXPECT_EQ(qint(0).to_string(), "0");
  EXPECT_EQ((QLaurent(3) - Rational(1, 2) * q_pow(-2)).to_string(), "3 - 1/2*q^-2");
  EXPECT_EQ(RatFunc(QLaurent(1), qint(2)).to_string(), "(1*q^1) / (1*q^2 + 1)");
}

TEST(RatFunc, InversePair) {
  const RatFunc two = quantum(2);
  EXPECT_EQ((RatFunc(1) / two) * two, RatFunc(1));
}

TEST(RatFunc, TelescopingRatioAtThree) {
  const int n = 3;
  const RatFunc lhs = quantum(n + 1) / quantum(n) - quantum(n + 2) / quantum(n + 1);
  EXPECT_EQ(lhs, RatFunc(1) / (quantum(3) * quantum(4)));
}

TEST(RatFunc, TwoMinusRatioAtFour) {
  const int n = 4;
  EXPECT_EQ(quantum(2) - quantum(n - 1) / quantum(n), quantum(5) / quantum(4));
}

TEST(RatFunc, DivisionByZeroThrows) {
  EXPECT_THROW(RatFunc(1) / RatFunc(0), DivisionByZero);
  EXPECT_THROW(RatFunc(QLaurent(1), QLaurent()), DivisionByZero);
}

TEST(RatFunc, CanonicalFormShape) {
  // (q^3 + q) / (2 q^4 + 2 q^2) = 1 / (2 q)
  const RatFunc f(q_pow(3) + q_pow(1), Rational(2) * (q_pow(4) + q_pow(2)));
  EXPECT_TRUE(f.den().is_one());
  EXPECT_EQ(f.num(), Rational(1, 2) * q_pow(-1));

  const RatFunc g(QLaurent(1), Rational(3) * qint(3));
  EXPECT_EQ(g.den().low_degree(), 0);
  EXPECT_EQ(g.den().leading_coefficient(), Rational(1));
}

TEST(RatFunc, CanonicalizationIdempotentAndSelfCancelling) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> pick(1, 7);
  for (int trial = 0; trial < 50; ++trial) {
    QLaurent num;
    for (int e = -3; e <= 3; ++e) num += Rational(small(rng)) * q_pow(e);
    const QLaurent den = qint(pick(rng)) * qint(pick(rng)) * q_pow(small(rng));
    const RatFunc x(num, den);
    EXPECT_EQ(RatFunc(x.num(), x.den()), x);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) EXPECT_EQ(x / x, RatFunc(1));
  }
}

// Product of quantum integers agrees with pointwise products at random rational points.
TEST(QInt, ProductMatchesRationalEvaluation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 17);
  for (int k = 1; k <= 6; ++k) {
    for (int m = 1; m <= 6; ++m) {
      const QLaurent prod = qint(k) * qint(m);
      for (int s = 0; s < 20; ++s) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        Rational direct = qint(k).evaluate(Rational(x)) * qint(m).evaluate(Rational(x));
        EXPECT_EQ(prod.evaluate(Rational(x)), direct);
      }
    }
  }
}

TEST(UnitCircle, QuantumIntegerIsSineRatio) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.05, std::numbers::pi - 0.05);
  for (int trial = 0; trial < 40; ++trial) {
    const double g = angle(rng);
    for (int k = -8; k <= 15; ++k) {
      const auto v = eval_unit_circle(quantum(k), g);
      EXPECT_NEAR(v.real(), std::sin(k * g) / std::sin(g), 1e-12);
      EXPECT_NEAR(v.imag(), 0.0, 1e-12);
    }
  }
}

TEST(UnitCircle, Examples) {
  EXPECT_NEAR(std::abs(eval_unit_circle(quantum(3), std::numbers::pi / 3)), 0.0, 1e-12);
  EXPECT_NEAR(eval_unit_circle(quantum(2), std::numbers::pi / 4).real(), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(eval_unit_circle(quantum(1), 1.234).real(), 1.0, 1e-15);
  EXPECT_THROW(eval_unit_circle(RatFunc(1) / quantum(3), std::numbers::pi / 3), PoleAtGamma);
  EXPECT_THROW(UnitCircleQ(0.0), PreconditionError);
}

TEST(QIntIdentities, HoldUpToTwenty) {
  const auto one = qint_identities_check(1);
  EXPECT_TRUE(one.ok);
  EXPECT_TRUE(qint_identities_check(10).ok);
  const auto report = qint_identities_check(20);
  EXPECT_TRUE(report.ok) << report.failed_identity << " at " << report.failed_at;
  EXPECT_EQ(report.checked, 20 * 2 + 20 * 5);
}

// [2][3] + [2] = [4] + 2[2], expanded independently by coefficient lists.
TEST(QIntIdentities, ScalarAtTwoExpanded) {
  // [2][3] = q^3 + 2q + 2q^-1 + q^-3 ; adding [2] gives q^3 + 2q + 2q^-1 + q^-3 + q + q^-1.
  const QLaurent lhs = q_pow(3) + Rational(3) * q_pow(1) + Rational(3) * q_pow(-1) + q_pow(-3);
  EXPECT_EQ(qint(2) * qint(3) + qint(2), lhs);
  EXPECT_EQ(qint(4) + Rational(2) * qint(2), lhs);
}
