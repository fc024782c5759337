#include <gtest/gtest.h>

#include "hecke/projector.hpp"

namespace hecke {
namespace {

RatFunc qfactorial(int n) {
  RatFunc f(1);
  for (int k = 2; k <= n; ++k) f *= quantum(k);
  return f;
}

// q^{N(N-1)/2} / [N]! * sum_w (-q)^{-l(w)} T_w
HeckeElement closed_form(int n) {
  const auto& g = SymmetricGroup::get(n);
  HeckeElement sum(n);
  for (SymmetricGroup::Index w = 0; w < g.order(); ++w) {
    const int l = g.length(w);
    sum += HeckeElement::basis(g.element(w), RatFunc(QLaurent::monomial(Rational(l % 2 ? -1 : 1), -l)));
  }
  return (RatFunc::q_power(n * (n - 1) / 2) / qfactorial(n)) * sum;
}

TEST(Projector, SmallLevels) {
  const auto tower = build_tower_T(3);
  EXPECT_EQ(restrict_rank(tower[1], 1), HeckeElement::identity(1));
  EXPECT_EQ(restrict_rank(tower[2], 2), HeckeElement::identity(2) - (RatFunc(1) / quantum(2)) * generator_T(2, 1));
  EXPECT_EQ(tower[3].size(), 6u);
  EXPECT_EQ(tower[2].rank(), 3);
  EXPECT_THROW(tower[4], IndexOutOfRange);
  EXPECT_THROW(build_tower_T(0), PreconditionError);
}

TEST(Projector, MatchesClosedForm) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(projector(n, n), closed_form(n)) << "N=" << n;
}

TEST(Projector, TowersAgree) {
  const auto t = build_tower_T(5);
  const auto r = build_tower_R(5);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(t[n], r[n]) << "N=" << n;
}

TEST(Projector, IdempotentAndAnnihilating) {
  for (int n = 1; n <= 5; ++n) {
    const HeckeElement p = projector(n, n);
    EXPECT_EQ(p * p, p);
    for (int k = 1; k < n; ++k) {
      EXPECT_TRUE((generator_T(n, k) * p).is_zero());
      EXPECT_TRUE((p * generator_T(n, k)).is_zero());
    }
  }
}

TEST(Projector, ShiftedAndPhi) {
  EXPECT_EQ(shifted_projector(1, 2), HeckeElement::identity(2));
  EXPECT_EQ(shifted_projector(2, 3), HeckeElement::identity(3) - (RatFunc(1) / quantum(2)) * generator_T(3, 2));
  EXPECT_THROW(shifted_projector(3, 3), RankOverflow);
  const auto tower = build_tower_T(4);
  EXPECT_EQ(shifted_projector(tower, 2, 4), shifted_projector(2, 4));
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(phi(projector(n, n)), projector(n, n));
  for (int n = 2; n <= 3; ++n) EXPECT_EQ(phi(projector(n, n + 1)), shifted_projector(n, n + 1));
}

TEST(Projector, MirrorRecursionAndAbsorption) {
  for (int n = 1; n <= 4; ++n) {
    const int h = n + 1;
    const HeckeElement pp = shifted_projector(n, h);
    EXPECT_EQ(projector(n + 1, h), pp - rho(n) * (pp * generator_T(h, 1) * pp));
    if (n >= 2) {
      const HeckeElement p = projector(n, h);
      const HeckeElement p0 = projector(n - 1, h);
      EXPECT_EQ(p * p0, p);
      EXPECT_EQ(p0 * p, p);
      const HeckeElement q0 = shifted_projector(n - 1, h);
      EXPECT_EQ(pp * q0, pp);
      EXPECT_EQ(q0 * pp, pp);
    }
  }
}

}  // namespace
}  // namespace hecke
