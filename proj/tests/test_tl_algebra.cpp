#include <gtest/gtest.h>

#include <random>

#include "hecke/projector.hpp"
#include "hecke/tl_element.hpp"

namespace hecke {
namespace {

TLElement random_tl(int n, std::mt19937& rng, int terms) {
  const auto& b = TLBasis::get(n);
  std::uniform_int_distribution<TLBasis::Index> pick(0, b.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  TLElement a(n);
  for (int i = 0; i < terms; ++i) {
    RatFunc c(QLaurent::monomial(Rational(coef(rng)), coef(rng)) + QLaurent(Rational(coef(rng))));
    if (i % 3 == 2 && !c.is_zero()) c = c / quantum(3);
    a += TLElement::basis(b.diagram(pick(rng)), c);
  }
  return a;
}

TEST(TLDiagram, CatalanDimensions) {
  const unsigned catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 1; n <= kMaxTLRank; ++n) EXPECT_EQ(TLBasis::get(n).size(), catalan[n]);
  EXPECT_THROW(TLBasis::get(11), RankOverflow);
}

TEST(TLDiagram, CodesRoundTrip) {
  const auto& b = TLBasis::get(5);
  for (TLBasis::Index i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b.diagram(i)), i);
  EXPECT_EQ(TLDiagram::generator(3, 1).to_string(), "t1-t2 t3-b3 b1-b2");
  EXPECT_EQ(TLDiagram(2, {2, 3, 0, 1}), TLDiagram::identity(2));
  EXPECT_THROW(TLDiagram(2, {3, 2, 1, 0}), Error);  // crossing
  EXPECT_THROW(TLDiagram::generator(3, 3), IndexOutOfRange);
}

TEST(TLAlgebra, GeneratorRelations) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto ek = tl_generator(n, k);
      EXPECT_EQ(ek * ek, quantum(2) * ek);
      for (int m = 1; m < n; ++m) {
        const auto em = tl_generator(n, m);
        if (std::abs(k - m) == 1) EXPECT_EQ(ek * em * ek, ek);
        if (std::abs(k - m) >= 2) EXPECT_EQ(ek * em, em * ek);
      }
    }
  }
}

TEST(TLAlgebra, Associativity) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_tl(5, rng, 6);
    const auto b = random_tl(5, rng, 6);
    const auto c = random_tl(5, rng, 6);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(TLAlgebra, NumericMatchesExact) {
  std::mt19937 rng(8);
  const std::complex<double> q = std::polar(0.9, 1.1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_tl(6, rng, 10);
    const auto b = random_tl(6, rng, 10);
    const auto exact = NumericTL::evaluate(a * b, q);
    const auto numeric = NumericTL::evaluate(a, q) * NumericTL::evaluate(b, q);
    EXPECT_LT(relative_error(exact, numeric), 1e-10);
  }
}

TEST(TLAlgebra, JonesWenzl) {
  const auto jw = jones_wenzl(8);
  EXPECT_EQ(restrict_rank(HeckeElement::identity(1), 1), HeckeElement::identity(1));
  EXPECT_EQ(tl_projector(2, 2), TLElement::identity(2) - (RatFunc(1) / quantum(2)) * tl_generator(2, 1));
  for (int n = 1; n <= 8; ++n) {
    const TLElement p = tl_projector(n, n);
    EXPECT_EQ(p * p, p) << "N=" << n;
    for (int k = 1; k < n; ++k) {
      EXPECT_TRUE((tl_generator(n, k) * p).is_zero());
      EXPECT_TRUE((p * tl_generator(n, k)).is_zero());
    }
    EXPECT_EQ(jw[static_cast<std::size_t>(n)], shift_embed(p, 8));
  }
}

TEST(TLAlgebra, QuotientOfHeckeTower) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(quotient_map(projector(n, n)), tl_projector(n, n)) << "N=" << n;
  EXPECT_EQ(quotient_map(generator_T(3, 2)), tl_generator(3, 2));
  // Homomorphism on a product.
  const HeckeElement a = generator_T(4, 1) * generator_T(4, 2) + generator_R(4, 3);
  const HeckeElement b = generator_R(4, 2) * generator_T(4, 3);
  EXPECT_EQ(quotient_map(a * b), quotient_map(a) * quotient_map(b));
}

TEST(TLAlgebra, ShiftAndReflection) {
  EXPECT_EQ(shift_embed(tl_generator(3, 1), 5, 2), tl_generator(5, 3));
  EXPECT_EQ(phi(tl_generator(4, 1)), tl_generator(4, 3));
  EXPECT_EQ(phi(tl_projector(4, 4)), tl_projector(4, 4));
  std::mt19937 rng(1);
  const auto a = random_tl(4, rng, 5);
  const auto b = random_tl(4, rng, 5);
  EXPECT_EQ(phi(a * b), phi(a) * phi(b));
  EXPECT_EQ(shift_embed(a * b, 6, 1), shift_embed(a, 6, 1) * shift_embed(b, 6, 1));
}

TEST(TLAlgebra, OverflowFallsBackToBigIntegers) {
  const RatFunc c{QLaurent(Rational(Integer(1) << 62))};
  const auto e1 = tl_generator(3, 1);
  EXPECT_EQ((c * e1) * (c * e1), (c * c * quantum(2)) * e1);
}

}  // namespace
}  // namespace hecke
