#include <gtest/gtest.h>

#include <numbers>

#include "hecke/seed_search.hpp"

namespace hecke {
namespace {

constexpr double kPi = std::numbers::pi;

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

HermitianHeckeSeed found_seed() {
  SearchOptions o;
  o.target_rank = 2;
  o.restarts = 4;
  o.seed = 7;
  const auto seeds = search_seeds(2, kPi / 4, o);
  if (seeds.empty()) throw std::runtime_error("search found nothing at pi/4");
  return seeds.front();
}

TEST(CheckTTT, DegenerateAndTrivialAccepted) {
  EXPECT_TRUE(check_ttt(2, 0.7, DenseOperator::Zero(4, 4)).accepted);
  for (const double g : {0.2, 0.7, 1.3}) EXPECT_TRUE(check_ttt(2, g, trivial_seed(2, g).T).accepted);
  EXPECT_THROW(check_ttt(2, 0.7, DenseOperator::Zero(3, 3)), DimensionMismatch);
}

TEST(CheckTTT, RandomHermitianRejected) {
  const DenseOperator a = DenseOperator::Random(4, 4);
  const DenseOperator h = a + a.adjoint();
  const auto r = check_ttt(2, 0.7, h);
  EXPECT_FALSE(r.accepted);
  EXPECT_GT(r.quadratic, 1e-3);
  EXPECT_LT(r.hermitian, 1e-14);
  EXPECT_THROW(make_seed(2, 0.7, h), AnsatzRejected);
}

TEST(StandardSeed, RelationsAndYangBaxter) {
  for (const int n : {2, 3}) {
    const DenseOperator t = standard_R_seed(n, 2.0);
    const auto r = check_ttt_at(n, 2.0, t);
    EXPECT_LT(r.quadratic, 1e-12);
    EXPECT_LT(r.cubic, 1e-12);
    EXPECT_LT(r.hermitian, 1e-12);
    const DenseOperator rr = standard_R_matrix(n, 2.0);
    const DenseOperator r1 = local_operator(rr, n, 3, 1);
    const DenseOperator r2 = local_operator(rr, n, 3, 2);
    EXPECT_LT(max_abs(r1 * r2 * r1 - r2 * r1 * r2), 1e-10);
  }
}

TEST(StandardSeed, NotUnitaryOnTheCircle) {
  const cplx q = std::polar(1.0, kPi / 5);
  const DenseOperator t = standard_R_seed(2, q);
  const auto r = check_ttt_at(2, q, t);
  EXPECT_TRUE(r.algebraic());
  EXPECT_GT(r.hermitian, 1e-3);  // not Hermitian ...
  const DenseOperator rr = standard_R_matrix(2, q);
  EXPECT_GT(max_abs(rr.adjoint() * rr - DenseOperator::Identity(4, 4)), 1e-3);  // ... and not unitary
}

TEST(StandardSeed, ProjectorRanksAreBinomial) {
  for (const int n : {2, 3}) {
    const DenseOperator t = standard_R_seed(n, 2.0);
    for (int big_n = 1; big_n <= 4; ++big_n) {
      const auto p = projector_images(t, n, 2.0, big_n, big_n);
      EXPECT_EQ(numeric_rank(p.back()), binomial(n, big_n)) << "n=" << n << " N=" << big_n;
    }
  }
}

TEST(StandardSeed, DifferenceSpectrum) {
  const DenseOperator t = standard_R_seed(2, 2.0);
  for (int big_n = 2; big_n <= 4; ++big_n) {
    const auto s = spectrum_check(t, 2, 2.0, big_n);
    EXPECT_LT(s.max_distance, 1e-7) << big_n;
    EXPECT_GT(s.allowed, 0.0);
  }
}

TEST(Tau, ConsistentWithExactAlgebra) {
  for (const int n : {2, 3}) {
    const DenseOperator t = standard_R_seed(n, 2.0);
    const auto r = tau_consistency(t, n, 2.0, 3, 11);
    EXPECT_LT(r.identity_residual, 1e-12);
    EXPECT_LT(r.homomorphism_residual, 1e-10);
    EXPECT_LT(r.projector_residual, 1e-10);
  }
  const auto s = found_seed();
  const auto r = tau_consistency(s.T, s.n, s.q(), 3, 5);
  EXPECT_LT(r.homomorphism_residual, 1e-8);
  EXPECT_LT(r.projector_residual, 1e-8);
  EXPECT_LT(r.unitarity_residual, 1e-8);  // Hermitian T gives unitary R on the circle
}

TEST(Projectors, TrivialSeedKillsP2) {
  const auto s = trivial_seed(2, 0.6);
  const auto p = projector_images(s, 3);
  EXPECT_LT(max_abs(p[1]), 1e-12);
  EXPECT_LT(max_abs(p[2]), 1e-12);
}

TEST(Projectors, PoleIsReported) {
  const auto s = trivial_seed(2, kPi / 3);
  EXPECT_THROW(projector_images(s.T, 2, s.q(), 4, 4), RhoPole);  // [3] = 0
}

TEST(Projectors, HermitianIdempotentAnnihilatingForFoundSeed) {
  const auto s = found_seed();
  const auto p = projector_images(s, 3);
  for (std::size_t k = 0; k < p.size(); ++k) {
    EXPECT_LT(hermitian_residual(p[k]), 1e-9);
    EXPECT_LT(max_abs(p[k] * p[k] - p[k]), 1e-8);
  }
  const auto p2 = projector_images(s.T, 2, s.q(), 2, 4);
  EXPECT_LT(max_abs(local_operator(s.T, 2, 4, 1) * p2.back()), 1e-8);
  const DenseOperator t1 = local_operator(s.T, 2, 4, 1);
  const DenseOperator t3 = local_operator(s.T, 2, 4, 3);
  EXPECT_LT(max_abs(t1 * t3 - t3 * t1), 1e-10);
}

TEST(RankOne, DegenerateLocalDimensionIsTrivial) {
  const auto s = rank_one_family(1, 0.8, {1.0}, {0.3});
  EXPECT_LT(max_abs(s.T - trivial_seed(1, 0.8).T), 1e-14);
  EXPECT_THROW(rank_one_family(2, 0.8, {0.5, 0.6}, {0, 0}), PreconditionError);
  EXPECT_THROW(rank_one_family(2, 1.7, {0.5, 0.5}, {0, 0}), PreconditionError);
}

TEST(RankOne, ScanRecordsOutcomesAndAcceptedPointsSatisfyTL) {
  const auto pts = scan_rank_one(2, kPi / 4, 9);
  EXPECT_EQ(pts.size(), 81u);
  for (const auto& p : pts) {
    if (!p.report.accepted) continue;
    const DenseOperator e = rank_one_operator(2, kPi / 4, p.weights, p.phases);
    const DenseOperator e1 = local_operator(e, 2, 3, 1);
    const DenseOperator e2 = local_operator(e, 2, 3, 2);
    EXPECT_LT(max_abs(e1 * e2 * e1 - e1), 1e-8);
  }
}

TEST(TopProjectorVanishing, TrivialSeedAndFoundSeed) {
  for (int big_n = 2; big_n <= 5; ++big_n) {
    const double g = 0.5 * (kPi / (big_n + 1) + kPi / big_n);
    if (g >= kPi / 2) continue;
    const auto r = verify_prop3(trivial_seed(2, g), big_n);
    EXPECT_LT(r.norm_pn, 1e-12);
  }
  const auto r = verify_prop3(found_seed(), 3);
  EXPECT_LE(r.scalar_factor, 1e-12);
  EXPECT_GE(r.min_eig_square, -1e-10);
  EXPECT_LT(r.quartic_residual, 1e-8);
}

TEST(TopProjectorVanishing, ScalarFactorNegativeInsideWindow) {
  const UnitCircleQ q(kPi / 3.5);
  EXPECT_LT(q.qint(2) * q.qint(4) / (q.qint(3) * q.qint(3)), 0.0);
}

TEST(TopProjectorVanishing, Preconditions) {
  EXPECT_THROW(verify_prop3(trivial_seed(2, 0.3), 3), PreconditionError);  // outside window
  HermitianHeckeSeed zero{2, kPi / 3.5, DenseOperator::Zero(4, 4), SeedProvenance::User};
  EXPECT_THROW(verify_prop3(zero, 3), PreconditionError);
}

TEST(LowerProjectorVanishing, DefinitenessMechanism) {
  for (int big_n = 3; big_n <= 5; ++big_n) {
    const double a = kPi / (big_n + 1);
    const double b = kPi / big_n;
    const double g = a + 0.95 * (b - a);
    ASSERT_TRUE(in_prop4_window(big_n, g));
    const auto r = verify_prop4(trivial_seed(2, g), big_n);
    EXPECT_LT(r.norm_pn_minus_1, 1e-12);
    EXPECT_LT(r.identity_residual, 1e-8);
  }
  EXPECT_THROW(verify_prop4(trivial_seed(2, kPi / 4 + 1e-3), 3), PreconditionError);  // sum still positive
  EXPECT_THROW(verify_prop4(trivial_seed(2, 0.9), 2), PreconditionError);
}

TEST(Scalars, EndpointsAndGammaZero) {
  for (int big_n = 3; big_n <= 8; ++big_n) {
    EXPECT_NEAR(tpt_window_sum(big_n, kPi / (big_n + 1)), 1.0, 1e-10);
    EXPECT_NEAR(tpt_window_sum(big_n, kPi / big_n), -2 * std::cos(kPi / big_n), 1e-10);
  }
  const double g0 = gamma0_root();
  EXPECT_NEAR(std::cos(g0) * std::cos(g0), (1 + std::sqrt(5.0)) / 8, 1e-12);
  EXPECT_NEAR(f_gamma(g0), 0.0, 1e-10);
  EXPECT_GT(g0, kPi / 4);
  EXPECT_LT(g0, kPi / 3);
  EXPECT_NEAR(g0, 0.8815, 1e-4);
  EXPECT_LT(f_gamma(kPi / 3), 0.0);
}

TEST(Scan, SingleSignChangeForThree) {
  const auto s = scan_gamma(3, 10000);
  ASSERT_EQ(s.sign_changes, 1);
  EXPECT_NEAR(s.change_points.front(), gamma0_root(), 1e-4);
  EXPECT_NEAR(s.rows.front().value, 1.0, 1e-10);
  EXPECT_NEAR(s.rows.back().value, -2 * std::cos(kPi / 3), 1e-10);
  EXPECT_TRUE(s.rows.front().prop3);
  EXPECT_FALSE(s.rows.back().prop3);
  EXPECT_EQ(s.csv().substr(0, s.csv().find('\n')), "gamma,qint_Np2_plus_2N,in_prop3_window,in_prop4_window,sign");
  for (int big_n = 3; big_n <= 8; ++big_n) {
    const auto t = scan_gamma(big_n, 200);
    bool any = false;
    for (const auto& r : t.rows) any = any || r.prop4;
    EXPECT_TRUE(any) << big_n;
  }
  EXPECT_THROW(scan_gamma(3, 1), PreconditionError);
  EXPECT_THROW(scan_gamma(1, 10), PreconditionError);
}

TEST(Seeds, JsonRoundTrip) {
  const auto s = found_seed();
  const auto j = seed_to_json(s);
  EXPECT_EQ(j["provenance"], "search");
  const auto back = seed_from_json(j);
  EXPECT_LT(max_abs(back.T - s.T), 1e-15);
  EXPECT_EQ(back.provenance, SeedProvenance::Search);
  auto bad = j;
  bad["T_re"][0][0] = 5.0;
  EXPECT_THROW(seed_from_json(bad), AnsatzRejected);
}

TEST(Limits, DimensionCap) {
  EXPECT_EQ(tensor_dim(2, 12), 4096);
  EXPECT_THROW(tensor_dim(2, 13), RankOverflow);
  EXPECT_THROW(tensor_dim(3, 8), RankOverflow);
}

}  // namespace
}  // namespace hecke
