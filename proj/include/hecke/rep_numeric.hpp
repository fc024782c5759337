#pragma once

// Matrix representations tau: H_N(q) -> Mat(n^N) built from one n^2 x n^2
// matrix T acting on neighbouring tensor factors.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/numeric_hecke.hpp"
#include "hecke/projector.hpp"
#include "hecke/qint.hpp"

namespace hecke {

/// Largest tensor-space dimension n^N handled by the dense routines.
inline constexpr long kMaxTensorDim = 4096;

/// Acceptance threshold for the defining-relation residuals.
inline constexpr double kTTTTolerance = 1e-10;

enum class SeedProvenance { Trivial, RankOneFamily, Search, User };

inline std::string to_string(SeedProvenance p) {
  switch (p) {
    case SeedProvenance::Trivial: return "trivial";
    case SeedProvenance::RankOneFamily: return "rank_one_family";
    case SeedProvenance::Search: return "search";
    case SeedProvenance::User: return "user";
  }
  return "user";
}

inline SeedProvenance provenance_from_string(const std::string& s) {
  if (s == "trivial") return SeedProvenance::Trivial;
  if (s == "rank_one_family") return SeedProvenance::RankOneFamily;
  if (s == "search") return SeedProvenance::Search;
  if (s == "user") return SeedProvenance::User;
  throw PreconditionError("unknown seed provenance '" + s + "'");
}

/// Hermitian T at q = e^{i gamma}; validated by check_ttt when constructed
/// through the factory functions below.
struct HermitianHeckeSeed {
  int n = 0;
  double gamma = 0;
  DenseOperator T;
  SeedProvenance provenance = SeedProvenance::User;

  cplx q() const { return std::polar(1.0, gamma); }
};

// ---------------------------------------------------------------- basics

inline long tensor_dim(int n, int sites) {
  if (n < 1 || sites < 1) throw PreconditionError("local dimension and site count must be positive");
  long d = 1;
  for (int i = 0; i < sites; ++i) {
    d *= n;
    if (d > kMaxTensorDim) {
      throw RankOverflow("n^N = " + std::to_string(n) + "^" + std::to_string(sites) + " exceeds the cap " +
                         std::to_string(kMaxTensorDim));
    }
  }
  return d;
}

inline void require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < std::numbers::pi / 2)) throw PreconditionError("gamma must lie in (0, pi/2)");
}

inline double max_abs(const DenseOperator& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

inline double hermitian_residual(const DenseOperator& a) { return max_abs(a - a.adjoint()); }

/// Eigenvalues of the Hermitian part (a + a^*)/2, ascending.
inline Eigen::VectorXd hermitian_eigenvalues(const DenseOperator& a) {
  const DenseOperator h = (a + a.adjoint()) / 2.0;
  return Eigen::SelfAdjointEigenSolver<DenseOperator>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

/// Smallest eigenvalue divided by max(1, spectral radius), so semidefiniteness
/// tests are insensitive to the overall scale.
inline double scaled_min_eigenvalue(const DenseOperator& a) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(a);
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  return ev.minCoeff() / scale;
}

inline double scaled_max_eigenvalue(const DenseOperator& a) { return -scaled_min_eigenvalue(-a); }

/// I^{(k-1)} (x) T (x) I^{(sites-k-1)}; T acts on factors k, k+1 (1-based).
inline DenseOperator local_operator(const DenseOperator& t, int n, int sites, int k) {
  if (t.rows() != static_cast<long>(n) * n || t.cols() != t.rows()) {
    throw DimensionMismatch("local operator must be n^2 x n^2");
  }
  if (k < 1 || k >= sites) throw IndexOutOfRange("site index out of range");
  const long left = tensor_dim(n, k) / n;
  const long right = tensor_dim(n, sites) / (left * n * n);
  const DenseOperator il = DenseOperator::Identity(left, left);
  const DenseOperator ir = DenseOperator::Identity(right, right);
  return Eigen::kroneckerProduct(Eigen::kroneckerProduct(il, t).eval(), ir).eval();
}

// ---------------------------------------------------------------- relation checks

struct TTTReport {
  double hermitian = 0;  // max |T - T^*|
  double quadratic = 0;  // max |T^2 - [2] T|
  double cubic = 0;      // max |T1 T2 T1 - T2 T1 T2 - T1 + T2|
  bool accepted = false;

  bool algebraic() const { return quadratic <= kTTTTolerance && cubic <= kTTTTolerance; }
};

/// Residuals of the defining relations at arbitrary nonzero q.
inline TTTReport check_ttt_at(int n, cplx q, const DenseOperator& t) {
  if (n < 1 || t.rows() != static_cast<long>(n) * n || t.cols() != t.rows()) {
    throw DimensionMismatch("T must be n^2 x n^2 with n = " + std::to_string(n));
  }
  const cplx two = q + 1.0 / q;
  TTTReport r;
  r.hermitian = hermitian_residual(t);
  r.quadratic = max_abs(t * t - two * t);
  const DenseOperator t1 = local_operator(t, n, 3, 1);
  const DenseOperator t2 = local_operator(t, n, 3, 2);
  r.cubic = max_abs(t1 * t2 * t1 - t2 * t1 * t2 - t1 + t2);
  r.accepted = r.hermitian <= kTTTTolerance && r.algebraic();
  return r;
}

/// Checks Hermiticity and both relations at q = e^{i gamma}.
inline TTTReport check_ttt(int n, double gamma, const DenseOperator& t) {
  return check_ttt_at(n, std::polar(1.0, gamma), t);
}

inline std::string describe(const TTTReport& r) {
  std::ostringstream os;
  os << "hermitian=" << r.hermitian << " quadratic=" << r.quadratic << " cubic=" << r.cubic;
  return os.str();
}

// ---------------------------------------------------------------- seeds

/// Standard type-A matrix R-hat: q on e_i(x)e_i; on span{e_i e_j, e_j e_i}, i < j,
/// e_i e_j -> e_j e_i and e_j e_i -> e_i e_j + (q - q^-1) e_j e_i.
inline DenseOperator standard_R_matrix(int n, cplx q) {
  const long d = static_cast<long>(n) * n;
  DenseOperator r = DenseOperator::Zero(d, d);
  auto idx = [n](int i, int j) { return static_cast<long>(i) * n + j; };
  for (int i = 0; i < n; ++i) {
    r(idx(i, i), idx(i, i)) = q;
    for (int j = i + 1; j < n; ++j) {
      r(idx(j, i), idx(i, j)) = 1.0;
      r(idx(i, j), idx(j, i)) = 1.0;
      r(idx(j, i), idx(j, i)) = q - 1.0 / q;
    }
  }
  return r;
}

/// T = q^-1 I + R-hat. Satisfies both relations at any q; Hermitian only for real q.
inline DenseOperator standard_R_seed(int n, cplx q) {
  const long d = static_cast<long>(n) * n;
  return DenseOperator::Identity(d, d) / q + standard_R_matrix(n, q);
}

/// T = [2] (I (x) I), accepted at every gamma.
inline HermitianHeckeSeed trivial_seed(int n, double gamma) {
  require_gamma(gamma);
  const long d = static_cast<long>(n) * n;
  return {n, gamma, 2.0 * std::cos(gamma) * DenseOperator::Identity(d, d), SeedProvenance::Trivial};
}

/// Validates a user-supplied T; throws AnsatzRejected when check_ttt fails.
inline HermitianHeckeSeed make_seed(int n, double gamma, DenseOperator t, SeedProvenance p = SeedProvenance::User) {
  require_gamma(gamma);
  const TTTReport r = check_ttt(n, gamma, t);
  if (!r.accepted) throw AnsatzRejected("T rejected: " + describe(r));
  return {n, gamma, std::move(t), p};
}

/// [2] |w><w| with w = sum_i sqrt(weights_i) e^{i phases_i} e_i (x) e_{n+1-i}, unvalidated.
inline DenseOperator rank_one_operator(int n, double gamma, const std::vector<double>& weights,
                                       const std::vector<double>& phases) {
  if (static_cast<int>(weights.size()) != n || static_cast<int>(phases.size()) != n) {
    throw DimensionMismatch("weights and phases need n entries");
  }
  double total = 0;
  for (const double w : weights) {
    if (w < 0) throw PreconditionError("weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw PreconditionError("weights must sum to 1");
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(static_cast<long>(n) * n);
  for (int i = 0; i < n; ++i) {
    w(static_cast<long>(i) * n + (n - 1 - i)) = std::sqrt(weights[static_cast<std::size_t>(i)]) *
                                                 std::polar(1.0, phases[static_cast<std::size_t>(i)]);
  }
  return 2.0 * std::cos(gamma) * (w * w.adjoint());
}

/// Validated rank-one seed; AnsatzRejected carries the residuals otherwise.
inline HermitianHeckeSeed rank_one_family(int n, double gamma, const std::vector<double>& weights,
                                          const std::vector<double>& phases) {
  require_gamma(gamma);
  return make_seed(n, gamma, rank_one_operator(n, gamma, weights, phases), SeedProvenance::RankOneFamily);
}

// ---------------------------------------------------------------- projectors

/// Images of P_1..P_N on `sites` >= N factors via the T-form recursion,
/// shifted right by `shift` factors. Entry k-1 holds P_k.
inline std::vector<DenseOperator> projector_images(const DenseOperator& t, int n, cplx q, int big_n, int sites,
                                                   int shift = 0) {
  if (big_n < 1) throw PreconditionError("N must be at least 1");
  if (sites < big_n + shift) throw PreconditionError("not enough tensor factors for the requested projectors");
  const long d = tensor_dim(n, sites);
  std::vector<DenseOperator> out;
  out.push_back(DenseOperator::Identity(d, d));
  for (int k = 1; k < big_n; ++k) {
    const cplx next = qint_value(k + 1, q);
    if (std::abs(next) < 1e-10) throw RhoPole("[" + std::to_string(k + 1) + "] vanishes; rho_" + std::to_string(k) + " is undefined");
    const cplx rho_k = qint_value(k, q) / next;
    const DenseOperator& p = out.back();
    const DenseOperator tk = local_operator(t, n, sites, k + shift);
    out.push_back(p - rho_k * (p * tk * p));
  }
  return out;
}

/// P_1..P_N on exactly N factors for a validated seed.
inline std::vector<DenseOperator> projector_images(const HermitianHeckeSeed& seed, int big_n) {
  return projector_images(seed.T, seed.n, seed.q(), big_n, big_n);
}

/// Eigenvalues of P_N - P'_N on N+1 factors.
inline Eigen::VectorXd difference_spectrum(const DenseOperator& t, int n, cplx q, int big_n) {
  const auto p = projector_images(t, n, q, big_n, big_n + 1);
  const auto pp = projector_images(t, n, q, big_n, big_n + 1, 1);
  const DenseOperator x = p.back() - pp.back();
  return hermitian_eigenvalues(x);
}

/// Largest distance from an eigenvalue of P_N - P'_N to {0, +-sqrt([N-1][N+1])/[N]}
/// (only 0 when the radicand is negative). Requires a real q so the operator is Hermitian.
struct SpectrumReport {
  Eigen::VectorXd eigenvalues;
  double allowed = 0;  // sqrt([N-1][N+1])/[N], or 0 when the radicand is negative
  double max_distance = 0;
};

inline SpectrumReport spectrum_check(const DenseOperator& t, int n, cplx q, int big_n) {
  SpectrumReport r;
  r.eigenvalues = difference_spectrum(t, n, q, big_n);
  const double radicand = (qint_value(big_n - 1, q) * qint_value(big_n + 1, q)).real();
  const double qn = qint_value(big_n, q).real();
  r.allowed = radicand >= 0 ? std::sqrt(radicand) / std::abs(qn) : 0.0;
  for (long i = 0; i < r.eigenvalues.size(); ++i) {
    const double e = r.eigenvalues(i);
    r.max_distance = std::max(r.max_distance, std::min({std::abs(e), std::abs(e - r.allowed), std::abs(e + r.allowed)}));
  }
  return r;
}

/// Numerical rank from singular values relative to max(1, largest).
inline long numeric_rank(const DenseOperator& a, double tol = 1e-9) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<DenseOperator>(a).singularValues();
  if (s.size() == 0) return 0;
  const double cut = tol * std::max(1.0, s(0));
  return static_cast<long>((s.array() > cut).count());
}

// ---------------------------------------------------------------- scalar side

/// [N+2] + 2[N] at q = e^{i gamma}.
inline double tpt_window_sum(int big_n, double gamma) {
  const UnitCircleQ q(gamma);
  return q.qint(big_n + 2) + 2 * q.qint(big_n);
}

/// sin 5g + 2 sin 3g, which is sin(g) ([5] + 2[3]).
inline double f_gamma(double gamma) { return std::sin(5 * gamma) + 2 * std::sin(3 * gamma); }

/// Root of 16 c^4 - 4 c^2 - 1 (c = cos gamma) on (pi/4, pi/3), by bisection.
inline double gamma0_root() {
  auto g = [](double x) {
    const double c2 = std::cos(x) * std::cos(x);
    return 16 * c2 * c2 - 4 * c2 - 1;
  };
  double lo = std::numbers::pi / 4;
  double hi = std::numbers::pi / 3;
  double glo = g(lo);
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline bool in_prop3_window(int big_n, double gamma) {
  return gamma >= std::numbers::pi / (big_n + 1) - 1e-12 && gamma < std::numbers::pi / big_n;
}

inline bool in_prop4_window(int big_n, double gamma) {
  return big_n >= 3 && gamma > std::numbers::pi / (big_n + 1) && gamma < std::numbers::pi / big_n &&
         tpt_window_sum(big_n, gamma) < 0;
}

struct ScanRow {
  double gamma;
  double value;  // [N+2] + 2[N]
  bool prop3;
  bool prop4;
  int sign;
};

struct GammaScan {
  int n = 0;
  std::vector<ScanRow> rows;
  int sign_changes = 0;
  std::vector<double> change_points;  // midpoints of the bracketing samples

  std::string csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "gamma,qint_Np2_plus_2N,in_prop3_window,in_prop4_window,sign\n";
    for (const auto& r : rows) os << r.gamma << ',' << r.value << ',' << r.prop3 << ',' << r.prop4 << ',' << r.sign << '\n';
    return os.str();
  }
};

/// Samples [N+2] + 2[N] at `steps` equally spaced points of [pi/(N+1), pi/N],
/// endpoints included.
inline GammaScan scan_gamma(int big_n, int steps) {
  if (steps < 2) throw PreconditionError("scan needs at least 2 steps");
  if (big_n < 2) throw PreconditionError("the window (pi/(N+1), pi/N) lies inside (0, pi/2) only for N >= 2");
  const double a = std::numbers::pi / (big_n + 1);
  const double b = std::numbers::pi / big_n;
  GammaScan scan;
  scan.n = big_n;
  scan.rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double g = i == steps - 1 ? b : a + (b - a) * i / (steps - 1);
    const double v = tpt_window_sum(big_n, g);
    scan.rows.push_back({g, v, in_prop3_window(big_n, g), in_prop4_window(big_n, g), (v > 0) - (v < 0)});
  }
  int last = 0;
  double last_gamma = a;
  for (const auto& r : scan.rows) {
    if (r.sign != 0 && last != 0 && r.sign != last) {
      ++scan.sign_changes;
      scan.change_points.push_back(0.5 * (r.gamma + last_gamma));
    }
    if (r.sign != 0) {
      last = r.sign;
      last_gamma = r.gamma;
    }
  }
  return scan;
}

// ---------------------------------------------------------------- propositions

struct Prop3Report {
  int n = 0;
  double gamma = 0;
  double norm_pn = 0;             // max |P_N|
  double min_eig_square = 0;      // scaled, (P_N - P'_N)^2
  double min_eig_fourth = 0;      // scaled, (P_N - P'_N)^4
  double quartic_residual = 0;    // |X^4 - c X^2|
  double scalar_factor = 0;       // c = [N-1][N+1]/[N]^2
  bool holds = false;
};

namespace detail {

inline std::string seed_dump(const HermitianHeckeSeed& s) {
  std::ostringstream os;
  os.precision(17);
  os << "seed n=" << s.n << " gamma=" << s.gamma << " provenance=" << to_string(s.provenance) << " T=\n" << s.T;
  return os.str();
}

inline void require_nontrivial_seed(const HermitianHeckeSeed& seed) {
  require_gamma(seed.gamma);
  const TTTReport r = check_ttt(seed.n, seed.gamma, seed.T);
  if (!r.accepted) throw PreconditionError("seed fails check_ttt: " + describe(r));
  if (max_abs(seed.T) <= 1e-12) throw PreconditionError("the propositions assume T != 0");
}

}  // namespace detail

/// Checks the vanishing of P_N in the closed-left window and the positivity
/// argument behind it. Throws PropositionViolated on any failed check.
inline Prop3Report verify_prop3(const HermitianHeckeSeed& seed, int big_n) {
  if (big_n < 2) throw PreconditionError("N must be at least 2");
  detail::require_nontrivial_seed(seed);
  if (!in_prop3_window(big_n, seed.gamma)) throw PreconditionError("gamma outside [pi/(N+1), pi/N)");
  const cplx q = seed.q();
  const int sites = big_n + 1;
  const auto p = projector_images(seed.T, seed.n, q, big_n, sites);
  const auto pp = projector_images(seed.T, seed.n, q, big_n, sites, 1);
  const DenseOperator x = p.back() - pp.back();
  const DenseOperator x2 = x * x;
  const DenseOperator x4 = x2 * x2;
  const UnitCircleQ uq(seed.gamma);

  Prop3Report r;
  r.n = big_n;
  r.gamma = seed.gamma;
  r.norm_pn = max_abs(projector_images(seed.T, seed.n, q, big_n, big_n).back());
  r.min_eig_square = scaled_min_eigenvalue(x2);
  r.min_eig_fourth = scaled_min_eigenvalue(x4);
  r.scalar_factor = uq.qint(big_n - 1) * uq.qint(big_n + 1) / (uq.qint(big_n) * uq.qint(big_n));
  r.quartic_residual = max_abs(x4 - r.scalar_factor * x2);
  r.holds = r.norm_pn <= 1e-8 && r.min_eig_square >= -1e-10 && r.min_eig_fourth >= -1e-10 &&
            r.quartic_residual <= 1e-8 && r.scalar_factor <= 1e-12;
  if (!r.holds) {
    std::ostringstream os;
    os << "N=" << big_n << " |P_N|=" << r.norm_pn << " min eig X^2=" << r.min_eig_square
       << " quartic residual=" << r.quartic_residual << " factor=" << r.scalar_factor << "\n" << detail::seed_dump(seed);
    throw PropositionViolated(os.str());
  }
  return r;
}

struct Prop4Report {
  int n = 0;
  double gamma = 0;
  double window_sum = 0;        // [N+2] + 2[N]
  double norm_pn_minus_1 = 0;   // max |P_{N-1}|
  double lhs_max_eig = 0;       // scaled, should be <= 0
  double rhs_min_eig = 0;       // scaled, should be >= 0
  double identity_residual = 0; // |LHS - RHS|
  bool holds = false;
};

/// Checks the vanishing of P_{N-1} where [N+2] + 2[N] < 0 and the
/// definiteness argument on N+1 factors.
inline Prop4Report verify_prop4(const HermitianHeckeSeed& seed, int big_n) {
  if (big_n < 3) throw PreconditionError("N must be at least 3");
  detail::require_nontrivial_seed(seed);
  if (!(seed.gamma > std::numbers::pi / (big_n + 1) && seed.gamma < std::numbers::pi / big_n)) {
    throw PreconditionError("gamma outside (pi/(N+1), pi/N)");
  }
  Prop4Report r;
  r.n = big_n;
  r.gamma = seed.gamma;
  r.window_sum = tpt_window_sum(big_n, seed.gamma);
  if (!(r.window_sum < 0)) throw PreconditionError("[N+2] + 2[N] is not negative at this gamma");

  const cplx q = seed.q();
  const int sites = big_n + 1;
  const UnitCircleQ uq(seed.gamma);
  const auto p = projector_images(seed.T, seed.n, q, big_n - 1, sites);
  const DenseOperator& pm = p.back();
  const DenseOperator tn = local_operator(seed.T, seed.n, sites, big_n);
  const DenseOperator tm = local_operator(seed.T, seed.n, sites, big_n - 1);
  const DenseOperator lhs = (uq.qint(2) * r.window_sum) * (tn * pm);
  const DenseOperator rhs = uq.qint(big_n - 1) * (pm * tn * tm * tn * tm * tn * pm);
  r.norm_pn_minus_1 = max_abs(projector_images(seed.T, seed.n, q, big_n - 1, big_n - 1).back());
  r.lhs_max_eig = scaled_max_eigenvalue(lhs);
  r.rhs_min_eig = scaled_min_eigenvalue(rhs);
  r.identity_residual = max_abs(lhs - rhs);
  r.holds = r.norm_pn_minus_1 <= 1e-8 && r.lhs_max_eig <= 1e-8 && r.rhs_min_eig >= -1e-8 && r.identity_residual <= 1e-8;
  if (!r.holds) {
    std::ostringstream os;
    os << "N=" << big_n << " |P_{N-1}|=" << r.norm_pn_minus_1 << " lhs max eig=" << r.lhs_max_eig
       << " rhs min eig=" << r.rhs_min_eig << " residual=" << r.identity_residual << "\n" << detail::seed_dump(seed);
    throw PropositionViolated(os.str());
  }
  return r;
}

// ---------------------------------------------------------------- tau

/// tau(a) on `sites` factors: coefficients evaluated at q, basis words mapped
/// to products of tau(R_k) = T_k - q^-1.
inline DenseOperator tau(const HeckeElement& a, const DenseOperator& t, int n, cplx q, int sites) {
  if (a.rank() > sites) throw RankMismatch("element rank exceeds the number of tensor factors");
  const long d = tensor_dim(n, sites);
  std::vector<DenseOperator> r;
  for (int k = 1; k < sites; ++k) r.push_back(local_operator(t, n, sites, k) - DenseOperator::Identity(d, d) / q);
  const auto& g = SymmetricGroup::get(a.rank());
  DenseOperator out = DenseOperator::Zero(d, d);
  for (const auto& [w, c] : a.terms()) {
    DenseOperator m = c.evaluate(q) * DenseOperator::Identity(d, d);
    for (const int letter : g.word(g.index_of(w))) m = m * r[static_cast<std::size_t>(letter - 1)];
    out += m;
  }
  return out;
}

struct TauReport {
  double identity_residual = 0;
  double homomorphism_residual = 0;  // max over random pairs, relative
  double projector_residual = 0;     // tau(exact P_N) vs the recursion
  double unitarity_residual = 0;     // |R^* R - I| for R = T - q^-1; meaningful for Hermitian T with |q| = 1
};

/// Cross-checks tau against the exact algebra: tau(1), tau(ab) = tau(a) tau(b)
/// on seeded random pairs, and tau of the exact P_N against the numeric recursion.
inline TauReport tau_consistency(const DenseOperator& t, int n, cplx q, int big_n, std::uint64_t seed = 1,
                                 int pairs = 4) {
  if (big_n < 1 || big_n > kMaxRank) throw PreconditionError("N out of range");
  TauReport rep;
  const long d = tensor_dim(n, big_n);
  rep.identity_residual = max_abs(tau(HeckeElement::identity(big_n), t, n, q, big_n) - DenseOperator::Identity(d, d));

  std::mt19937_64 rng(seed);
  const auto& g = SymmetricGroup::get(big_n);
  std::uniform_int_distribution<SymmetricGroup::Index> pick(0, g.order() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto random_element = [&] {
    HeckeElement a(big_n);
    for (int i = 0; i < 4; ++i) {
      a += HeckeElement::basis(g.element(pick(rng)), RatFunc(QLaurent::monomial(Rational(coef(rng)), coef(rng)) +
                                                             QLaurent(Rational(coef(rng)))));
    }
    return a;
  };
  for (int i = 0; i < pairs; ++i) {
    const HeckeElement a = random_element();
    const HeckeElement b = random_element();
    const DenseOperator lhs = tau(a * b, t, n, q, big_n);
    const DenseOperator rhs = tau(a, t, n, q, big_n) * tau(b, t, n, q, big_n);
    rep.homomorphism_residual =
        std::max(rep.homomorphism_residual, max_abs(lhs - rhs) / std::max({1.0, max_abs(lhs), max_abs(rhs)}));
  }
  rep.projector_residual =
      max_abs(tau(projector(big_n, big_n), t, n, q, big_n) - projector_images(t, n, q, big_n, big_n).back());
  const long d2 = static_cast<long>(n) * n;
  const DenseOperator r = t - DenseOperator::Identity(d2, d2) / q;
  rep.unitarity_residual = max_abs(r.adjoint() * r - DenseOperator::Identity(d2, d2));
  return rep;
}

// ---------------------------------------------------------------- seed I/O

inline nlohmann::json seed_to_json(const HermitianHeckeSeed& s) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (long i = 0; i < s.T.rows(); ++i) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ri = nlohmann::json::array();
    for (long j = 0; j < s.T.cols(); ++j) {
      rr.push_back(s.T(i, j).real());
      ri.push_back(s.T(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return {{"n", s.n}, {"gamma", s.gamma}, {"T_re", re}, {"T_im", im}, {"provenance", to_string(s.provenance)}};
}

/// Parses and re-validates a seed; rejected matrices raise AnsatzRejected.
inline HermitianHeckeSeed seed_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const double gamma = j.at("gamma").get<double>();
  const auto& re = j.at("T_re");
  const auto& im = j.at("T_im");
  const long d = static_cast<long>(n) * n;
  if (static_cast<long>(re.size()) != d || static_cast<long>(im.size()) != d) throw DimensionMismatch("seed matrix must be n^2 x n^2");
  DenseOperator t(d, d);
  for (long i = 0; i < d; ++i) {
    if (static_cast<long>(re[static_cast<std::size_t>(i)].size()) != d || static_cast<long>(im[static_cast<std::size_t>(i)].size()) != d) {
      throw DimensionMismatch("seed matrix must be n^2 x n^2");
    }
    for (long k = 0; k < d; ++k) {
      t(i, k) = cplx(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<double>(),
                     im[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<double>());
    }
  }
  const SeedProvenance p = j.contains("provenance") ? provenance_from_string(j.at("provenance").get<std::string>())
                                                    : SeedProvenance::User;
  return make_seed(n, gamma, std::move(t), p);
}

}  // namespace hecke
