#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/ratfunc.hpp"

namespace hecke {

/// Quantum integer [k] = (q^k - q^-k) / (q - q^-1) = q^(k-1) + q^(k-3) + ... + q^(1-k).
inline QLaurent qint(int k) {
  if (k == 0) return {};
  const int m = k < 0 ? -k : k;
  std::vector<QLaurent::Term> terms;
  terms.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) terms.emplace_back(m - 1 - 2 * j, Rational(k < 0 ? -1 : 1));
  return QLaurent::from_terms(std::move(terms));
}

inline RatFunc quantum(int k) { return RatFunc(qint(k)); }

/// rho_k = [k] / [k+1].
inline RatFunc rho(int k) { return quantum(k) / quantum(k + 1); }

/// q on the unit circle, q = e^{i gamma} with 0 < gamma < pi.
class UnitCircleQ {
 public:
  explicit UnitCircleQ(double gamma) : gamma_(gamma) {
    if (!(gamma > 0.0 && gamma < std::numbers::pi)) throw PreconditionError("gamma must lie in (0, pi)");
  }

  double gamma() const noexcept { return gamma_; }
  std::complex<double> q() const { return std::polar(1.0, gamma_); }

  /// [k] at q = e^{i gamma} is the real number sin(k gamma) / sin(gamma).
  double qint(int k) const { return std::sin(k * gamma_) / std::sin(gamma_); }

 private:
  double gamma_;
};

/// Substitutes q = e^{i gamma} term by term.
inline std::complex<double> eval_unit_circle(const RatFunc& f, double gamma) {
  return f.evaluate(std::polar(1.0, gamma), 1e-12);
}

/// Numeric [k] at an arbitrary nonzero complex q.
inline std::complex<double> qint_value(int k, std::complex<double> q) {
  std::complex<double> sum = 0.0;
  const int m = k < 0 ? -k : k;
  for (int j = 0; j < m; ++j) sum += std::pow(q, m - 1 - 2 * j);
  return k < 0 ? -sum : sum;
}

struct QIntIdentityReport {
  bool ok = true;
  int checked = 0;
  std::string failed_identity;  // empty when ok
  int failed_at = 0;
};

/// Exact checks of the quantum-integer identities used by the certifier:
///   [k-1] + [k+1] = [2][k],   [k-1][k+1] + 1 = [k]^2                 for 1 <= k <= k_max
///   [2][N] - [N-1] = [N+1],   [2] - [N-1]/[N] = [N+1]/[N],
///   [N+1]/[N] - [N+2]/[N+1] = 1/([N][N+1]),
///   [2][N+1] + [N] = [N+2] + 2[N],
///   [2]([2] - rho_{N-1}) + 1 = ([N+2] + 2[N]) / [N]                     for 1 <= N <= k_max
inline QIntIdentityReport qint_identities_check(int k_max) {
  if (k_max < 1) throw PreconditionError("k_max must be at least 1");
  QIntIdentityReport report;
  auto check = [&](bool holds, const char* name, int at) {
    ++report.checked;
    if (!holds && report.ok) {
      report.ok = false;
      report.failed_identity = name;
      report.failed_at = at;
    }
  };
  const QLaurent two = qint(2);
  for (int k = 1; k <= k_max; ++k) {
    check(qint(k - 1) + qint(k + 1) == two * qint(k), "[k-1] + [k+1] = [2][k]", k);
    check(qint(k - 1) * qint(k + 1) + QLaurent(1) == qint(k) * qint(k), "[k-1][k+1] + 1 = [k]^2", k);
  }
  for (int n = 1; n <= k_max; ++n) {
    check(two * qint(n) - qint(n - 1) == qint(n + 1), "[2][N] - [N-1] = [N+1]", n);
    check(quantum(2) - quantum(n - 1) / quantum(n) == quantum(n + 1) / quantum(n), "[2] - [N-1]/[N] = [N+1]/[N]", n);
    check(quantum(n + 1) / quantum(n) - quantum(n + 2) / quantum(n + 1) ==
              RatFunc(1) / (quantum(n) * quantum(n + 1)),
          "[N+1]/[N] - [N+2]/[N+1] = 1/([N][N+1])", n);
    check(two * qint(n + 1) + qint(n) == qint(n + 2) + QLaurent(2) * qint(n), "[2][N+1] + [N] = [N+2] + 2[N]", n);
    check(quantum(2) * (quantum(2) - quantum(n - 1) / quantum(n)) + RatFunc(1) ==
              (quantum(n + 2) + RatFunc(2) * quantum(n)) / quantum(n),
          "[2]([2] - rho_{N-1}) + 1 = ([N+2] + 2[N])/[N]", n);
  }
  return report;
}

}  // namespace hecke
