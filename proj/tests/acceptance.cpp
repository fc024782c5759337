// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/certify.hpp"
#include "hecke/rep_numeric.hpp"
#include "hecke/seed_search.hpp"

namespace {

using namespace hecke;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

int failures = 0;
std::vector<RelationCertificate> all_certs;

void report(const std::string& id, bool ok, const std::string& detail) {
  failures += !ok;
  std::cout << (ok ? "PASS " : "FAIL ") << std::left << std::setw(6) << id << detail << std::endl;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Batch {
  int proved = 0;
  int total = 0;
  double seconds = 0;
  std::string first_failure;
};

Batch run_batch(const std::vector<CertifyRequest>& reqs, const CertifyOptions& opt = {}) {
  Batch b;
  const auto t0 = Clock::now();
  for (const auto& r : reqs) {
    const auto c = certify(r.id, r.n, opt);
    ++b.total;
    if (c.proved && c.residual_terms == 0) {
      ++b.proved;
    } else if (b.first_failure.empty()) {
      b.first_failure = r.id + " N=" + std::to_string(r.n);
    }
    all_certs.push_back(c);
  }
  b.seconds = seconds_since(t0);
  return b;
}

std::string describe(const Batch& b) {
  std::ostringstream os;
  os << b.proved << "/" << b.total << " proved in " << std::fixed << std::setprecision(1) << b.seconds << " s";
  if (!b.first_failure.empty()) os << "; first failure " << b.first_failure;
  return os.str();
}

void exact_criteria() {
  {
    CertifyOptions opt;
    opt.host_rank = 6;
    std::vector<CertifyRequest> reqs;
    for (int n = 1; n <= 6; ++n) reqs.push_back({"idem", n});
    for (int n = 2; n <= 6; ++n) reqs.push_back({"annih", n});
    const auto b = run_batch(reqs, opt);
    report("1.1", b.proved == b.total && b.seconds < 60,
           "idempotency and annihilation, N <= 6 in H_6: " + describe(b));
  }
  {
    std::vector<CertifyRequest> low;
    std::vector<CertifyRequest> top;
    for (const char* id : {"delPP", "pttp1", "pttp2", "pttp3"}) {
      for (int n = 1; n <= 4; ++n) low.push_back({id, n});
      top.push_back({id, 5});
    }
    const auto a = run_batch(low);
    const auto b = run_batch(top);
    report("1.2", a.proved == a.total && b.proved == b.total && a.seconds < 60 && b.seconds < 1800,
           "shifted-projector relations delPP and pttp1-3, N = 1..5 in H_{N+2}: N<=4 " + describe(a) + "; N=5 " + describe(b));
  }
  {
    std::vector<CertifyRequest> low;
    for (int n = 1; n <= 4; ++n) low.push_back({"ppp1", n});
    const auto a = run_batch(low);
    const auto b = run_batch({{"ppp1", 5}});
    report("1.3", a.proved == a.total && b.proved == b.total && a.seconds < 60 && b.seconds < 1800,
           "cubic relation, N = 1..5 in H_{N+2}: N<=4 " + describe(a) + "; N=5 " + describe(b));
  }
  {
    std::vector<CertifyRequest> reqs;
    for (const char* id : {"tpt1", "tpthe", "tpt2"}) {
      for (int n = 2; n <= 6; ++n) reqs.push_back({id, n});
    }
    const auto b = run_batch(reqs);
    const bool scalars = qint_identities_check(6).ok;
    report("1.4", b.proved == b.total && b.seconds < 300 && scalars,
           "T_N P_N T_N relation with both intermediate forms and its scalar step, N = 2..6 in H_{N+1}: " + describe(b));
  }
  {
    std::vector<CertifyRequest> reqs;
    for (int n = 1; n <= 6; ++n) reqs.push_back({"towers", n});
    const auto b = run_batch(reqs);
    report("1.5", b.proved == b.total, "T-form and R-form recursions agree, N <= 6: " + describe(b));
  }
  {
    std::vector<CertifyRequest> reqs;
    for (int n = 1; n <= 5; ++n) {
      reqs.push_back({"phiinv", n});
      reqs.push_back({"mirror", n});
    }
    const auto b = run_batch(reqs);
    report("1.6", b.proved == b.total, "reversal invariance and mirror recursion, N <= 5: " + describe(b));
  }
  {
    std::vector<CertifyRequest> reqs;
    for (int n = 1; n <= 7; ++n) {
      if (n >= 2) reqs.push_back({"tl_eq12", n});
      for (const char* id : {"tl_ppp1", "tl_delPP", "tl_pttp1", "tl_pttp2", "tl_pttp3"}) reqs.push_back({id, n});
    }
    const auto b = run_batch(reqs);
    report("1.7", b.proved == b.total && b.seconds < 120,
           "Temperley-Lieb: simplified T P T form, cubic relation and shifted-projector analogues, N <= 7: " + describe(b));
  }
  {
    bool zero = true;
    for (const auto& c : all_certs) zero = zero && c.proved == (c.residual_terms == 0) && c.residual_terms == 0;
    report("1.8", zero, "every certificate has an exactly zero residual (" + std::to_string(all_certs.size()) + " certificates)");
  }
}

void oracle_criterion() {
  double worst = 0;
  std::size_t samples = 0;
  bool five_each = true;
  for (const auto& c : all_certs) {
    five_each = five_each && c.q_oracle_samples.size() == 5;
    samples += c.q_oracle_samples.size();
    worst = std::max(worst, c.oracle_max_rel_err());
  }
  std::ostringstream os;
  os << "numeric oracle at 5 random generic q per certificate (" << samples << " samples), worst relative error "
     << std::scientific << std::setprecision(2) << worst;
  report("2", five_each && worst <= kOracleTolerance, os.str());
}

void scalar_criterion() {
  const auto r = qint_identities_check(20);
  report("3", r.ok,
         "quantum-integer identities for k, N <= 20 (" + std::to_string(r.checked) + " exact checks)" +
             (r.ok ? "" : "; failed " + r.failed_identity + " at " + std::to_string(r.failed_at)));
}

void numeric_criteria() {
  {
    double worst = 0;
    for (int n = 3; n <= 8; ++n) {
      worst = std::max(worst, std::abs(tpt_window_sum(n, kPi / (n + 1)) - 1.0));
      worst = std::max(worst, std::abs(tpt_window_sum(n, kPi / n) + 2 * std::cos(kPi / n)));
    }
    std::ostringstream os;
    os << "[N+2]+2[N] equals 1 and -[2] at the window ends, N = 3..8, max deviation " << std::scientific
       << std::setprecision(2) << worst;
    report("4.1", worst <= 1e-10, os.str());
  }
  {
    const double g0 = gamma0_root();
    const double c2 = std::cos(g0) * std::cos(g0);
    const auto scan = scan_gamma(3, 10000);
    const bool ok = std::abs(c2 - (1 + std::sqrt(5.0)) / 8) <= 1e-12 && std::abs(f_gamma(g0)) <= 1e-10 &&
                    scan.sign_changes == 1 && std::abs(scan.change_points.front() - g0) <= 1e-4;
    std::ostringstream os;
    os << std::setprecision(15) << "gamma0 = " << g0 << ", cos^2 deviation " << std::scientific << std::setprecision(2)
       << std::abs(c2 - (1 + std::sqrt(5.0)) / 8) << ", f(gamma0) = " << f_gamma(g0) << ", sign changes "
       << scan.sign_changes;
    report("4.2", ok, os.str());
  }
  {
    bool ok = true;
    double worst = 0;
    std::string detail;
    for (const int n : {2, 3}) {
      const DenseOperator t = standard_R_seed(n, 2.0);
      const auto r = check_ttt_at(n, 2.0, t);
      worst = std::max({worst, r.quadratic, r.cubic, r.hermitian});
      const DenseOperator rr = standard_R_matrix(n, 2.0);
      const DenseOperator r1 = local_operator(rr, n, 3, 1);
      const DenseOperator r2 = local_operator(rr, n, 3, 2);
      worst = std::max(worst, max_abs(r1 * r2 * r1 - r2 * r1 * r2));
      for (int big_n = 1; big_n <= 4; ++big_n) {
        const auto p = projector_images(t, n, 2.0, big_n, big_n);
        long expect = 1;
        for (int i = 1; i <= big_n; ++i) expect = expect * (n - big_n + i) / i;
        if (big_n > n) expect = 0;
        if (numeric_rank(p.back()) != expect) {
          ok = false;
          detail += " rank mismatch n=" + std::to_string(n) + " N=" + std::to_string(big_n);
        }
      }
      for (int big_n = 2; big_n <= 4; ++big_n) {
        const auto tau_r = tau_consistency(t, n, 2.0, big_n, 3);
        worst = std::max({worst, tau_r.projector_residual, tau_r.identity_residual});
        if (tau_r.homomorphism_residual > 1e-10) ok = false;
      }
    }
    ok = ok && worst <= 1e-10;
    std::ostringstream os;
    os << "standard seed at q = 2, n = 2,3: relation, Yang-Baxter and tau residuals <= " << std::scientific
       << std::setprecision(2) << worst << ", ranks binomial for N <= 4" << detail;
    report("4.3", ok, os.str());
  }
  {
    std::vector<HermitianHeckeSeed> seeds;
    for (const double g : {0.25, 0.5, kPi / 4, 0.84, 0.95, 1.2}) seeds.push_back(trivial_seed(2, g));
    for (int big_n = 3; big_n <= 6; ++big_n) {
      const double a = kPi / (big_n + 1);
      const double b = kPi / big_n;
      seeds.push_back(trivial_seed(2, a + 0.97 * (b - a)));
      seeds.push_back(trivial_seed(2, a));
    }
    SearchOptions o;
    o.target_rank = 2;
    o.seed = 7;
    for (const auto& s : search_seeds(2, kPi / 4, o)) seeds.push_back(s);
    int prop3 = 0;
    int prop4 = 0;
    int nontrivial = 0;
    double worst_quartic = 0;
    double worst_norm = 0;
    double min_psd = 0;
    std::string violation;
    for (const auto& s : seeds) {
      nontrivial += s.provenance != SeedProvenance::Trivial;
      for (int big_n = 2; big_n <= 10; ++big_n) {
        if (std::pow(s.n, big_n + 1) > kMaxTensorDim) break;
        try {
          if (in_prop3_window(big_n, s.gamma)) {
            const auto r = verify_prop3(s, big_n);
            ++prop3;
            worst_quartic = std::max(worst_quartic, r.quartic_residual);
            worst_norm = std::max(worst_norm, r.norm_pn);
            min_psd = std::min({min_psd, r.min_eig_square, r.min_eig_fourth});
          }
          if (in_prop4_window(big_n, s.gamma)) {
            const auto r = verify_prop4(s, big_n);
            ++prop4;
            worst_norm = std::max(worst_norm, r.norm_pn_minus_1);
          }
        } catch (const PropositionViolated& e) {
          if (violation.empty()) violation = e.what();
        }
      }
    }
    std::ostringstream os;
    os << seeds.size() << " accepted seeds (" << nontrivial << " from search), " << prop3 << " window-3 and " << prop4
       << " window-4 checks; min scaled eigenvalue " << std::scientific << std::setprecision(2) << min_psd
       << ", quartic residual " << worst_quartic << ", projector norm " << worst_norm;
    if (!violation.empty()) os << "; violation: " << violation.substr(0, 200);
    report("4.4", violation.empty() && prop3 > 0 && prop4 > 0 && min_psd >= -1e-10 && worst_quartic <= 1e-8 &&
                      worst_norm <= 1e-8,
           os.str());
  }
  {
    const DenseOperator t = standard_R_seed(2, 2.0);
    double worst = 0;
    for (int big_n = 2; big_n <= 4; ++big_n) worst = std::max(worst, spectrum_check(t, 2, 2.0, big_n).max_distance);
    std::ostringstream os;
    os << "spectrum of P_N - P'_N for the q = 2 standard seed, n = 2, N = 2..4: max distance " << std::scientific
       << std::setprecision(2) << worst;
    report("4.5", worst <= 1e-7, os.str());
  }
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  try {
    exact_criteria();
    oracle_criterion();
    scalar_criterion();
    numeric_criteria();
  } catch (const std::exception& e) {
    report("abort", false, e.what());
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << " in " << std::fixed
            << std::setprecision(1) << seconds_since(t0) << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
