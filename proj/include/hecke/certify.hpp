#pragma once

// Relation catalogue, exact certification and the floating-point oracle.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/relations.hpp"

namespace hecke {

enum class Algebra { Hecke, TemperleyLieb };

struct RelationInfo {
  std::string id;
  Algebra algebra;
  Formula formula;
  int n_min;
  int n_cap;        // largest admissible N, 0 when unbounded
  int host_offset;  // minimal host rank is N + host_offset
  std::string statement;
};

inline const std::vector<RelationInfo>& relation_catalogue() {
  using F = Formula;
  using A = Algebra;
  static const std::vector<RelationInfo> catalogue = {
      {"idem", A::Hecke, F::Idempotent, 1, 0, 0, "P_N^2 = P_N"},
      {"annih", A::Hecke, F::Annihilation, 2, 0, 0, "T_k P_N = P_N T_k = 0 for k < N"},
      {"towers", A::Hecke, F::Towers, 1, 0, 0, "T-generator and R-generator recursions give the same P_N"},
      {"phiinv", A::Hecke, F::PhiInvariance, 1, 0, 0, "phi_N(P_N) = P_N"},
      {"mirror", A::Hecke, F::Mirror, 1, 0, 1, "P_{N+1} = P'_N - rho_N P'_N T_1 P'_N"},
      {"absorb", A::Hecke, F::Absorption, 2, 0, 1, "P_N P_{N-1} = P_{N-1} P_N = P_N and the same for P'"},
      {"phishift", A::Hecke, F::PhiShift, 1, 0, 1, "phi_{N+1}(P_N) = P'_N"},
      {"delPP", A::Hecke, F::DelPP, 1, 0, 2, "P_{N+1} - P'_{N+1} = rho_N P'_N (T_{N+1} - T_1) P'_N"},
      {"pttp1", A::Hecke, F::Pttp1, 1, 0, 2, "rho_N P'_N T_1 P'_N T_1 P'_N = P'_N T_1 P'_N"},
      {"pttp2", A::Hecke, F::Pttp2, 1, 0, 2, "rho_N P'_N T_{N+1} P'_N T_{N+1} P'_N = P'_N T_{N+1} P'_N"},
      {"pttp3", A::Hecke, F::Pttp3, 1, 0, 2,
       "P'_N (T_1 P'_N T_{N+1} P'_N T_1 - T_{N+1} P'_N T_1 P'_N T_{N+1}) P'_N = -[N+1]/[N]^3 (P_{N+1} - P'_{N+1})"},
      {"ppp1", A::Hecke, F::Cubic, 1, 0, 2, "(P_M - P'_M)^3 = [M-1][M+1]/[M]^2 (P_M - P'_M) for M = N, N+1"},
      {"ppp1_embed", A::Hecke, F::Cubic, 1, 3, 3, "cubic relation re-checked one rank above the minimal host"},
      {"tpt1", A::Hecke, F::Tpt1, 2, 0, 1,
       "([2]^2+1) T_N P_N T_N = [2]([N+2]+2[N])/[N] T_N P_{N-1} - [N-1]/[N] P_{N-1} (T_N T_{N-1})^2 T_N P_{N-1}"},
      {"tpthe", A::Hecke, F::TptHe, 2, 0, 1,
       "T_N P_N T_N + P_N = ([2]-rho_{N-1}) T_N P_{N-1} + P_{N-1} - rho_{N-1} P_{N-1} T_{N-1} T_N T_{N-1} P_{N-1}"},
      {"tpt2", A::Hecke, F::Tpt2, 2, 0, 1,
       "([2]^2+1) T_N P_N T_N = ([2]^2([2]-rho_{N-1})+[2]) T_N P_{N-1} - rho_{N-1} P_{N-1} (T_N T_{N-1})^2 T_N P_{N-1}"},
      {"tl_idem", A::TemperleyLieb, F::Idempotent, 1, 0, 0, "JW_N^2 = JW_N"},
      {"tl_annih", A::TemperleyLieb, F::Annihilation, 2, 0, 0, "E_k JW_N = JW_N E_k = 0 for k < N"},
      {"tl_mirror", A::TemperleyLieb, F::Mirror, 1, 0, 1, "JW_{N+1} = JW'_N - rho_N JW'_N E_1 JW'_N"},
      {"tl_eq12", A::TemperleyLieb, F::TLSimplified, 2, 0, 1, "E_N JW_N E_N = [N+1]/[N] E_N JW_{N-1}"},
      {"tl_ppp1", A::TemperleyLieb, F::Cubic, 1, 0, 2,
       "(JW_M - JW'_M)^3 = [M-1][M+1]/[M]^2 (JW_M - JW'_M) for M = N, N+1"},
      {"tl_delPP", A::TemperleyLieb, F::DelPP, 1, 0, 2, "JW_{N+1} - JW'_{N+1} = rho_N JW'_N (E_{N+1} - E_1) JW'_N"},
      {"tl_pttp1", A::TemperleyLieb, F::Pttp1, 1, 0, 2, "rho_N JW'_N E_1 JW'_N E_1 JW'_N = JW'_N E_1 JW'_N"},
      {"tl_pttp2", A::TemperleyLieb, F::Pttp2, 1, 0, 2,
       "rho_N JW'_N E_{N+1} JW'_N E_{N+1} JW'_N = JW'_N E_{N+1} JW'_N"},
      {"tl_pttp3", A::TemperleyLieb, F::Pttp3, 1, 0, 2,
       "JW'_N (E_1 JW'_N E_{N+1} JW'_N E_1 - E_{N+1} JW'_N E_1 JW'_N E_{N+1}) JW'_N = -[N+1]/[N]^3 (JW_{N+1} - JW'_{N+1})"},
  };
  return catalogue;
}

inline const RelationInfo& relation_info(const std::string& id) {
  for (const auto& r : relation_catalogue()) {
    if (r.id == id) return r;
  }
  throw PreconditionError("unknown relation id '" + id + "'");
}

/// Host-rank ceilings: default and with deep mode.
inline int host_limit(Algebra a, bool deep) {
  if (a == Algebra::Hecke) return deep ? 8 : 7;
  return deep ? kMaxTLRank : kMaxTLRank - 1;
}

struct OracleSample {
  double q_re = 0;
  double q_im = 0;
  double max_rel_err = 0;
};

struct RelationCertificate {
  std::string relation_id;
  std::string statement;
  int n = 0;
  int host_rank = 0;
  bool proved = false;
  std::size_t residual_terms = 0;
  double wall_time_s = 0;
  std::vector<OracleSample> q_oracle_samples;
  std::string residual;  // full rendering of the nonzero difference, empty when proved

  double oracle_max_rel_err() const {
    double m = 0;
    for (const auto& s : q_oracle_samples) m = std::max(m, s.max_rel_err);
    return m;
  }
};

inline void to_json(nlohmann::json& j, const OracleSample& s) {
  j = nlohmann::json{{"q_re", s.q_re}, {"q_im", s.q_im}, {"max_rel_err", s.max_rel_err}};
}

inline void to_json(nlohmann::json& j, const RelationCertificate& c) {
  j = nlohmann::json{{"relation_id", c.relation_id},
                     {"statement", c.statement},
                     {"n", c.n},
                     {"host_rank", c.host_rank},
                     {"status", c.proved ? "proved" : "failed"},
                     {"residual_terms", c.residual_terms},
                     {"wall_time_s", c.wall_time_s},
                     {"q_oracle_samples", c.q_oracle_samples}};
  if (!c.proved) j["residual"] = c.residual;
}

struct CertifyOptions {
  std::optional<int> host_rank;  // defaults to the minimal host
  bool deep = false;
  int oracle_samples = 5;
  std::uint64_t seed = 20240601;
  double oracle_tolerance = 1e-9;
  bool corrupt = false;  // perturb the right-hand side; used to test that failures are caught
};

/// Oracle tolerance on max relative error.
inline constexpr double kOracleTolerance = 1e-9;

/// Draws q with modulus in [0.85, 1.15] and |[k]| >= 0.3 for k <= host+2; points close to
/// a zero of some [k] make the floating-point evaluation ill-conditioned.
inline std::vector<cplx> random_generic_q(int count, int host, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> modulus(0.85, 1.15);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<cplx> out;
  while (static_cast<int>(out.size()) < count) {
    const cplx q = std::polar(modulus(rng), angle(rng));
    bool ok = true;
    for (int k = 2; k <= host + 2 && ok; ++k) ok = std::abs(qint_value(k, q)) >= 0.3;
    if (ok) out.push_back(q);
  }
  return out;
}

namespace detail {

inline double scalar_rel_err(cplx l, cplx r) {
  return std::abs(l - r) / std::max({std::abs(l), std::abs(r), 1.0});
}

template <class B>
void corrupt_sides(RelationSides<B>& s, const B& b) {
  if (!s.elements.empty()) s.elements.front().rhs = s.elements.front().rhs + b.one();
}

template <class B>
double numeric_max_error(Formula f, const B& b, int n, bool corrupt) {
  auto sides = relation_sides(f, b, n);
  if (corrupt) corrupt_sides(sides, b);
  double m = 0;
  for (const auto& p : sides.elements) m = std::max(m, relative_error(p.lhs, p.rhs));
  for (const auto& p : sides.scalars) m = std::max(m, scalar_rel_err(p.lhs, p.rhs));
  return m;
}

template <class B>
void exact_check(Formula f, const B& b, int n, bool corrupt, RelationCertificate& cert) {
  auto sides = relation_sides(f, b, n);
  if (corrupt) corrupt_sides(sides, b);
  std::string residual;
  std::size_t terms = 0;
  for (const auto& p : sides.elements) {
    const auto d = p.lhs - p.rhs;
    if (d.is_zero()) continue;
    terms += d.size();
    residual += (residual.empty() ? "" : "\n") + p.label + " :: " + d.to_string();
  }
  for (const auto& p : sides.scalars) {
    const RatFunc d = p.lhs - p.rhs;
    if (d.is_zero()) continue;
    terms += 1;
    residual += (residual.empty() ? "" : "\n") + p.label + " :: " + d.to_string();
  }
  cert.residual_terms = terms;
  cert.proved = terms == 0;
  cert.residual = std::move(residual);
}

inline int resolve_host(const RelationInfo& info, int n, const CertifyOptions& opt) {
  if (n < info.n_min || (info.n_cap > 0 && n > info.n_cap)) {
    throw PreconditionError("relation " + info.id + " is stated for N in [" + std::to_string(info.n_min) + ", " +
                            (info.n_cap > 0 ? std::to_string(info.n_cap) : std::string("inf")) + "], got N = " +
                            std::to_string(n));
  }
  const int minimal = n + info.host_offset;
  const int host = opt.host_rank.value_or(minimal);
  if (host < minimal) throw PreconditionError("host rank below the minimal host " + std::to_string(minimal));
  const int limit = host_limit(info.algebra, opt.deep);
  if (host > limit) {
    throw PreconditionError("host rank " + std::to_string(host) + " exceeds the cap " + std::to_string(limit) +
                            (opt.deep ? "" : "; rerun with --deep"));
  }
  return host;
}

}  // namespace detail

/// Evaluates both sides at generic complex q and reports the relative error per sample.
inline std::vector<OracleSample> oracle_check(const std::string& id, int n, const CertifyOptions& opt = {}) {
  const RelationInfo& info = relation_info(id);
  const int host = detail::resolve_host(info, n, opt);
  std::vector<OracleSample> out;
  for (const cplx q : random_generic_q(opt.oracle_samples, host, opt.seed + static_cast<std::uint64_t>(n))) {
    double err = 0;
    if (info.algebra == Algebra::Hecke) {
      err = detail::numeric_max_error(info.formula, NumericHeckeBackend(host, q), n, opt.corrupt);
    } else {
      err = detail::numeric_max_error(info.formula, NumericTLBackend(host, q), n, opt.corrupt);
    }
    out.push_back({q.real(), q.imag(), err});
  }
  return out;
}

/// Runs the oracle, then the exact check. Never throws on a failed relation;
/// see require_proved.
inline RelationCertificate certify(const std::string& id, int n, const CertifyOptions& opt = {}) {
  const RelationInfo& info = relation_info(id);
  const int host = detail::resolve_host(info, n, opt);
  const auto start = std::chrono::steady_clock::now();
  RelationCertificate cert;
  cert.relation_id = id;
  cert.statement = info.statement;
  cert.n = n;
  cert.host_rank = host;
  cert.q_oracle_samples = oracle_check(id, n, opt);
  if (info.algebra == Algebra::Hecke) {
    detail::exact_check(info.formula, ExactHeckeBackend(host), n, opt.corrupt, cert);
  } else {
    detail::exact_check(info.formula, ExactTLBackend(host), n, opt.corrupt, cert);
  }
  cert.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

inline const RelationCertificate& require_proved(const RelationCertificate& c) {
  if (!c.proved) throw CertificationFailed(c.relation_id + " at N=" + std::to_string(c.n), c.residual);
  return c;
}

// Named entry points for the Hecke relations that carry their own statement.
inline RelationCertificate certify_delPP(int n) { return certify("delPP", n); }
inline RelationCertificate certify_pttp1(int n) { return certify("pttp1", n); }
inline RelationCertificate certify_pttp2(int n) { return certify("pttp2", n); }
inline RelationCertificate certify_pttp3(int n) { return certify("pttp3", n); }
inline RelationCertificate certify_ppp1(int n) { return certify("ppp1", n); }
inline RelationCertificate certify_tpt1(int n) { return certify("tpt1", n); }
inline RelationCertificate certify_tpthe(int n) { return certify("tpthe", n); }
inline RelationCertificate certify_tpt2(int n) { return certify("tpt2", n); }

/// TL-specialized relations at N: the simplified T P T form (N >= 2), the
/// cubic relation and the four shifted-projector relations.
inline std::vector<RelationCertificate> certify_tl_relations(int n, const CertifyOptions& opt = {}) {
  if (n < 1) throw PreconditionError("TL relations need N >= 1");
  std::vector<RelationCertificate> out;
  if (n >= 2) out.push_back(certify("tl_eq12", n, opt));
  for (const char* id : {"tl_ppp1", "tl_delPP", "tl_pttp1", "tl_pttp2", "tl_pttp3"}) out.push_back(certify(id, n, opt));
  return out;
}

struct CertifyRequest {
  std::string id;
  int n;
};

/// Every catalogue entry with n_min <= N <= n_max whose host fits the cap.
/// Requests that would exceed the host cap are returned in `skipped`.
inline std::vector<CertifyRequest> catalogue_requests(int n_max, bool deep, std::vector<CertifyRequest>* skipped = nullptr) {
  std::vector<CertifyRequest> out;
  for (const auto& info : relation_catalogue()) {
    const int top = info.n_cap > 0 ? std::min(n_max, info.n_cap) : n_max;
    for (int n = info.n_min; n <= top; ++n) {
      if (n + info.host_offset <= host_limit(info.algebra, deep)) {
        out.push_back({info.id, n});
      } else if (skipped) {
        skipped->push_back({info.id, n});
      }
    }
  }
  return out;
}

/// Certifies independent requests on up to `jobs` threads; results keep request order.
inline std::vector<RelationCertificate> certify_batch(const std::vector<CertifyRequest>& requests,
                                                      const CertifyOptions& opt, unsigned jobs = 1) {
  std::vector<RelationCertificate> out(requests.size());
  jobs = std::max(1u, jobs);
  std::size_t next = 0;
  std::vector<std::future<void>> running;
  while (next < requests.size() || !running.empty()) {
    while (next < requests.size() && running.size() < jobs) {
      const std::size_t i = next++;
      running.push_back(std::async(std::launch::async, [&, i] { out[i] = certify(requests[i].id, requests[i].n, opt); }));
    }
    running.front().get();
    running.erase(running.begin());
  }
  return out;
}

}  // namespace hecke
