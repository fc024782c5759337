// heckecert: certification runs, representation experiments and gamma scans.
//
// Exit codes: 0 success, 1 usage error, 2 a certificate or numeric check failed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/certify.hpp"
#include "hecke/rep_numeric.hpp"
#include "hecke/seed_search.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> relations;
  bool all = false;
  int n = 0;  // 0: not given
  int n_max = 4;
  bool deep = false;
  double gamma = 0;  // 0: not given
  int local_dim = 2;
  int steps = 1000;
  std::string out_path;
  std::string in_path;
  std::uint64_t seed = 20240601;
  double q = 2.0;
  bool corrupt = false;
  unsigned jobs = 1;
};

// Writes through a temporary file so readers never see a partial report.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }
  std::filesystem::rename(tmp, target);
}

std::vector<hecke::CertifyRequest> build_requests(const RunConfig& cfg) {
  if (cfg.all && !cfg.relations.empty()) throw UsageError("--all and --relation are exclusive");
  if (!cfg.all && cfg.relations.empty()) throw UsageError("give --relation ID or --all");
  if (cfg.n_max < 1) throw UsageError("--n-max must be at least 1");
  std::vector<hecke::CertifyRequest> reqs;
  if (cfg.all) {
    std::vector<hecke::CertifyRequest> skipped;
    if (cfg.n > 0) {
      for (const auto& r : hecke::catalogue_requests(cfg.n, cfg.deep, &skipped)) {
        if (r.n == cfg.n) reqs.push_back(r);
      }
    } else {
      reqs = hecke::catalogue_requests(cfg.n_max, cfg.deep, &skipped);
    }
    for (const auto& s : skipped) {
      if (cfg.n == 0 || s.n == cfg.n) std::cerr << "skipped " << s.id << " N=" << s.n << ": host above cap (use --deep)\n";
    }
    return reqs;
  }
  for (const auto& id : cfg.relations) {
    const auto& info = hecke::relation_info(id);
    if (cfg.n > 0) {
      reqs.push_back({id, cfg.n});
    } else {
      const int top = info.n_cap > 0 ? std::min(cfg.n_max, info.n_cap) : cfg.n_max;
      for (int n = info.n_min; n <= top; ++n) reqs.push_back({id, n});
    }
  }
  return reqs;
}

hecke::CertifyOptions certify_options(const RunConfig& cfg) {
  hecke::CertifyOptions opt;
  opt.deep = cfg.deep;
  opt.seed = cfg.seed;
  opt.corrupt = cfg.corrupt;
  return opt;
}

// Resolves every request's host up front so range errors surface as usage errors.
void validate_requests(const std::vector<hecke::CertifyRequest>& reqs, const hecke::CertifyOptions& opt) {
  for (const auto& r : reqs) hecke::detail::resolve_host(hecke::relation_info(r.id), r.n, opt);
}

int cmd_certify(const RunConfig& cfg) {
  const auto reqs = build_requests(cfg);
  const auto opt = certify_options(cfg);
  validate_requests(reqs, opt);
  const auto certs = hecke::certify_batch(reqs, opt, cfg.jobs);
  int proved = 0;
  int oracle_bad = 0;
  json report = json::array();
  for (const auto& c : certs) {
    const bool oracle_ok = c.oracle_max_rel_err() <= hecke::kOracleTolerance;
    proved += c.proved;
    oracle_bad += !oracle_ok;
    std::cerr << (c.proved ? "proved " : "FAILED ") << std::left << std::setw(11) << c.relation_id << " N=" << c.n
              << (hecke::relation_info(c.relation_id).algebra == hecke::Algebra::Hecke ? " host=H_" : " host=TL_")
              << c.host_rank << " oracle=" << std::scientific << std::setprecision(2)
              << c.oracle_max_rel_err() << std::defaultfloat << " t=" << std::setprecision(3) << c.wall_time_s << "s\n";
    if (!c.proved) std::cerr << "  residual:\n" << c.residual << "\n";
    report.push_back(c);
  }
  write_output(cfg.out_path, report.dump(2) + "\n");
  std::cerr << proved << "/" << certs.size() << " certificates proved";
  if (oracle_bad) std::cerr << ", " << oracle_bad << " oracle disagreements";
  std::cerr << "\n";
  return proved == static_cast<int>(certs.size()) && oracle_bad == 0 ? kExitOk : kExitFailed;
}

int cmd_oracle(const RunConfig& cfg) {
  const auto reqs = build_requests(cfg);
  const auto opt = certify_options(cfg);
  validate_requests(reqs, opt);
  json report = json::array();
  int bad = 0;
  for (const auto& r : reqs) {
    const auto samples = hecke::oracle_check(r.id, r.n, opt);
    double worst = 0;
    for (const auto& s : samples) worst = std::max(worst, s.max_rel_err);
    const bool ok = worst <= hecke::kOracleTolerance;
    bad += !ok;
    std::cerr << (ok ? "agree    " : "DISAGREE ") << std::left << std::setw(11) << r.id << " N=" << r.n
              << " max_rel_err=" << std::scientific << std::setprecision(2) << worst << std::defaultfloat << "\n";
    report.push_back({{"relation_id", r.id}, {"n", r.n}, {"agree", ok}, {"q_oracle_samples", samples}});
  }
  write_output(cfg.out_path, report.dump(2) + "\n");
  return bad == 0 ? kExitOk : kExitFailed;
}

int cmd_scan_gamma(const RunConfig& cfg) {
  if (cfg.n < 2) throw UsageError("scan-gamma needs --n N with N >= 2 (the window (pi/(N+1), pi/N) must lie in (0, pi/2))");
  if (cfg.steps < 2) throw UsageError("--steps must be at least 2");
  const auto scan = hecke::scan_gamma(cfg.n, cfg.steps);
  write_output(cfg.out_path, scan.csv());
  std::cerr << "N=" << cfg.n << " samples=" << scan.rows.size() << " sign changes=" << scan.sign_changes;
  for (const double g : scan.change_points) std::cerr << " near " << std::setprecision(10) << g;
  std::cerr << "\n";
  if (cfg.n == 3) std::cerr << "gamma0 (bisection) = " << std::setprecision(15) << hecke::gamma0_root() << "\n";
  return kExitOk;
}

std::vector<hecke::HermitianHeckeSeed> load_seeds(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::vector<hecke::HermitianHeckeSeed> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(hecke::seed_from_json(e));
  } else {
    out.push_back(hecke::seed_from_json(j));
  }
  return out;
}

int cmd_spectrum(const RunConfig& cfg) {
  const int big_n = cfg.n > 0 ? cfg.n : 3;
  if (big_n < 2) throw UsageError("--n must be at least 2");
  hecke::DenseOperator t;
  hecke::cplx q;
  int n = cfg.local_dim;
  if (!cfg.in_path.empty()) {
    const auto seeds = load_seeds(cfg.in_path);
    if (seeds.empty()) throw UsageError("no seed in " + cfg.in_path);
    t = seeds.front().T;
    q = seeds.front().q();
    n = seeds.front().n;
  } else {
    if (!(cfg.q > 0) || cfg.q == 1.0) throw UsageError("--q must be real, positive and different from 1");
    t = hecke::standard_R_seed(n, cfg.q);
    q = cfg.q;
  }
  const auto s = hecke::spectrum_check(t, n, q, big_n);
  json j = {{"n_local", n}, {"N", big_n}, {"q_re", q.real()}, {"q_im", q.imag()},
            {"allowed", s.allowed}, {"max_distance", s.max_distance}};
  j["eigenvalues"] = std::vector<double>(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
  write_output(cfg.out_path, j.dump(2) + "\n");
  std::cerr << "eigenvalues of P_N - P'_N lie within " << s.max_distance << " of {0, +-" << s.allowed << "}\n";
  return s.max_distance <= 1e-7 ? kExitOk : kExitFailed;
}

int cmd_seeds(const RunConfig& cfg) {
  std::vector<hecke::HermitianHeckeSeed> seeds;
  if (!cfg.in_path.empty()) {
    seeds = load_seeds(cfg.in_path);
  } else {
    if (cfg.gamma == 0) throw UsageError("seeds needs --gamma in (0, pi/2) or --in FILE");
    hecke::require_gamma(cfg.gamma);
    const int n = cfg.local_dim;
    hecke::tensor_dim(n, 3);
    seeds.push_back(hecke::trivial_seed(n, cfg.gamma));
    const int grid = std::max(2, std::min(cfg.steps, 60));
    int scanned = 0;
    for (const auto& p : hecke::scan_rank_one(n, cfg.gamma, grid, cfg.seed)) {
      ++scanned;
      if (p.report.accepted) seeds.push_back(hecke::rank_one_family(n, cfg.gamma, p.weights, p.phases));
    }
    std::cerr << "rank-one family: " << seeds.size() - 1 << " of " << scanned << " sampled points accepted\n";
    for (int r = 1; r < n * n; ++r) {
      hecke::SearchOptions o;
      o.target_rank = r;
      o.seed = cfg.seed + static_cast<std::uint64_t>(r);
      const auto found = hecke::search_seeds(n, cfg.gamma, o);
      std::cerr << "search, trace pinned to rank " << r << ": " << found.size() << " accepted\n";
      seeds.insert(seeds.end(), found.begin(), found.end());
    }
  }

  json out = json::array();
  int violations = 0;
  for (const auto& s : seeds) {
    json entry = hecke::seed_to_json(s);
    json checks = json::array();
    for (int big_n = 2; big_n <= 12; ++big_n) {
      if (hecke::in_prop3_window(big_n, s.gamma) && std::pow(s.n, big_n + 1) <= hecke::kMaxTensorDim) {
        try {
          const auto r = hecke::verify_prop3(s, big_n);
          checks.push_back({{"check", "prop3"}, {"N", big_n}, {"norm_PN", r.norm_pn}, {"quartic_residual", r.quartic_residual}});
        } catch (const hecke::PropositionViolated& e) {
          ++violations;
          checks.push_back({{"check", "prop3"}, {"N", big_n}, {"violation", e.what()}});
        } catch (const hecke::PreconditionError& e) {
          checks.push_back({{"check", "prop3"}, {"N", big_n}, {"skipped", e.what()}});
        }
      }
      if (hecke::in_prop4_window(big_n, s.gamma) && std::pow(s.n, big_n + 1) <= hecke::kMaxTensorDim) {
        try {
          const auto r = hecke::verify_prop4(s, big_n);
          checks.push_back({{"check", "prop4"}, {"N", big_n}, {"norm_PNm1", r.norm_pn_minus_1}, {"residual", r.identity_residual}});
        } catch (const hecke::PropositionViolated& e) {
          ++violations;
          checks.push_back({{"check", "prop4"}, {"N", big_n}, {"violation", e.what()}});
        } catch (const hecke::PreconditionError& e) {
          checks.push_back({{"check", "prop4"}, {"N", big_n}, {"skipped", e.what()}});
        }
      }
    }
    entry["checks"] = checks;
    out.push_back(entry);
  }
  write_output(cfg.out_path, out.dump(2) + "\n");
  std::cerr << seeds.size() << " accepted seeds, " << violations << " proposition violations\n";
  return violations == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of q-antisymmetrizer identities and numeric representation checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_selection = [&](CLI::App* sub) {
    sub->add_option("--relation", cfg.relations, "catalogue id (repeatable)")->delimiter(',');
    sub->add_flag("--all", cfg.all, "every catalogue entry");
    sub->add_option("--n", cfg.n, "single N");
    sub->add_option("--n-max", cfg.n_max, "largest N when --n is absent")->capture_default_str();
    sub->add_flag("--deep", cfg.deep, "allow hosts one rank above the default cap (memory heavy)");
    sub->add_flag("--corrupt", cfg.corrupt, "perturb each right-hand side (self-test: must fail)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "output file (stdout when absent)");
    sub->add_option("--seed", cfg.seed, "seed for every random draw")->capture_default_str();
  };

  auto* certify = app.add_subcommand("certify", "exact certification with oracle cross-check");
  add_selection(certify);
  add_common(certify);
  certify->add_option("--jobs", cfg.jobs, "certificates run concurrently")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "floating-point cross-check at random generic q");
  add_selection(oracle);
  add_common(oracle);

  auto* scan = app.add_subcommand("scan-gamma", "tabulate [N+2]+2[N] over (pi/(N+1), pi/N)");
  scan->add_option("--n", cfg.n, "N")->required();
  scan->add_option("--steps", cfg.steps, "samples, endpoints included")->capture_default_str();
  add_common(scan);

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of P_N - P'_N for a representation");
  spectrum->add_option("--n", cfg.n, "N (default 3)");
  spectrum->add_option("--local-dim", cfg.local_dim, "n for the standard seed")->capture_default_str();
  spectrum->add_option("--q", cfg.q, "real q for the standard seed")->capture_default_str();
  spectrum->add_option("--in", cfg.in_path, "seed JSON to use instead of the standard seed");
  add_common(spectrum);

  auto* seeds = app.add_subcommand("seeds", "find or load Hermitian seeds and check the vanishing results");
  seeds->add_option("--gamma", cfg.gamma, "angle with q = e^{i gamma}, in (0, pi/2)");
  seeds->add_option("--local-dim", cfg.local_dim, "n")->capture_default_str();
  seeds->add_option("--steps", cfg.steps, "rank-one grid resolution (capped at 60)")->capture_default_str();
  seeds->add_option("--in", cfg.in_path, "seed JSON (object or array) to verify");
  add_common(seeds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*certify) return cmd_certify(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*scan) return cmd_scan_gamma(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*seeds) return cmd_seeds(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hecke::PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hecke::RankOverflow& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hecke::AnsatzRejected& e) {
    std::cerr << "seed rejected: " << e.what() << "\n";
    return kExitFailed;
  } catch (const hecke::CertificationFailed& e) {
    std::cerr << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
