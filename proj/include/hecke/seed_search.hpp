#pragma once

// Looking for Hermitian T beyond the trivial one: a grid over the rank-one
// ansatz and a penalty minimisation over all Hermitian matrices. Outcomes are
// whatever check_ttt says at the sampled points; nothing is presumed.

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "hecke/rep_numeric.hpp"

namespace hecke {

struct RankOnePoint {
  std::vector<double> weights;
  std::vector<double> phases;
  TTTReport report;
};

/// Samples the rank-one family at `steps` x `steps` points. For n = 2 this is a
/// grid in (weight of e_1 (x) e_2, relative phase); for larger n the points are
/// drawn from a seeded generator.
inline std::vector<RankOnePoint> scan_rank_one(int n, double gamma, int steps, std::uint64_t seed = 1) {
  require_gamma(gamma);
  if (steps < 2) throw PreconditionError("scan needs at least 2 steps");
  std::vector<RankOnePoint> out;
  auto eval = [&](std::vector<double> w, std::vector<double> ph) {
    const TTTReport r = check_ttt(n, gamma, rank_one_operator(n, gamma, w, ph));
    out.push_back({std::move(w), std::move(ph), r});
  };
  if (n == 1) {
    eval({1.0}, {0.0});
    return out;
  }
  if (n == 2) {
    for (int i = 0; i < steps; ++i) {
      const double a = static_cast<double>(i) / (steps - 1);
      for (int j = 0; j < steps; ++j) eval({a, 1.0 - a}, {0.0, 2 * std::numbers::pi * j / steps});
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> expo(1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  for (int s = 0; s < steps * steps; ++s) {
    std::vector<double> w(static_cast<std::size_t>(n));
    std::vector<double> ph(static_cast<std::size_t>(n));
    double total = 0;
    for (auto& x : w) total += (x = expo(rng));
    for (auto& x : w) x /= total;
    double fix = 1.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) fix -= w[i];
    w.back() = std::max(0.0, fix);
    for (auto& x : ph) x = phase(rng);
    eval(std::move(w), std::move(ph));
  }
  return out;
}

namespace detail {

/// Hermitian d x d from d^2 reals: diagonal, then (re, im) of the strict upper triangle.
inline DenseOperator hermitian_from_params(const Eigen::VectorXd& x, long d) {
  DenseOperator t = DenseOperator::Zero(d, d);
  long p = 0;
  for (long i = 0; i < d; ++i) t(i, i) = x(p++);
  for (long i = 0; i < d; ++i) {
    for (long j = i + 1; j < d; ++j) {
      t(i, j) = cplx(x(p), x(p + 1));
      t(j, i) = std::conj(t(i, j));
      p += 2;
    }
  }
  return t;
}

struct TTTPenalty {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  int n;
  cplx q;
  double trace_target;

  long d() const { return static_cast<long>(n) * n; }
  int inputs() const { return static_cast<int>(d() * d()); }
  int values() const {
    const long d3 = d() * n;
    return static_cast<int>(2 * d() * d() + 2 * d3 * d3 + 1);
  }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const DenseOperator t = hermitian_from_params(x, d());
    const cplx two = q + 1.0 / q;
    const DenseOperator quad = t * t - two * t;
    const DenseOperator t1 = local_operator(t, n, 3, 1);
    const DenseOperator t2 = local_operator(t, n, 3, 2);
    const DenseOperator cub = t1 * t2 * t1 - t2 * t1 * t2 - t1 + t2;
    long k = 0;
    for (long i = 0; i < quad.size(); ++i) {
      f(k++) = quad.data()[i].real();
      f(k++) = quad.data()[i].imag();
    }
    for (long i = 0; i < cub.size(); ++i) {
      f(k++) = cub.data()[i].real();
      f(k++) = cub.data()[i].imag();
    }
    f(k) = t.trace().real() - trace_target;
    return 0;
  }
};

}  // namespace detail

struct SearchOptions {
  int restarts = 6;
  int target_rank = 1;  // trace of T is pinned to [2] * target_rank to steer away from 0 and [2] I
  std::uint64_t seed = 1;
  int max_function_evals = 20000;
};

/// Random-restart Levenberg-Marquardt on the relation residuals. Returns every
/// local minimum that check_ttt accepts (possibly none).
inline std::vector<HermitianHeckeSeed> search_seeds(int n, double gamma, const SearchOptions& opt = {}) {
  require_gamma(gamma);
  const long d = static_cast<long>(n) * n;
  if (opt.target_rank < 1 || opt.target_rank >= d) throw PreconditionError("target rank must lie in [1, n^2)");
  tensor_dim(n, 3);
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal(0.0, 0.5);
  std::vector<HermitianHeckeSeed> found;
  for (int r = 0; r < opt.restarts; ++r) {
    detail::TTTPenalty f{n, std::polar(1.0, gamma), 2 * std::cos(gamma) * opt.target_rank};
    Eigen::VectorXd x(f.inputs());
    for (long i = 0; i < x.size(); ++i) x(i) = normal(rng);
    Eigen::NumericalDiff<detail::TTTPenalty> numdiff(f);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<detail::TTTPenalty>> lm(numdiff);
    lm.parameters.maxfev = opt.max_function_evals;
    lm.parameters.xtol = 1e-15;
    lm.parameters.ftol = 1e-15;
    lm.minimize(x);
    const DenseOperator t = detail::hermitian_from_params(x, d);
    if (check_ttt(n, gamma, t).accepted) found.push_back({n, gamma, t, SeedProvenance::Search});
  }
  return found;
}

}  // namespace hecke
