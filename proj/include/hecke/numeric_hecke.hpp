#pragma once

// Floating-point model of H_N(q) at a fixed complex q.
//
// Elements are dense coefficient vectors over the T_w basis. Products use
// the left action of the generators (the exact kernel uses the right action),
// so the two paths share only the group tables.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/permutation.hpp"

namespace hecke {

using cplx = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

class NumericHecke {
 public:
  using Index = SymmetricGroup::Index;

  NumericHecke() = default;
  NumericHecke(int n, cplx q) : n_(n), q_(q), c_(SymmetricGroup::get(n).order(), cplx(0.0)) {}

  static NumericHecke identity(int n, cplx q) {
    NumericHecke r(n, q);
    r.c_[SymmetricGroup::get(n).identity_index()] = 1.0;
    return r;
  }
  static NumericHecke scalar(int n, cplx q, cplx s) {
    NumericHecke r(n, q);
    r.c_[SymmetricGroup::get(n).identity_index()] = s;
    return r;
  }
  static NumericHecke generator_T(int n, cplx q, int k) {
    if (k < 1 || k >= n) throw IndexOutOfRange("generator index out of range");
    NumericHecke r = scalar(n, q, 1.0 / q);
    const auto& g = SymmetricGroup::get(n);
    r.c_[g.right(g.identity_index(), k)] = 1.0;
    return r;
  }

  /// Coefficients of an exact element evaluated at q.
  static NumericHecke evaluate(const HeckeElement& a, cplx q) {
    NumericHecke r(a.rank(), q);
    const auto& d = a.data();
    const cplx den = d.den().evaluate(q);
    if (std::abs(den) < 1e-12) throw PoleAtQ("coefficient denominator vanishes at the requested q");
    for (const auto& [idx, num] : d.terms()) r.c_[idx] = num.evaluate(q) / den;
    return r;
  }

  int rank() const noexcept { return n_; }
  cplx q() const noexcept { return q_; }
  const std::vector<cplx>& coefficients() const noexcept { return c_; }
  std::vector<cplx>& coefficients() noexcept { return c_; }

  double norm_inf() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  NumericHecke operator-() const {
    NumericHecke r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend NumericHecke operator+(NumericHecke a, const NumericHecke& b) {
    check(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend NumericHecke operator-(NumericHecke a, const NumericHecke& b) {
    check(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  friend NumericHecke operator*(cplx s, NumericHecke a) {
    for (auto& v : a.c_) v *= s;
    return a;
  }

  /// y = R_k x under left multiplication.
  static void left_generator(const SymmetricGroup& g, cplx q, int k, const std::vector<cplx>& x,
                             std::vector<cplx>& y) {
    const cplx d = q - 1.0 / q;
    for (Index u = 0; u < g.order(); ++u) {
      if (!g.left_ascent(u, k)) continue;
      const Index su = g.left(u, k);
      y[su] = x[u] + d * x[su];
      y[u] = x[su];
    }
  }

  friend NumericHecke operator*(const NumericHecke& a, const NumericHecke& b) {
    check(a, b);
    const auto& g = SymmetricGroup::get(a.n_);
    const Index order = g.order();
    NumericHecke out(a.n_, a.q_);

    std::vector<std::uint8_t> needed(order, 0);
    std::vector<std::pair<Index, Index>> edges;
    int depth = 0;
    for (Index w = 0; w < order; ++w) {
      if (a.c_[w] == cplx(0.0)) continue;
      depth = std::max(depth, g.length(w));
      Index u = w;
      while (u != g.identity_index() && !needed[u]) {
        needed[u] = 1;
        edges.emplace_back(g.left_parent(u), u);
        u = g.left_parent(u);
      }
    }
    std::sort(edges.begin(), edges.end());

    // One buffer per depth; children are recomputed from the parent buffer.
    std::vector<std::vector<cplx>> buf(static_cast<std::size_t>(depth) + 1, std::vector<cplx>(order));
    buf[0] = b.c_;
    auto visit = [&](Index w, const std::vector<cplx>& x) {
      const cplx s = a.c_[w];
      if (s == cplx(0.0)) return;
      for (Index u = 0; u < order; ++u) out.c_[u] += s * x[u];
    };
    auto dfs = [&](auto&& self, Index w, std::size_t level) -> void {
      visit(w, buf[level]);
      auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(w, Index{0}));
      for (; it != edges.end() && it->first == w; ++it) {
        left_generator(g, a.q_, g.left_letter(it->second), buf[level], buf[level + 1]);
        self(self, it->second, level + 1);
      }
    };
    dfs(dfs, g.identity_index(), 0);
    return out;
  }

  static void check(const NumericHecke& a, const NumericHecke& b) {
    if (a.n_ != b.n_) throw RankMismatch("numeric Hecke elements of different rank");
  }

 private:
  int n_ = 1;
  cplx q_ = 1.0;
  std::vector<cplx> c_;
};

/// Image under R_k -> R_{k+shift} inside H_{target_rank}.
inline NumericHecke shift_embed(const NumericHecke& a, int target_rank, int shift = 0) {
  if (shift < 0) throw PreconditionError("shift must be non-negative");
  if (target_rank < a.rank() + shift) throw RankOverflow("numeric embedding does not fit target rank");
  const auto& src = SymmetricGroup::get(a.rank());
  const auto& dst = SymmetricGroup::get(target_rank);
  NumericHecke r(target_rank, a.q());
  std::vector<int> line(static_cast<std::size_t>(target_rank));
  for (SymmetricGroup::Index idx = 0; idx < src.order(); ++idx) {
    const cplx v = a.coefficients()[idx];
    if (v == cplx(0.0)) continue;
    const Permutation w = src.element(idx);
    for (int i = 1; i <= target_rank; ++i) {
      line[static_cast<std::size_t>(i - 1)] = (i > shift && i <= shift + a.rank()) ? w(i - shift) + shift : i;
    }
    r.coefficients()[dst.index_of(Permutation(line))] = v;
  }
  return r;
}

/// phi_N on the numeric model: T_w -> T_{w0 w w0}.
inline NumericHecke phi(const NumericHecke& a) {
  const int n = a.rank();
  const auto& g = SymmetricGroup::get(n);
  NumericHecke r(n, a.q());
  for (SymmetricGroup::Index idx = 0; idx < g.order(); ++idx) {
    const cplx v = a.coefficients()[idx];
    if (v == cplx(0.0)) continue;
    SymmetricGroup::Index w = g.identity_index();
    for (int letter : g.word(idx)) w = g.right(w, n - letter);
    r.coefficients()[w] = v;
  }
  return r;
}

/// N! x N! matrix of left multiplication by a on {T_w}, evaluated at q.
inline DenseOperator regular_rep_matrix(const HeckeElement& a, cplx q) {
  if (a.rank() > 6) throw RankOverflow("dense regular representation is limited to rank 6");
  const auto& g = SymmetricGroup::get(a.rank());
  const NumericHecke x = NumericHecke::evaluate(a, q);
  const auto order = static_cast<Eigen::Index>(g.order());
  DenseOperator m(order, order);
  for (Eigen::Index u = 0; u < order; ++u) {
    NumericHecke e(a.rank(), q);
    e.coefficients()[static_cast<std::size_t>(u)] = 1.0;
    const NumericHecke col = x * e;
    for (Eigen::Index r = 0; r < order; ++r) m(r, u) = col.coefficients()[static_cast<std::size_t>(r)];
  }
  return m;
}

/// ||l - r||_inf / max(||l||_inf, ||r||_inf, 1).
inline double relative_error(const NumericHecke& l, const NumericHecke& r) {
  const double scale = std::max({l.norm_inf(), r.norm_inf(), 1.0});
  return (l - r).norm_inf() / scale;
}

}  // namespace hecke
