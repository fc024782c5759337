#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hecke/combination.hpp"
#include "hecke/errors.hpp"
#include "hecke/kernel.hpp"
#include "hecke/permutation.hpp"
#include "hecke/ratfunc.hpp"

namespace hecke {

/// Element of H_N(q) in the basis T_w = R_{i1} ... R_{il} (reduced words).
///
/// Coefficients are kept over one common denominator (ScaledCombination);
/// coefficient() and terms() expose them as RatFunc. Basis indices are the
/// lexicographic ranks of SymmetricGroup::get(N).
class HeckeElement {
 public:
  using Index = SymmetricGroup::Index;
  using Data = ScaledCombination<Index>;

  HeckeElement() : n_(1) {}
  explicit HeckeElement(int n) : n_(n) { SymmetricGroup::get(n); }
  HeckeElement(int n, Data data) : n_(n), data_(std::move(data)) {}

  static HeckeElement identity(int n) { return scalar(n, RatFunc(1)); }
  static HeckeElement scalar(int n, const RatFunc& c) {
    return HeckeElement(n, Data::single(SymmetricGroup::get(n).identity_index(), c));
  }
  static HeckeElement basis(const Permutation& w, const RatFunc& c = RatFunc(1)) {
    const auto& g = SymmetricGroup::get(w.rank());
    return HeckeElement(w.rank(), Data::single(g.index_of(w), c));
  }

  int rank() const noexcept { return n_; }
  const Data& data() const noexcept { return data_; }
  bool is_zero() const noexcept { return data_.is_zero(); }
  std::size_t size() const noexcept { return data_.size(); }

  RatFunc coefficient(const Permutation& w) const {
    if (w.rank() != n_) throw RankMismatch("permutation rank differs from algebra rank");
    return data_.coefficient(SymmetricGroup::get(n_).index_of(w));
  }

  /// (permutation, coefficient) pairs ordered lexicographically by reduced word.
  std::vector<std::pair<Permutation, RatFunc>> terms() const {
    const auto& g = SymmetricGroup::get(n_);
    std::vector<std::pair<std::vector<int>, Index>> order;
    order.reserve(data_.size());
    for (const auto& t : data_.terms()) order.emplace_back(g.word(t.first), t.first);
    std::sort(order.begin(), order.end());
    std::vector<std::pair<Permutation, RatFunc>> out;
    out.reserve(order.size());
    for (const auto& [word, idx] : order) {
      out.emplace_back(g.element(idx), RatFunc::from_integer(*data_.find(idx), data_.den()));
    }
    return out;
  }

  /// `(coeff) * T[word] + ...`, words in lexicographic order; `0` for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    const auto& g = SymmetricGroup::get(n_);
    std::string out;
    for (const auto& [w, c] : terms()) {
      if (!out.empty()) out += " + ";
      const auto word = g.word(g.index_of(w));
      out += "(" + c.to_string() + ") * T" + word_to_string(word);
    }
    return out;
  }

  HeckeElement operator-() const { return HeckeElement(n_, -data_); }

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    check_ranks(a, b);
    return HeckeElement(a.n_, a.data_ + b.data_);
  }
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    check_ranks(a, b);
    return HeckeElement(a.n_, a.data_ - b.data_);
  }
  friend HeckeElement operator*(const RatFunc& c, const HeckeElement& a) { return HeckeElement(a.n_, c * a.data_); }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

  HeckeElement& operator+=(const HeckeElement& o) { return *this = *this + o; }
  HeckeElement& operator-=(const HeckeElement& o) { return *this = *this - o; }
  HeckeElement& operator*=(const HeckeElement& o) { return *this = *this * o; }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  static void check_ranks(const HeckeElement& a, const HeckeElement& b) {
    if (a.n_ != b.n_) {
      throw RankMismatch("H_" + std::to_string(a.n_) + " and H_" + std::to_string(b.n_) + " elements combined");
    }
  }

 private:
  int n_;
  Data data_;
};

/// R_k = T_{s_k} in H_n.
inline HeckeElement generator_R(int n, int k) { return HeckeElement::basis(Permutation::simple(n, k)); }

/// T_k = q^-1 + R_k in H_n.
inline HeckeElement generator_T(int n, int k) {
  return generator_R(n, k) + HeckeElement::scalar(n, RatFunc::q_power(-1));
}

/// T_w R_k: T_{w s_k} on an ascent, T_{w s_k} + (q - q^-1) T_w on a descent.
inline HeckeElement mul_basis_by_generator(const Permutation& w, int k) {
  if (k < 1 || k >= w.rank()) throw IndexOutOfRange("generator index out of range");
  const Permutation ws = w.right_mul_simple(k);
  HeckeElement r = HeckeElement::basis(ws);
  if (w.has_right_descent(k)) r += HeckeElement::basis(w, RatFunc(QLaurent::q_power(1) - QLaurent::q_power(-1)));
  return r;
}

namespace detail {

/// a * b by depth-first traversal of the canonical-word prefix tree of
/// supp(b). A dense working copy V = a T_w is pushed through one generator
/// per tree edge and restored with R_k^-1 = R_k - (q - q^-1) on the way back;
/// at every node of supp(b), the scaled numerator of b_w is accumulated.
template <class Z>
ScaledCombination<SymmetricGroup::Index> hecke_product(const SymmetricGroup& g,
                                                       const ScaledCombination<SymmetricGroup::Index>& a,
                                                       const ScaledCombination<SymmetricGroup::Index>& b) {
  using Index = SymmetricGroup::Index;
  const Index order = g.order();
  std::vector<std::int32_t> term_of(order, -1);
  int depth = 0;
  for (std::size_t i = 0; i < b.terms().size(); ++i) {
    term_of[b.terms()[i].first] = static_cast<std::int32_t>(i);
    depth = std::max(depth, g.length(b.terms()[i].first));
  }

  // Prefix tree of supp(b): children sorted by parent for range lookup.
  std::vector<std::uint8_t> needed(order, 0);
  std::vector<std::pair<Index, Index>> edges;  // (parent, child)
  for (const auto& t : b.terms()) {
    Index w = t.first;
    while (w != g.identity_index() && !needed[w]) {
      needed[w] = 1;
      edges.emplace_back(g.right_parent(w), w);
      w = g.right_parent(w);
    }
  }
  std::sort(edges.begin(), edges.end());

  ExponentRange ar;
  for (const auto& t : a.terms()) ar.include(t.second);
  const int vbase = ar.lo - depth - 1;
  const int vwidth = ar.hi - ar.lo + 2 * depth + 3;
  SlotArray<Z> v(order, vbase, vwidth);
  for (const auto& t : a.terms()) v.set(t.first, t.second);

  std::vector<const ZLaurent*> nums;
  nums.reserve(b.terms().size());
  for (const auto& t : b.terms()) nums.push_back(&t.second);
  ExponentRange mr;
  for (const auto& t : b.terms()) mr.include(t.second);
  const int acc_width = vwidth + (mr.hi - mr.lo);
  const GroupPlan plan = plan_groups(nums, group_budget(order, acc_width, sizeof(Z)));

  std::vector<SlotArray<Z>> acc;
  std::vector<ExponentRange> group_range(plan.shapes.size());
  for (std::size_t i = 0; i < nums.size(); ++i) group_range[plan.group_of[i]].include(plan.multiplier[i]);
  for (std::size_t gi = 0; gi < plan.shapes.size(); ++gi) {
    const auto& r = group_range[gi];
    acc.emplace_back(order, vbase + r.lo, vwidth + r.hi - r.lo);
  }
  std::vector<SmallPoly<Z>> mult(nums.size());
  for (std::size_t i = 0; i < nums.size(); ++i) mult[i] = SmallPoly<Z>::from(plan.multiplier[i]);

  auto apply = [&](int k, bool inverse) {
    for (Index u = 0; u < order; ++u) {
      if (!g.right_ascent(u, k)) continue;
      const Index us = g.right(u, k);
      if (v.zero(u) && v.zero(us)) continue;
      if (!inverse) {
        v.swap_slots(u, us);
        v.add_deformation(us, u, +1);
      } else {
        v.add_deformation(us, u, -1);
        v.swap_slots(u, us);
      }
    }
  };
  auto visit = [&](Index w) {
    const std::int32_t t = term_of[w];
    if (t < 0) return;
    auto& target = acc[static_cast<std::size_t>(plan.group_of[static_cast<std::size_t>(t)])];
    const auto& m = mult[static_cast<std::size_t>(t)];
    for (Index u = 0; u < order; ++u) {
      if (!v.zero(u)) target.add_product(u, m, v, u);
    }
  };
  auto dfs = [&](auto&& self, Index w) -> void {
    visit(w);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(w, Index{0}));
    for (; it != edges.end() && it->first == w; ++it) {
      const int k = g.right_letter(it->second);
      apply(k, false);
      self(self, it->second);
      apply(k, true);
    }
  };
  dfs(dfs, g.identity_index());

  std::vector<SmallPoly<Z>> shapes;
  shapes.reserve(plan.shapes.size());
  for (const auto& s : plan.shapes) shapes.push_back(SmallPoly<Z>::from(s));
  std::vector<std::pair<Index, ZLaurent>> out;
  for (Index u = 0; u < order; ++u) {
    ZLaurent c = combine_groups(shapes, acc, u);
    if (!c.is_zero()) out.emplace_back(u, std::move(c));
  }
  return ScaledCombination<Index>(a.den() * b.den(), std::move(out));
}

}  // namespace detail

inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement::check_ranks(a, b);
  if (a.is_zero() || b.is_zero()) return HeckeElement(a.rank());
  const auto& g = SymmetricGroup::get(a.rank());
  try {
    return HeckeElement(a.rank(), detail::hecke_product<std::int64_t>(g, a.data(), b.data()));
  } catch (const detail::KernelOverflow&) {
    return HeckeElement(a.rank(), detail::hecke_product<Integer>(g, a.data(), b.data()));
  }
}

inline HeckeElement mul(const HeckeElement& a, const HeckeElement& b) { return a * b; }

/// Image of a under R_k -> R_{k+shift} inside H_{target_rank}; shift 0 is X -> X (x) id.
inline HeckeElement shift_embed(const HeckeElement& a, int target_rank, int shift = 0) {
  if (shift < 0) throw PreconditionError("shift must be non-negative");
  if (target_rank < a.rank() + shift) {
    throw RankOverflow("cannot embed H_" + std::to_string(a.rank()) + " shifted by " + std::to_string(shift) +
                       " into H_" + std::to_string(target_rank));
  }
  const auto& src = SymmetricGroup::get(a.rank());
  const auto& dst = SymmetricGroup::get(target_rank);
  std::vector<std::pair<HeckeElement::Index, ZLaurent>> out;
  out.reserve(a.size());
  std::vector<int> line(static_cast<std::size_t>(target_rank));
  for (const auto& [idx, num] : a.data().terms()) {
    const Permutation w = src.element(idx);
    for (int i = 1; i <= target_rank; ++i) {
      line[static_cast<std::size_t>(i - 1)] = (i > shift && i <= shift + a.rank()) ? w(i - shift) + shift : i;
    }
    out.emplace_back(dst.index_of(Permutation(line)), num);
  }
  return HeckeElement(target_rank, HeckeElement::Data(a.data().den(), std::move(out)));
}

/// Inverse of the standard embedding: an element of H_N supported on S_m
/// (permutations fixing m+1..N) viewed in H_m.
inline HeckeElement restrict_rank(const HeckeElement& a, int m) {
  if (m > a.rank()) throw RankOverflow("restriction target exceeds element rank");
  const auto& src = SymmetricGroup::get(a.rank());
  const auto& dst = SymmetricGroup::get(m);
  std::vector<std::pair<HeckeElement::Index, ZLaurent>> out;
  out.reserve(a.size());
  std::vector<int> line(static_cast<std::size_t>(m));
  for (const auto& [idx, num] : a.data().terms()) {
    const Permutation w = src.element(idx);
    for (int i = 1; i <= a.rank(); ++i) {
      if (i > m && w(i) != i) throw PreconditionError("element is not supported on the smaller group");
      if (i <= m) line[static_cast<std::size_t>(i - 1)] = w(i);
    }
    out.emplace_back(dst.index_of(Permutation(line)), num);
  }
  return HeckeElement(m, HeckeElement::Data(a.data().den(), std::move(out)));
}

/// phi_N: T_k -> T_{N-k}, applied word by word.
inline HeckeElement phi(const HeckeElement& a) {
  const int n = a.rank();
  const auto& g = SymmetricGroup::get(n);
  std::vector<std::pair<HeckeElement::Index, ZLaurent>> out;
  out.reserve(a.size());
  for (const auto& [idx, num] : a.data().terms()) {
    HeckeElement::Index w = g.identity_index();
    for (int letter : g.word(idx)) {
      const int k = n - letter;
      // Mirrored reduced words stay reduced, so each step is an ascent.
      if (!g.right_ascent(w, k)) throw std::logic_error("mirrored word is not reduced");
      w = g.right(w, k);
    }
    out.emplace_back(w, num);
  }
  return HeckeElement(n, HeckeElement::Data(a.data().den(), std::move(out)));
}

}  // namespace hecke
