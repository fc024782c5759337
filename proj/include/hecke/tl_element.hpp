#pragma once

#include <array>
#include <complex>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hecke/combination.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/kernel.hpp"
#include "hecke/qint.hpp"
#include "hecke/tl_diagram.hpp"

namespace hecke {

/// Element of TL_N(Q), Q = [2], in the diagram basis.
class TLElement {
 public:
  using Index = TLBasis::Index;
  using Data = ScaledCombination<Index>;

  TLElement() : n_(1) {}
  explicit TLElement(int n) : n_(n) { TLBasis::get(n); }
  TLElement(int n, Data data) : n_(n), data_(std::move(data)) {}

  static TLElement identity(int n) { return scalar(n, RatFunc(1)); }
  static TLElement scalar(int n, const RatFunc& c) {
    return TLElement(n, Data::single(TLBasis::get(n).identity_index(), c));
  }
  static TLElement basis(const TLDiagram& d, const RatFunc& c = RatFunc(1)) {
    return TLElement(d.rank(), Data::single(TLBasis::get(d.rank()).index_of(d), c));
  }

  int rank() const noexcept { return n_; }
  const Data& data() const noexcept { return data_; }
  bool is_zero() const noexcept { return data_.is_zero(); }
  std::size_t size() const noexcept { return data_.size(); }

  RatFunc coefficient(const TLDiagram& d) const { return data_.coefficient(TLBasis::get(n_).index_of(d)); }

  /// `(coeff) * D[arcs] + ...` in basis order; `0` for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    const auto& b = TLBasis::get(n_);
    std::string out;
    for (const auto& [idx, num] : data_.terms()) {
      if (!out.empty()) out += " + ";
      out += "(" + RatFunc::from_integer(num, data_.den()).to_string() + ") * D[" + b.diagram(idx).to_string() + "]";
    }
    return out;
  }

  TLElement operator-() const { return TLElement(n_, -data_); }
  friend TLElement operator+(const TLElement& a, const TLElement& b) {
    check_ranks(a, b);
    return TLElement(a.n_, a.data_ + b.data_);
  }
  friend TLElement operator-(const TLElement& a, const TLElement& b) {
    check_ranks(a, b);
    return TLElement(a.n_, a.data_ - b.data_);
  }
  friend TLElement operator*(const RatFunc& c, const TLElement& a) { return TLElement(a.n_, c * a.data_); }
  friend TLElement operator*(const TLElement& a, const TLElement& b);
  TLElement& operator+=(const TLElement& o) { return *this = *this + o; }

  friend bool operator==(const TLElement& a, const TLElement& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  static void check_ranks(const TLElement& a, const TLElement& b) {
    if (a.n_ != b.n_) throw RankMismatch("TL elements of different rank combined");
  }

 private:
  int n_;
  Data data_;
};

/// E_k, the cup-cap at strands k, k+1.
inline TLElement tl_generator(int n, int k) { return TLElement::basis(TLDiagram::generator(n, k)); }

namespace detail {

/// sum_{x,y} a_x b_y [2]^{loops(x,y)} (x o y). The numerators a_x [2]^l are
/// tabulated once; b's numerators are split into shape groups as in the
/// Hecke kernel, so the pair loop only shifts and adds.
template <class Z>
ScaledCombination<TLBasis::Index> tl_product(const TLBasis& basis, const ScaledCombination<TLBasis::Index>& a,
                                             const ScaledCombination<TLBasis::Index>& b) {
  using Index = TLBasis::Index;
  const int n = basis.rank();
  const std::size_t na = a.terms().size();
  const int levels = n + 1;  // loops <= n

  ExponentRange ar;
  for (const auto& t : a.terms()) ar.include(t.second);
  SlotArray<Z> pre(na * static_cast<std::size_t>(levels), ar.lo - n, ar.hi - ar.lo + 2 * n + 1);
  {
    ZLaurent two = ZLaurent::q_power(1) + ZLaurent::q_power(-1);
    std::vector<ZLaurent> pow(static_cast<std::size_t>(levels), ZLaurent(1));
    for (int l = 1; l < levels; ++l) pow[static_cast<std::size_t>(l)] = pow[static_cast<std::size_t>(l - 1)] * two;
    for (std::size_t i = 0; i < na; ++i) {
      for (int l = 0; l < levels; ++l) {
        pre.set(i * static_cast<std::size_t>(levels) + static_cast<std::size_t>(l),
                a.terms()[i].second * pow[static_cast<std::size_t>(l)]);
      }
    }
  }

  std::vector<const ZLaurent*> nums;
  for (const auto& t : b.terms()) nums.push_back(&t.second);
  ExponentRange mr;
  for (const auto& t : b.terms()) mr.include(t.second);
  const Index dim = basis.size();
  const GroupPlan plan = plan_groups(nums, group_budget(dim, pre.width() + mr.hi - mr.lo, sizeof(Z)));
  std::vector<ExponentRange> group_range(plan.shapes.size());
  for (std::size_t i = 0; i < nums.size(); ++i) group_range[plan.group_of[i]].include(plan.multiplier[i]);
  std::vector<SlotArray<Z>> acc;
  for (const auto& r : group_range) acc.emplace_back(dim, pre.base() + r.lo, pre.width() + r.hi - r.lo);

  for (std::size_t j = 0; j < nums.size(); ++j) {
    const Index y = b.terms()[j].first;
    const SmallPoly<Z> m = SmallPoly<Z>::from(plan.multiplier[j]);
    auto& target = acc[static_cast<std::size_t>(plan.group_of[j])];
    for (std::size_t i = 0; i < na; ++i) {
      const auto [z, loops] = basis.compose(a.terms()[i].first, y);
      target.add_product(z, m, pre, i * static_cast<std::size_t>(levels) + static_cast<std::size_t>(loops));
    }
  }

  std::vector<SmallPoly<Z>> shapes;
  for (const auto& s : plan.shapes) shapes.push_back(SmallPoly<Z>::from(s));
  std::vector<std::pair<Index, ZLaurent>> out;
  for (Index u = 0; u < dim; ++u) {
    ZLaurent c = combine_groups(shapes, acc, u);
    if (!c.is_zero()) out.emplace_back(u, std::move(c));
  }
  return ScaledCombination<Index>(a.den() * b.den(), std::move(out));
}

}  // namespace detail

inline TLElement operator*(const TLElement& a, const TLElement& b) {
  TLElement::check_ranks(a, b);
  if (a.is_zero() || b.is_zero()) return TLElement(a.rank());
  const auto& basis = TLBasis::get(a.rank());
  try {
    return TLElement(a.rank(), detail::tl_product<std::int64_t>(basis, a.data(), b.data()));
  } catch (const detail::KernelOverflow&) {
    return TLElement(a.rank(), detail::tl_product<Integer>(basis, a.data(), b.data()));
  }
}

/// Places an N-strand diagram on strands shift+1..shift+N of a target_rank diagram.
inline TLDiagram shift_diagram(const TLDiagram& d, int target_rank, int shift) {
  const int n = d.rank();
  std::vector<int> p(static_cast<std::size_t>(2 * target_rank));
  for (int i = 0; i < target_rank; ++i) {
    p[static_cast<std::size_t>(i)] = target_rank + i;
    p[static_cast<std::size_t>(target_rank + i)] = i;
  }
  auto map = [&](int point) { return point < n ? point + shift : target_rank + (point - n) + shift; };
  for (int point = 0; point < 2 * n; ++point) p[static_cast<std::size_t>(map(point))] = map(d.partner(point));
  return TLDiagram(target_rank, p);
}

/// Image of a under E_k -> E_{k+shift} inside TL_{target_rank}.
inline TLElement shift_embed(const TLElement& a, int target_rank, int shift = 0) {
  if (shift < 0) throw PreconditionError("shift must be non-negative");
  if (target_rank < a.rank() + shift) throw RankOverflow("TL embedding does not fit the target rank");
  const auto& src = TLBasis::get(a.rank());
  const auto& dst = TLBasis::get(target_rank);
  std::vector<std::pair<TLElement::Index, ZLaurent>> out;
  for (const auto& [idx, num] : a.data().terms()) {
    out.emplace_back(dst.index_of(shift_diagram(src.diagram(idx), target_rank, shift)), num);
  }
  return TLElement(target_rank, TLElement::Data(a.data().den(), std::move(out)));
}

/// Left-right reflection, E_k -> E_{N-k}.
inline TLElement phi(const TLElement& a) {
  const int n = a.rank();
  const auto& b = TLBasis::get(n);
  std::vector<std::pair<TLElement::Index, ZLaurent>> out;
  for (const auto& [idx, num] : a.data().terms()) {
    const TLDiagram d = b.diagram(idx);
    auto mirror = [&](int point) { return point < n ? n - 1 - point : n + (2 * n - 1 - point); };
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int point = 0; point < 2 * n; ++point) p[static_cast<std::size_t>(mirror(point))] = mirror(d.partner(point));
    out.emplace_back(b.index_of(TLDiagram(n, p)), num);
  }
  return TLElement(n, TLElement::Data(a.data().den(), std::move(out)));
}

namespace detail {

inline TLElement next_jones_wenzl(const TLElement& p, int n) {
  const TLElement pe = shift_embed(p, n + 1);
  return pe - rho(n) * ((pe * tl_generator(n + 1, n)) * pe);
}

inline const TLElement& minimal_jones_wenzl(int n) {
  if (n < 1 || n > kMaxTLRank) throw RankOverflow("TL rank outside 1.." + std::to_string(kMaxTLRank));
  static std::vector<TLElement> levels;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (levels.empty()) levels.push_back(TLElement::identity(1));
  while (static_cast<int>(levels.size()) < n) {
    const int m = static_cast<int>(levels.size());
    levels.push_back(next_jones_wenzl(levels.back(), m));
  }
  return levels[static_cast<std::size_t>(n - 1)];
}

}  // namespace detail

/// JW_1 .. JW_max_n, each embedded in TL_{max_n}; index 0 unused.
inline std::vector<TLElement> jones_wenzl(int max_n) {
  if (max_n < 1) throw PreconditionError("max_n must be at least 1");
  std::vector<TLElement> out(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) out[static_cast<std::size_t>(n)] = shift_embed(detail::minimal_jones_wenzl(n), max_n);
  return out;
}

inline TLElement tl_projector(int n, int host_rank) {
  return shift_embed(detail::minimal_jones_wenzl(n), host_rank);
}
inline TLElement tl_shifted_projector(int n, int host_rank) {
  if (host_rank < n + 1) throw RankOverflow("shifted projector needs host rank at least N+1");
  return shift_embed(detail::minimal_jones_wenzl(n), host_rank, 1);
}

/// The quotient H_N(q) -> TL_N([2]), T_k -> E_k, i.e. R_k -> E_k - q^-1.
inline TLElement quotient_map(const HeckeElement& a) {
  const int n = a.rank();
  const auto& g = SymmetricGroup::get(n);
  std::vector<TLElement> image(g.order());
  std::vector<std::uint8_t> done(g.order(), 0);
  image[g.identity_index()] = TLElement::identity(n);
  done[g.identity_index()] = 1;
  auto image_of = [&](auto&& self, SymmetricGroup::Index w) -> const TLElement& {
    if (!done[w]) {
      const TLElement r = tl_generator(n, g.right_letter(w)) - TLElement::scalar(n, RatFunc::q_power(-1));
      image[w] = self(self, g.right_parent(w)) * r;
      done[w] = 1;
    }
    return image[w];
  };
  TLElement out(n);
  for (const auto& [idx, num] : a.data().terms()) {
    out += RatFunc::from_integer(num, a.data().den()) * image_of(image_of, idx);
  }
  return out;
}

/// Floating-point TL_N at a fixed q; dense over the diagram basis.
class NumericTL {
 public:
  using cplx = std::complex<double>;

  NumericTL() = default;
  NumericTL(int n, cplx q) : n_(n), q_(q), c_(TLBasis::get(n).size(), cplx(0.0)) {}

  static NumericTL identity(int n, cplx q) {
    NumericTL r(n, q);
    r.c_[TLBasis::get(n).identity_index()] = 1.0;
    return r;
  }
  static NumericTL scalar(int n, cplx q, cplx s) {
    NumericTL r = identity(n, q);
    r.c_[TLBasis::get(n).identity_index()] = s;
    return r;
  }
  static NumericTL generator(int n, cplx q, int k) {
    NumericTL r(n, q);
    r.c_[TLBasis::get(n).index_of(TLDiagram::generator(n, k))] = 1.0;
    return r;
  }
  static NumericTL evaluate(const TLElement& a, cplx q) {
    NumericTL r(a.rank(), q);
    const cplx den = a.data().den().evaluate(q);
    if (std::abs(den) < 1e-12) throw PoleAtQ("coefficient denominator vanishes at the requested q");
    for (const auto& [idx, num] : a.data().terms()) r.c_[idx] = num.evaluate(q) / den;
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

  friend NumericTL operator+(NumericTL a, const NumericTL& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_.at(i);
    return a;
  }
  friend NumericTL operator-(NumericTL a, const NumericTL& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_.at(i);
    return a;
  }
  friend NumericTL operator*(cplx s, NumericTL a) {
    for (auto& v : a.c_) v *= s;
    return a;
  }
  friend NumericTL operator*(const NumericTL& a, const NumericTL& b) {
    if (a.n_ != b.n_) throw RankMismatch("numeric TL elements of different rank");
    const auto& basis = TLBasis::get(a.n_);
    NumericTL out(a.n_, a.q_);
    std::vector<cplx> loop(static_cast<std::size_t>(a.n_) + 1, 1.0);
    for (std::size_t l = 1; l < loop.size(); ++l) loop[l] = loop[l - 1] * (a.q_ + 1.0 / a.q_);
    for (TLBasis::Index y = 0; y < basis.size(); ++y) {
      if (b.c_[y] == cplx(0.0)) continue;
      for (TLBasis::Index x = 0; x < basis.size(); ++x) {
        if (a.c_[x] == cplx(0.0)) continue;
        const auto [z, loops] = basis.compose(x, y);
        out.c_[z] += a.c_[x] * b.c_[y] * loop[static_cast<std::size_t>(loops)];
      }
    }
    return out;
  }

 private:
  int n_ = 1;
  cplx q_ = 1.0;
  std::vector<cplx> c_;
};

inline NumericTL shift_embed(const NumericTL& a, int target_rank, int shift = 0) {
  if (target_rank < a.rank() + shift) throw RankOverflow("TL embedding does not fit the target rank");
  const auto& src = TLBasis::get(a.rank());
  const auto& dst = TLBasis::get(target_rank);
  NumericTL r(target_rank, a.q());
  for (TLBasis::Index i = 0; i < src.size(); ++i) {
    const auto v = a.coefficients()[i];
    if (v == std::complex<double>(0.0)) continue;
    r.coefficients()[dst.index_of(shift_diagram(src.diagram(i), target_rank, shift))] = v;
  }
  return r;
}

inline double relative_error(const NumericTL& l, const NumericTL& r) {
  const double scale = std::max({l.norm_inf(), r.norm_inf(), 1.0});
  return (l - r).norm_inf() / scale;
}

}  // namespace hecke
