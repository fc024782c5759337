#pragma once

// Dense integer building blocks shared by the exact algebra products.
//
// A SlotArray holds one dense Laurent polynomial per basis slot inside a
// common exponent window. Products first run with checked 64-bit
// coefficients and are replayed with GMP integers if anything overflows;
// the two instantiations execute the same code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "hecke/laurent_poly.hpp"

namespace hecke::detail {

struct KernelOverflow {};

inline void add_to(std::int64_t& a, std::int64_t b) {
  if (__builtin_add_overflow(a, b, &a)) throw KernelOverflow{};
}
inline void sub_to(std::int64_t& a, std::int64_t b) {
  if (__builtin_sub_overflow(a, b, &a)) throw KernelOverflow{};
}
inline void addmul_to(std::int64_t& a, std::int64_t x, std::int64_t y) {
  std::int64_t t;
  if (__builtin_mul_overflow(x, y, &t) || __builtin_add_overflow(a, t, &a)) throw KernelOverflow{};
}
inline bool is_zero(std::int64_t a) { return a == 0; }

inline void add_to(Integer& a, const Integer& b) { mpz_add(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void sub_to(Integer& a, const Integer& b) { mpz_sub(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void addmul_to(Integer& a, const Integer& x, const Integer& y) {
  mpz_addmul(a.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

template <class Z>
Z from_integer(const Integer& v) {
  if constexpr (std::is_same_v<Z, std::int64_t>) {
    if (!v.fits_slong_p()) throw KernelOverflow{};
    return static_cast<std::int64_t>(v.get_si());
  } else {
    return v;
  }
}

template <class Z>
Integer to_integer(const Z& v) {
  if constexpr (std::is_same_v<Z, std::int64_t>) {
    return Integer(static_cast<long>(v));
  } else {
    return v;
  }
}

/// Small dense Laurent polynomial used as a multiplier.
template <class Z>
struct SmallPoly {
  int low = 0;
  std::vector<Z> c;

  static SmallPoly from(const ZLaurent& p) {
    SmallPoly s;
    if (p.is_zero()) return s;
    s.low = p.low_degree();
    s.c.assign(static_cast<std::size_t>(p.high_degree() - s.low + 1), Z(0));
    for (const auto& [e, v] : p.terms()) s.c[static_cast<std::size_t>(e - s.low)] = from_integer<Z>(v);
    return s;
  }
  int high() const { return low + static_cast<int>(c.size()) - 1; }
  bool is_unit_monomial() const { return c.size() == 1 && (c[0] == Z(1) || c[0] == Z(-1)); }
};

/// `slots` dense Laurent polynomials sharing the exponent window [base, base + width).
template <class Z>
class SlotArray {
 public:
  SlotArray() = default;
  SlotArray(std::size_t slots, int base, int width)
      : base_(base), width_(width), slots_(slots), coef_(slots * static_cast<std::size_t>(width), Z(0)),
        lo_(slots, 0), hi_(slots, 0) {}

  int base() const noexcept { return base_; }
  int width() const noexcept { return width_; }
  std::size_t slots() const noexcept { return slots_; }

  Z* row(std::size_t s) { return coef_.data() + s * static_cast<std::size_t>(width_); }
  const Z* row(std::size_t s) const { return coef_.data() + s * static_cast<std::size_t>(width_); }
  int lo(std::size_t s) const { return lo_[s]; }
  int hi(std::size_t s) const { return hi_[s]; }
  bool zero(std::size_t s) const { return lo_[s] >= hi_[s]; }

  void set(std::size_t s, const ZLaurent& p) {
    clear(s);
    if (p.is_zero()) return;
    const int l = p.low_degree() - base_;
    const int h = p.high_degree() - base_ + 1;
    if (l < 0 || h > width_) throw std::logic_error("polynomial outside kernel window");
    Z* r = row(s);
    for (const auto& [e, v] : p.terms()) r[e - base_] = from_integer<Z>(v);
    lo_[s] = l;
    hi_[s] = h;
  }

  void clear(std::size_t s) {
    Z* r = row(s);
    for (int i = lo_[s]; i < hi_[s]; ++i) r[i] = Z(0);
    lo_[s] = hi_[s] = 0;
  }

  void widen(std::size_t s, int l, int h) {
    if (l >= h) return;
    if (l < 0 || h > width_) throw std::logic_error("kernel window exceeded");
    if (zero(s)) {
      lo_[s] = l;
      hi_[s] = h;
    } else {
      lo_[s] = std::min(lo_[s], l);
      hi_[s] = std::max(hi_[s], h);
    }
  }

  void trim(std::size_t s) {
    const Z* r = row(s);
    int l = lo_[s];
    int h = hi_[s];
    while (l < h && is_zero(r[l])) ++l;
    while (h > l && is_zero(r[h - 1])) --h;
    if (l >= h) l = h = 0;
    lo_[s] = l;
    hi_[s] = h;
  }

  ZLaurent extract(std::size_t s) const {
    std::vector<ZLaurent::Term> terms;
    const Z* r = row(s);
    for (int i = lo_[s]; i < hi_[s]; ++i) {
      if (!is_zero(r[i])) terms.emplace_back(base_ + i, to_integer(r[i]));
    }
    return ZLaurent::from_terms(std::move(terms));
  }

  /// Swaps the contents of two slots.
  void swap_slots(std::size_t a, std::size_t b) {
    if (zero(a) && zero(b)) return;
    const int l = std::min(zero(a) ? width_ : lo_[a], zero(b) ? width_ : lo_[b]);
    const int h = std::max(hi_[a], hi_[b]);
    Z* ra = row(a);
    Z* rb = row(b);
    for (int i = l; i < h; ++i) std::swap(ra[i], rb[i]);
    std::swap(lo_[a], lo_[b]);
    std::swap(hi_[a], hi_[b]);
  }

  /// slot dst += sign * (q - q^-1) * slot src  (sign = +1 or -1).
  void add_deformation(std::size_t dst, std::size_t src, int sign) {
    if (zero(src)) return;
    const int l = lo_[src];
    const int h = hi_[src];
    widen(dst, l - 1, h + 1);
    Z* d = row(dst);
    const Z* r = row(src);
    for (int i = l; i < h; ++i) {
      if (is_zero(r[i])) continue;
      if (sign > 0) {
        add_to(d[i + 1], r[i]);
        sub_to(d[i - 1], r[i]);
      } else {
        sub_to(d[i + 1], r[i]);
        add_to(d[i - 1], r[i]);
      }
    }
    trim(dst);
  }

  /// slot dst += m * src_array[src_slot].
  void add_product(std::size_t dst, const SmallPoly<Z>& m, const SlotArray& src, std::size_t src_slot) {
    if (src.zero(src_slot) || m.c.empty()) return;
    const int offset = src.base_ + m.low - base_;
    const int l = src.lo_[src_slot] + offset;
    const int h = src.hi_[src_slot] + offset + static_cast<int>(m.c.size()) - 1;
    widen(dst, l, h);
    Z* d = row(dst);
    const Z* r = src.row(src_slot);
    const int sl = src.lo_[src_slot];
    const int sh = src.hi_[src_slot];
    if (m.is_unit_monomial()) {
      Z* t = d + offset;
      if (m.c[0] == Z(1)) {
        for (int i = sl; i < sh; ++i) add_to(t[i], r[i]);
      } else {
        for (int i = sl; i < sh; ++i) sub_to(t[i], r[i]);
      }
    } else {
      for (std::size_t j = 0; j < m.c.size(); ++j) {
        if (is_zero(m.c[j])) continue;
        Z* t = d + offset + static_cast<int>(j);
        for (int i = sl; i < sh; ++i) {
          if (!is_zero(r[i])) addmul_to(t[i], m.c[j], r[i]);
        }
      }
    }
    trim(dst);
  }

 private:
  int base_ = 0;
  int width_ = 0;
  std::size_t slots_ = 0;
  std::vector<Z> coef_;
  std::vector<int> lo_, hi_;
};

/// Splits numerators n_i = m_i * shape_g with m_i = +-q^k, so that products
/// can be accumulated per shape with additions only and multiplied by the
/// shape once at the end. Only shapes shared by several terms get their own
/// group; group 0 has shape 1 and also absorbs every remaining term with
/// m_i = n_i.
struct GroupPlan {
  std::vector<ZLaurent> shapes;
  std::vector<int> group_of;
  std::vector<ZLaurent> multiplier;
};

inline GroupPlan plan_groups(const std::vector<const ZLaurent*>& nums, std::size_t max_groups) {
  GroupPlan plan;
  plan.shapes.emplace_back(1);
  plan.group_of.assign(nums.size(), 0);
  plan.multiplier.resize(nums.size());

  std::vector<ZLaurent> shape(nums.size());
  std::vector<ZLaurent> mono(nums.size());
  std::map<std::string, std::size_t> count;
  for (std::size_t i = 0; i < nums.size(); ++i) {
    const ZLaurent& n = *nums[i];
    const int s = sgn(n.leading_coefficient()) < 0 ? -1 : 1;
    mono[i] = ZLaurent::monomial(Integer(s), n.low_degree());
    shape[i] = n.shifted(-n.low_degree());
    if (s < 0) shape[i] = -shape[i];
    if (shape[i].size() > 1) ++count[shape[i].to_string()];
  }
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (auto& [k, c] : count) {
    if (c >= 2) ranked.emplace_back(c, k);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::map<std::string, int> group_id;
  for (const auto& r : ranked) {
    if (group_id.size() + 1 >= max_groups) break;
    group_id.emplace(r.second, static_cast<int>(group_id.size()) + 1);
  }
  plan.shapes.resize(group_id.size() + 1);
  for (std::size_t i = 0; i < nums.size(); ++i) {
    if (shape[i].size() == 1) {
      plan.group_of[i] = 0;
      plan.multiplier[i] = *nums[i];
      continue;
    }
    auto it = group_id.find(shape[i].to_string());
    if (it == group_id.end()) {
      plan.group_of[i] = 0;
      plan.multiplier[i] = *nums[i];
    } else {
      plan.group_of[i] = it->second;
      plan.multiplier[i] = mono[i];
      plan.shapes[static_cast<std::size_t>(it->second)] = shape[i];
    }
  }
  return plan;
}

/// Exponent range [lo, hi] covering a set of numerators.
struct ExponentRange {
  int lo = 0;
  int hi = 0;
  bool empty = true;
  void include(const ZLaurent& p) {
    if (p.is_zero()) return;
    if (empty) {
      lo = p.low_degree();
      hi = p.high_degree();
      empty = false;
    } else {
      lo = std::min(lo, p.low_degree());
      hi = std::max(hi, p.high_degree());
    }
  }
};

/// sum_g shape_g * acc_g[slot], as an exact Laurent polynomial.
template <class Z>
ZLaurent combine_groups(const std::vector<SmallPoly<Z>>& shapes, const std::vector<SlotArray<Z>>& acc,
                        std::size_t slot) {
  int lo = 0;
  int hi = -1;
  bool any = false;
  for (std::size_t g = 0; g < acc.size(); ++g) {
    if (acc[g].zero(slot)) continue;
    const int l = acc[g].base() + acc[g].lo(slot) + shapes[g].low;
    const int h = acc[g].base() + acc[g].hi(slot) - 1 + shapes[g].high();
    lo = any ? std::min(lo, l) : l;
    hi = any ? std::max(hi, h) : h;
    any = true;
  }
  if (!any) return {};
  std::vector<Z> out(static_cast<std::size_t>(hi - lo + 1), Z(0));
  for (std::size_t g = 0; g < acc.size(); ++g) {
    if (acc[g].zero(slot)) continue;
    const Z* r = acc[g].row(slot);
    for (std::size_t j = 0; j < shapes[g].c.size(); ++j) {
      const Z& m = shapes[g].c[j];
      if (is_zero(m)) continue;
      for (int i = acc[g].lo(slot); i < acc[g].hi(slot); ++i) {
        if (is_zero(r[i])) continue;
        const int e = acc[g].base() + i + shapes[g].low + static_cast<int>(j);
        addmul_to(out[static_cast<std::size_t>(e - lo)], m, r[i]);
      }
    }
  }
  std::vector<ZLaurent::Term> terms;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!is_zero(out[i])) terms.emplace_back(lo + static_cast<int>(i), to_integer(out[i]));
  }
  return ZLaurent::from_terms(std::move(terms));
}

/// Number of accumulator groups that fit a memory budget.
inline std::size_t group_budget(std::size_t slots, int width, std::size_t coef_bytes) {
  constexpr std::size_t kBudgetBytes = std::size_t{768} << 20;
  const std::size_t per = slots * static_cast<std::size_t>(std::max(width, 1)) * coef_bytes;
  return std::clamp<std::size_t>(kBudgetBytes / std::max<std::size_t>(per, 1), 1, 16);
}

}  // namespace hecke::detail
