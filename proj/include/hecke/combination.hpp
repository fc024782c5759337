#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/poly_gcd.hpp"
#include "hecke/ratfunc.hpp"

namespace hecke {

/// Sparse linear combination over Q(q) stored with one common denominator:
///
///     value = (1 / den) * sum_i num_i * basis(index_i)
///
/// with integer Laurent numerators. After normalize(), den has lowest
/// exponent 0 and positive leading coefficient, and den together with all
/// numerators has trivial gcd in Z[q]; that makes the representation unique,
/// so equality is structural. The algebra kernels work on integer
/// numerators only and never touch per-coefficient rational functions.
template <class Index = std::uint32_t>
class ScaledCombination {
 public:
  using Term = std::pair<Index, ZLaurent>;

  ScaledCombination() : den_(1) {}

  /// Takes ownership of unsorted terms (duplicates allowed) and normalizes.
  ScaledCombination(ZLaurent den, std::vector<Term> terms) : den_(std::move(den)), terms_(std::move(terms)) {
    sort_and_merge();
    normalize();
  }

  static ScaledCombination single(Index idx, const RatFunc& c) {
    if (c.is_zero()) return {};
    auto [n, d] = c.integer_form();
    std::vector<Term> terms;
    terms.emplace_back(idx, std::move(n));
    return ScaledCombination(std::move(d), std::move(terms));
  }

  const ZLaurent& den() const noexcept { return den_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const ZLaurent* find(Index idx) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx, [](const Term& t, Index i) { return t.first < i; });
    return (it != terms_.end() && it->first == idx) ? &it->second : nullptr;
  }

  RatFunc coefficient(Index idx) const {
    const ZLaurent* n = find(idx);
    return n ? RatFunc::from_integer(*n, den_) : RatFunc();
  }

  ScaledCombination operator-() const {
    ScaledCombination r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend ScaledCombination operator+(const ScaledCombination& a, const ScaledCombination& b) {
    return combine(a, b, false);
  }
  friend ScaledCombination operator-(const ScaledCombination& a, const ScaledCombination& b) {
    return combine(a, b, true);
  }

  friend ScaledCombination operator*(const RatFunc& c, const ScaledCombination& a) {
    if (c.is_zero() || a.is_zero()) return {};
    auto [n, d] = c.integer_form();
    std::vector<Term> terms;
    terms.reserve(a.terms_.size());
    for (const auto& [i, num] : a.terms_) terms.emplace_back(i, num * n);
    ScaledCombination r;
    r.den_ = a.den_ * d;
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
  }

  friend bool operator==(const ScaledCombination& a, const ScaledCombination& b) {
    return a.den_ == b.den_ && a.terms_ == b.terms_;
  }

  /// Relabels indices through f (must be injective) and re-sorts.
  template <class F>
  ScaledCombination relabeled(F&& f) const {
    ScaledCombination r = *this;
    for (auto& t : r.terms_) t.first = f(t.first);
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return r;
  }

 private:
  ZLaurent den_;
  std::vector<Term> terms_;

  void sort_and_merge() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(merged);
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (terms_.empty()) {
      den_ = ZLaurent(1);
      return;
    }
    if (den_.low_degree() != 0) den_ = den_.shifted(-den_.low_degree());
    if (sgn(den_.leading_coefficient()) < 0) {
      den_ = -den_;
      for (auto& t : terms_) t.second = -t.second;
    }
    ZLaurent g = den_;
    for (const auto& t : terms_) {
      if (g.is_one()) break;
      g = poly_gcd(g, t.second);
    }
    if (g.is_one()) return;
    den_ = exact_quotient(den_, g);
    for (auto& t : terms_) t.second = exact_quotient(t.second, g);
  }

  static ScaledCombination combine(const ScaledCombination& a, const ScaledCombination& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    ZLaurent ca(1), cb(1), den = a.den_;
    if (!(a.den_ == b.den_)) {
      const ZLaurent g = poly_gcd(a.den_, b.den_);
      ca = exact_quotient(b.den_, g);
      cb = exact_quotient(a.den_, g);
      den = a.den_ * ca;
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    auto scaled = [](const ZLaurent& n, const ZLaurent& c) { return c.is_one() ? n : n * c; };
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.emplace_back(ia->first, scaled(ia->second, ca));
        ++ia;
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        ZLaurent v = scaled(ib->second, cb);
        out.emplace_back(ib->first, subtract ? -v : v);
        ++ib;
      } else {
        ZLaurent v = scaled(ib->second, cb);
        ZLaurent s = subtract ? scaled(ia->second, ca) - v : scaled(ia->second, ca) + v;
        if (!s.is_zero()) out.emplace_back(ia->first, std::move(s));
        ++ia;
        ++ib;
      }
    }
    ScaledCombination r;
    r.den_ = std::move(den);
    r.terms_ = std::move(out);
    r.normalize();
    return r;
  }
};

}  // namespace hecke
