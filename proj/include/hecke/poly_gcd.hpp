#pragma once

// Integer polynomial algorithms over Z[q, q^-1].
//
// q is a unit in the Laurent ring, so gcds ignore powers of q: every gcd
// returned here is an ordinary polynomial with nonzero constant term and a
// positive leading coefficient.

#include <cstddef>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/laurent_poly.hpp"

namespace hecke {
namespace detail {

/// Dense coefficient vector, index i holds the coefficient of q^(low + i).
/// Conversions from Laurent form start at the lowest exponent, which strips
/// the q-power.
using DenseZ = std::vector<Integer>;

inline void trim(DenseZ& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline DenseZ to_dense(const ZLaurent& p) {
  DenseZ d;
  if (p.is_zero()) return d;
  const int lo = p.low_degree();
  d.resize(static_cast<std::size_t>(p.high_degree() - lo + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

inline ZLaurent from_dense(const DenseZ& d, int low = 0) {
  std::vector<ZLaurent::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) != 0) terms.emplace_back(low + static_cast<int>(i), d[i]);
  }
  return ZLaurent::from_terms(std::move(terms));
}

inline Integer content(const DenseZ& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void divide_exact(DenseZ& p, const Integer& c) {
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

inline void make_primitive(DenseZ& p) {
  trim(p);
  if (p.empty()) return;
  Integer c = content(p);
  if (sgn(p.back()) < 0) c = -c;
  if (c != 1) divide_exact(p, c);
}

/// Pseudo-remainder of a by b (b nonzero).
inline DenseZ pseudo_remainder(DenseZ a, const DenseZ& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    make_primitive(a);
  }
  return a;
}

inline DenseZ gcd_dense(DenseZ a, DenseZ b) {
  trim(a);
  trim(b);
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (!a.empty() && sgn(a.back()) < 0) {
      for (auto& x : a) x = -x;
    }
    return a;
  }
  Integer g = gcd(content(a), content(b));
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    DenseZ r = pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  for (auto& x : a) x *= g;
  return a;
}

/// Exact quotient a / b of dense polynomials; throws if b does not divide a.
inline DenseZ divide_exact(const DenseZ& a, const DenseZ& b) {
  if (b.empty()) throw DivisionByZero();
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error("polynomial division is not exact");
  DenseZ rem = a;
  DenseZ quot(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) throw Error("polynomial division is not exact");
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= quot[k] * b[i];
  }
  trim(rem);
  if (!rem.empty()) throw Error("polynomial division is not exact");
  return quot;
}

}  // namespace detail

/// gcd in Z[q] of the q-power-free parts of a and b, positive leading coefficient.
inline ZLaurent poly_gcd(const ZLaurent& a, const ZLaurent& b) {
  return detail::from_dense(detail::gcd_dense(detail::to_dense(a), detail::to_dense(b)));
}

/// a / g for a polynomial g with nonzero constant term dividing a in Z[q, q^-1].
inline ZLaurent exact_quotient(const ZLaurent& a, const ZLaurent& g) {
  if (a.is_zero()) return {};
  auto gd = detail::to_dense(g);
  return detail::from_dense(detail::divide_exact(detail::to_dense(a), gd), a.low_degree() - g.low_degree());
}

inline Integer integer_content(const ZLaurent& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace hecke
