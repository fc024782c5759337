#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sparse Laurent polynomial  sum_k c_k q^k  over a GMP coefficient ring.
///
/// Terms are kept sorted by ascending exponent and never hold a zero
/// coefficient, so structural equality is mathematical equality.
template <class Coeff>
class LaurentPoly {
 public:
  using Term = std::pair<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(const Coeff& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) terms_.emplace_back(0, c);
  }
  LaurentPoly(long c) : LaurentPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Coeff& c, int exponent) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace_back(exponent, c);
    return p;
  }
  static LaurentPoly q_power(int exponent) { return monomial(Coeff(1), exponent); }

  /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
      } else {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    p.drop_zeros();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int low_degree() const { return terms_.empty() ? 0 : terms_.front().first; }
  int high_degree() const { return terms_.empty() ? 0 : terms_.back().first; }
  Coeff leading_coefficient() const { return terms_.empty() ? Coeff(0) : terms_.back().second; }
  Coeff trailing_coefficient() const { return terms_.empty() ? Coeff(0) : terms_.front().second; }

  Coeff coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exponent) ? it->second : Coeff(0);
  }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
  }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += k;
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = merge(*this, o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = merge(*this, o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly& operator*=(const Coeff& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int lo = a.low_degree() + b.low_degree();
    const int hi = a.high_degree() + b.high_degree();
    std::vector<Coeff> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    }
    LaurentPoly p;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (sgn(acc[i]) != 0) p.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
    }
    return p;
  }

  friend LaurentPoly operator*(const Coeff& c, LaurentPoly p) { return p *= c; }
  friend LaurentPoly operator*(LaurentPoly p, const Coeff& c) { return p *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::complex<double> evaluate(std::complex<double> q) const {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(q, e);
    return sum;
  }

  /// Exact evaluation at a nonzero rational point.
  Rational evaluate(const Rational& q) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += Rational(c) * rational_power(q, e);
    return sum;
  }

  /// `c_k*q^k + ...` with exponents descending; the q^0 term prints as a bare constant.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = sgn(c) < 0;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      os << Coeff(abs(c)).get_str();
      if (e != 0) os << "*q^" << e;
      first = false;
    }
    return os.str();
  }

 private:
  std::vector<Term> terms_;

  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.second) == 0; }),
                 terms_.end());
  }

  static Rational rational_power(const Rational& q, int e) {
    Rational r = 1;
    Rational base = e >= 0 ? q : Rational(1) / q;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) r *= base;
    return r;
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.emplace_back(ib->first, subtract ? Coeff(-ib->second) : ib->second);
        ++ib;
      } else {
        Coeff c = subtract ? Coeff(ia->second - ib->second) : Coeff(ia->second + ib->second);
        if (sgn(c) != 0) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }
};

using QLaurent = LaurentPoly<Rational>;
using ZLaurent = LaurentPoly<Integer>;

}  // namespace hecke
