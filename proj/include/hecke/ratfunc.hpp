#pragma once

#include <complex>
#include <string>
#include <utility>

#include "hecke/errors.hpp"
#include "hecke/laurent_poly.hpp"
#include "hecke/poly_gcd.hpp"

namespace hecke {

/// Element of Q(q) held in canonical form num / den.
///
/// Canonical form: den has lowest exponent 0 and leading coefficient +1, and
/// num, den are coprime in Q[q]. Two values are equal iff their canonical
/// forms are identical.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                     // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}          // NOLINT(google-explicit-constructor)
  RatFunc(QLaurent p) : num_(std::move(p)), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(QLaurent num, QLaurent den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  /// num / den with integer Laurent numerator and denominator.
  static RatFunc from_integer(const ZLaurent& num, const ZLaurent& den) {
    return RatFunc(to_rational(num), to_rational(den));
  }

  static RatFunc q_power(int k) { return RatFunc(QLaurent::q_power(k)); }

  const QLaurent& num() const noexcept { return num_; }
  const QLaurent& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Value at a complex point; throws PoleAtGamma when |den(q)| < tol.
  std::complex<double> evaluate(std::complex<double> q, double tol = 1e-12) const {
    const auto d = den_.evaluate(q);
    if (std::abs(d) < tol) throw PoleAtGamma("denominator vanishes at q = (" + std::to_string(q.real()) + ", " +
                                             std::to_string(q.imag()) + ")");
    return num_.evaluate(q) / d;
  }

  /// Exact value at a rational point.
  Rational evaluate(const Rational& q) const {
    Rational d = den_.evaluate(q);
    if (sgn(d) == 0) throw DivisionByZero();
    return num_.evaluate(q) / d;
  }

  /// `num / den`, or just `num` when den = 1.
  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

  /// Splits into integer num / den with den primitive, lowest exponent 0, positive leading coefficient.
  std::pair<ZLaurent, ZLaurent> integer_form() const {
    Integer ln = denominator_lcm(num_);
    Integer ld = denominator_lcm(den_);
    ZLaurent n = to_integer(num_, ln * ld);
    ZLaurent d = to_integer(den_, ln * ld);
    Integer g = gcd(integer_content(n), integer_content(d));
    if (g != 1) {
      n = to_integer(num_, ln * ld / g);
      d = to_integer(den_, ln * ld / g);
    }
    return {n, d};
  }

 private:
  QLaurent num_;
  QLaurent den_;

  static QLaurent to_rational(const ZLaurent& p) {
    std::vector<QLaurent::Term> terms;
    terms.reserve(p.size());
    for (const auto& [e, c] : p.terms()) terms.emplace_back(e, Rational(c));
    return QLaurent::from_terms(std::move(terms));
  }

  static Integer denominator_lcm(const QLaurent& p) {
    Integer l = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
  }

  static ZLaurent to_integer(const QLaurent& p, const Integer& scale) {
    std::vector<ZLaurent::Term> terms;
    terms.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
      Rational v = c * Rational(scale);
      terms.emplace_back(e, v.get_num());
    }
    return ZLaurent::from_terms(std::move(terms));
  }

  void canonicalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = QLaurent(1);
      return;
    }
    if (den_.size() == 1) {
      // Monomial denominator: no gcd needed.
      const auto& [e, c] = den_.terms().front();
      num_ = num_.shifted(-e) * Rational(1 / c);
      den_ = QLaurent(1);
      return;
    }
    const Integer scale = denominator_lcm(num_) * denominator_lcm(den_);
    ZLaurent n = to_integer(num_, scale);
    ZLaurent d = to_integer(den_, scale);
    const int shift = n.low_degree() - d.low_degree();
    auto nd = detail::to_dense(n);
    auto dd = detail::to_dense(d);
    auto g = detail::gcd_dense(nd, dd);
    if (g.size() > 1 || g[0] != 1) {
      nd = detail::divide_exact(nd, g);
      dd = detail::divide_exact(dd, g);
    }
    const Rational lead = Rational(dd.back());
    QLaurent num;
    QLaurent den;
    {
      std::vector<QLaurent::Term> terms;
      for (std::size_t i = 0; i < nd.size(); ++i) {
        if (sgn(nd[i]) != 0) terms.emplace_back(shift + static_cast<int>(i), Rational(nd[i]) / lead);
      }
      num = QLaurent::from_terms(std::move(terms));
    }
    {
      std::vector<QLaurent::Term> terms;
      for (std::size_t i = 0; i < dd.size(); ++i) {
        if (sgn(dd[i]) != 0) terms.emplace_back(static_cast<int>(i), Rational(dd[i]) / lead);
      }
      den = QLaurent::from_terms(std::move(terms));
    }
    num_ = std::move(num);
    den_ = std::move(den);
  }
};

inline RatFunc operator+(const RatFunc& a, long b) { return a + RatFunc(b); }
inline RatFunc operator-(const RatFunc& a, long b) { return a - RatFunc(b); }
inline RatFunc operator*(long a, const RatFunc& b) { return RatFunc(a) * b; }

}  // namespace hecke
