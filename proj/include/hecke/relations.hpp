#pragma once

// Backends and relation formulas.
//
// Each relation is written once as a template over an algebra backend
// providing one(), zero(), t(k), projector(n), shifted_projector(n),
// qint(k), rho(k) and constant(c). The exact backends certify; the numeric
// backends evaluate the same formulas at a fixed q for the oracle. Products
// are formed left to right, so the right factor is a generator or a
// projector.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/numeric_hecke.hpp"
#include "hecke/projector.hpp"
#include "hecke/qint.hpp"
#include "hecke/tl_element.hpp"

namespace hecke {

class ExactHeckeBackend {
 public:
  using Element = HeckeElement;
  using Scalar = RatFunc;

  explicit ExactHeckeBackend(int host) : host_(host) {}
  int host() const noexcept { return host_; }

  Element one() const { return HeckeElement::identity(host_); }
  Element zero() const { return HeckeElement(host_); }
  Element t(int k) const { return generator_T(host_, k); }
  Element projector(int n) const { return hecke::projector(n, host_); }
  Element shifted_projector(int n) const { return hecke::shifted_projector(n, host_); }
  Element projector_r_form(int n) const { return shift_embed(build_tower_R(n)[n], host_); }
  Element phi(const Element& a) const { return hecke::phi(a); }

  Scalar qint(int k) const { return quantum(k); }
  Scalar rho(int k) const { return hecke::rho(k); }
  Scalar constant(long c) const { return RatFunc(c); }

  static bool is_zero(const Element& a) { return a.is_zero(); }

 private:
  int host_;
};

class NumericHeckeBackend {
 public:
  using Element = NumericHecke;
  using Scalar = cplx;

  NumericHeckeBackend(int host, cplx q) : host_(host), q_(q) {}
  int host() const noexcept { return host_; }
  cplx q() const noexcept { return q_; }

  Element one() const { return NumericHecke::identity(host_, q_); }
  Element zero() const { return NumericHecke(host_, q_); }
  Element t(int k) const { return NumericHecke::generator_T(host_, q_, k); }
  Element projector(int n) const { return shift_embed(minimal(n, false), host_); }
  Element shifted_projector(int n) const {
    if (host_ < n + 1) throw RankOverflow("P'_N needs host rank at least N+1");
    return shift_embed(minimal(n, false), host_, 1);
  }
  Element projector_r_form(int n) const { return shift_embed(minimal(n, true), host_); }
  Element phi(const Element& a) const { return hecke::phi(a); }

  Scalar qint(int k) const { return qint_value(k, q_); }
  Scalar rho(int k) const { return qint(k) / qint(k + 1); }
  Scalar constant(long c) const { return static_cast<double>(c); }

 private:
  int host_;
  cplx q_;
  mutable std::map<std::pair<int, bool>, NumericHecke> cache_;

  // P_n in H_n by the floating-point recursion; r_form selects the R-generator version.
  const NumericHecke& minimal(int n, bool r_form) const {
    auto it = cache_.find({n, r_form});
    if (it != cache_.end()) return it->second;
    NumericHecke p = NumericHecke::identity(1, q_);
    for (int m = 1; m < n; ++m) {
      const NumericHecke pe = shift_embed(p, m + 1);
      const NumericHecke tm = NumericHecke::generator_T(m + 1, q_, m);
      if (!r_form) {
        p = pe - (qint_value(m, q_) / qint_value(m + 1, q_)) * ((pe * tm) * pe);
      } else {
        const NumericHecke rm = tm - NumericHecke::scalar(m + 1, q_, 1.0 / q_);
        const NumericHecke mid = NumericHecke::scalar(m + 1, q_, std::pow(q_, m)) - qint_value(m, q_) * rm;
        p = (1.0 / qint_value(m + 1, q_)) * ((pe * mid) * pe);
      }
    }
    return cache_.emplace(std::make_pair(n, r_form), std::move(p)).first->second;
  }
};

class ExactTLBackend {
 public:
  using Element = TLElement;
  using Scalar = RatFunc;

  explicit ExactTLBackend(int host) : host_(host) {}
  int host() const noexcept { return host_; }

  Element one() const { return TLElement::identity(host_); }
  Element zero() const { return TLElement(host_); }
  Element t(int k) const { return tl_generator(host_, k); }
  Element projector(int n) const { return tl_projector(n, host_); }
  Element shifted_projector(int n) const { return tl_shifted_projector(n, host_); }
  Element projector_r_form(int) const { throw PreconditionError("the R-form recursion is defined for H_N only"); }
  Element phi(const Element& a) const { return hecke::phi(a); }

  Scalar qint(int k) const { return quantum(k); }
  Scalar rho(int k) const { return hecke::rho(k); }
  Scalar constant(long c) const { return RatFunc(c); }

 private:
  int host_;
};

class NumericTLBackend {
 public:
  using Element = NumericTL;
  using Scalar = cplx;

  NumericTLBackend(int host, cplx q) : host_(host), q_(q) {}
  int host() const noexcept { return host_; }

  Element one() const { return NumericTL::identity(host_, q_); }
  Element zero() const { return NumericTL(host_, q_); }
  Element t(int k) const { return NumericTL::generator(host_, q_, k); }
  Element projector(int n) const { return shift_embed(minimal(n), host_); }
  Element shifted_projector(int n) const {
    if (host_ < n + 1) throw RankOverflow("shifted projector needs host rank at least N+1");
    return shift_embed(minimal(n), host_, 1);
  }
  Element projector_r_form(int) const { throw PreconditionError("the R-form recursion is defined for H_N only"); }
  Element phi(const Element&) const { throw PreconditionError("reflection is not modelled numerically for TL"); }

  Scalar qint(int k) const { return qint_value(k, q_); }
  Scalar rho(int k) const { return qint(k) / qint(k + 1); }
  Scalar constant(long c) const { return static_cast<double>(c); }

 private:
  int host_;
  cplx q_;
  mutable std::map<int, NumericTL> cache_;

  const NumericTL& minimal(int n) const {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    NumericTL p = NumericTL::identity(1, q_);
    for (int m = 1; m < n; ++m) {
      const NumericTL pe = shift_embed(p, m + 1);
      p = pe - (qint_value(m, q_) / qint_value(m + 1, q_)) * ((pe * NumericTL::generator(m + 1, q_, m)) * pe);
    }
    return cache_.emplace(n, std::move(p)).first->second;
  }
};

/// The two sides of every identity a relation asserts at one N.
template <class B>
struct RelationSides {
  struct ElementPair {
    std::string label;
    typename B::Element lhs, rhs;
  };
  struct ScalarPair {
    std::string label;
    typename B::Scalar lhs, rhs;
  };
  std::vector<ElementPair> elements;
  std::vector<ScalarPair> scalars;
};

enum class Formula {
  Idempotent,
  Annihilation,
  Towers,
  PhiInvariance,
  Mirror,
  Absorption,
  PhiShift,
  DelPP,
  Pttp1,
  Pttp2,
  Pttp3,
  Cubic,
  Tpt1,
  TptHe,
  Tpt2,
  TLSimplified,
};

/// Evaluates the sides of `formula` at N in backend b (b's host is already chosen).
template <class B>
RelationSides<B> relation_sides(Formula formula, const B& b, int n) {
  using S = typename B::Scalar;
  RelationSides<B> out;
  auto pair = [&](std::string label, typename B::Element l, typename B::Element r) {
    out.elements.push_back({std::move(label), std::move(l), std::move(r)});
  };
  const S one = b.constant(1);
  const S two = b.qint(2);

  switch (formula) {
    case Formula::Idempotent: {
      const auto p = b.projector(n);
      pair("P_N P_N = P_N", p * p, p);
      break;
    }
    case Formula::Annihilation: {
      const auto p = b.projector(n);
      for (int k = 1; k < n; ++k) {
        pair("T_" + std::to_string(k) + " P_N = 0", b.t(k) * p, b.zero());
        pair("P_N T_" + std::to_string(k) + " = 0", p * b.t(k), b.zero());
      }
      break;
    }
    case Formula::Towers:
      pair("T-form P_N = R-form P_N", b.projector(n), b.projector_r_form(n));
      break;
    case Formula::PhiInvariance: {
      const auto p = b.projector(n);
      pair("phi_N(P_N) = P_N", b.phi(p), p);
      break;
    }
    case Formula::Mirror: {
      const auto pp = b.shifted_projector(n);
      pair("P_{N+1} = P'_N - rho_N P'_N T_1 P'_N", b.projector(n + 1), pp - b.rho(n) * (pp * b.t(1) * pp));
      break;
    }
    case Formula::Absorption: {
      const auto p = b.projector(n);
      const auto p0 = b.projector(n - 1);
      const auto pp = b.shifted_projector(n);
      const auto pp0 = b.shifted_projector(n - 1);
      pair("P_N P_{N-1} = P_N", p * p0, p);
      pair("P_{N-1} P_N = P_N", p0 * p, p);
      pair("P'_N P'_{N-1} = P'_N", pp * pp0, pp);
      pair("P'_{N-1} P'_N = P'_N", pp0 * pp, pp);
      break;
    }
    case Formula::PhiShift:
      pair("phi_{N+1}(P_N (x) id) = P'_N", b.phi(b.projector(n)), b.shifted_projector(n));
      break;
    case Formula::DelPP: {
      const auto pp = b.shifted_projector(n);
      pair("P_{N+1} - P'_{N+1} = rho_N P'_N (T_{N+1} - T_1) P'_N",
           b.projector(n + 1) - b.shifted_projector(n + 1), b.rho(n) * (pp * (b.t(n + 1) - b.t(1)) * pp));
      break;
    }
    case Formula::Pttp1: {
      const auto pp = b.shifted_projector(n);
      const auto x = pp * b.t(1) * pp;
      pair("rho_N P'_N T_1 P'_N T_1 P'_N = P'_N T_1 P'_N", b.rho(n) * (x * b.t(1) * pp), x);
      break;
    }
    case Formula::Pttp2: {
      const auto pp = b.shifted_projector(n);
      const auto x = pp * b.t(n + 1) * pp;
      pair("rho_N P'_N T_{N+1} P'_N T_{N+1} P'_N = P'_N T_{N+1} P'_N", b.rho(n) * (x * b.t(n + 1) * pp), x);
      break;
    }
    case Formula::Pttp3: {
      const auto pp = b.shifted_projector(n);
      const auto t1 = b.t(1);
      const auto tn = b.t(n + 1);
      const auto lhs = pp * t1 * pp * tn * pp * t1 * pp - pp * tn * pp * t1 * pp * tn * pp;
      const S c = -(b.qint(n + 1) / (b.qint(n) * b.qint(n) * b.qint(n)));
      pair("P'_N (T_1 P'_N T_{N+1} P'_N T_1 - T_{N+1} P'_N T_1 P'_N T_{N+1}) P'_N = -[N+1]/[N]^3 (P_{N+1} - P'_{N+1})",
           lhs, c * (b.projector(n + 1) - b.shifted_projector(n + 1)));
      break;
    }
    case Formula::Cubic: {
      const auto x = b.projector(n + 1) - b.shifted_projector(n + 1);
      const S cx = b.qint(n) * b.qint(n + 2) / (b.qint(n + 1) * b.qint(n + 1));
      pair("(P_{N+1} - P'_{N+1})^3 = [N][N+2]/[N+1]^2 (P_{N+1} - P'_{N+1})", x * x * x, cx * x);
      const auto y = b.projector(n) - b.shifted_projector(n);
      const S cy = b.qint(n - 1) * b.qint(n + 1) / (b.qint(n) * b.qint(n));
      pair("(P_N - P'_N)^3 = [N-1][N+1]/[N]^2 (P_N - P'_N)", y * y * y, cy * y);
      break;
    }
    case Formula::Tpt1:
    case Formula::Tpt2: {
      const auto p = b.projector(n);
      const auto p0 = b.projector(n - 1);
      const auto tn = b.t(n);
      const auto tm = b.t(n - 1);
      const auto lhs = (two * two + one) * (tn * p * tn);
      const auto chain = p0 * tn * tm * tn * tm * tn * p0;
      if (formula == Formula::Tpt1) {
        const S c1 = two * (b.qint(n + 2) + b.constant(2) * b.qint(n)) / b.qint(n);
        pair("([2]^2+1) T_N P_N T_N = [2]([N+2]+2[N])/[N] T_N P_{N-1} - [N-1]/[N] P_{N-1} T_N T_{N-1} T_N T_{N-1} T_N P_{N-1}",
             lhs, c1 * (tn * p0) - (b.qint(n - 1) / b.qint(n)) * chain);
      } else {
        const S r = b.rho(n - 1);
        const S c2 = two * two * (two - r) + two;
        pair("([2]^2+1) T_N P_N T_N = ([2]^2([2]-rho_{N-1})+[2]) T_N P_{N-1} - rho_{N-1} P_{N-1} T_N T_{N-1} T_N T_{N-1} T_N P_{N-1}",
             lhs, c2 * (tn * p0) - r * chain);
        out.scalars.push_back({"[2]([2]-rho_{N-1})+1 = ([N+2]+2[N])/[N]", two * (two - r) + one,
                               (b.qint(n + 2) + b.constant(2) * b.qint(n)) / b.qint(n)});
      }
      break;
    }
    case Formula::TptHe: {
      const auto p = b.projector(n);
      const auto p0 = b.projector(n - 1);
      const auto tn = b.t(n);
      const auto tm = b.t(n - 1);
      const S r = b.rho(n - 1);
      pair("T_N P_N T_N + P_N = ([2]-rho_{N-1}) T_N P_{N-1} + P_{N-1} - rho_{N-1} P_{N-1} T_{N-1} T_N T_{N-1} P_{N-1}",
           tn * p * tn + p, (two - r) * (tn * p0) + p0 - r * (p0 * tm * tn * tm * p0));
      break;
    }
    case Formula::TLSimplified: {
      const auto tn = b.t(n);
      pair("T_N P_N T_N = [N+1]/[N] T_N P_{N-1}", tn * b.projector(n) * tn,
           (b.qint(n + 1) / b.qint(n)) * (tn * b.projector(n - 1)));
      break;
    }
  }
  return out;
}

}  // namespace hecke
