#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero rational function") {}
};

/// A rational function was evaluated at a point where its denominator vanishes.
class PoleAtGamma : public Error {
 public:
  using Error::Error;
};

/// A coefficient has a pole at the requested numeric value of q.
class PoleAtQ : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class RankOverflow : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (validity range of N, gamma window, ...) does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CertificationFailed : public Error {
 public:
  CertificationFailed(const std::string& relation, std::string residual)
      : Error("certification of " + relation + " failed; residual: " + residual),
        residual_(std::move(residual)) {}

  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string residual_;
};

class AnsatzRejected : public Error {
 public:
  using Error::Error;
};

/// Some [k+1] vanishes at the requested q, so rho_k is undefined.
class RhoPole : public Error {
 public:
  using Error::Error;
};

/// A numeric check contradicted one of the representation-theoretic propositions.
class PropositionViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
