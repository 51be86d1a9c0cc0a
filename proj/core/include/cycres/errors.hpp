#pragma once

#include <stdexcept>
#include <string>

namespace cycres {

// Base for errors caused by the input (bad spec, vanishing tower, ...).
// The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomialError : public DomainError {
 public:
  ZeroPolynomialError() : DomainError("operation requires a nonzero polynomial") {}
};

// Res(t^{p^k}-1, f) = 0 exactly at and above the reported level.
class TowerVanishesError : public DomainError {
 public:
  explicit TowerVanishesError(int level)
      : DomainError("tower vanishes at level " + std::to_string(level)),
        level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

// A stated hypothesis of the requested operation fails (non-coprime torus
// parameters, p | b in the torus closed form, p not dividing m for the
// twist limit, singular curve, ...).
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Exact computation would exceed the configured digit budget, or a p-adic
// result cannot be produced at the requested precision.  Exit code 2.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroToPrecision : public PrecisionError {
 public:
  explicit DivisionByZeroToPrecision(long known_zero_prec)
      : PrecisionError("division by a value that is zero to precision " +
                       std::to_string(known_zero_prec)),
        known_zero_prec_(known_zero_prec) {}
  long known_zero_precision() const { return known_zero_prec_; }

 private:
  long known_zero_prec_;
};

// An internal cross-check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cycres
