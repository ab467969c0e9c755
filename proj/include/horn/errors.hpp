#pragma once

#include <stdexcept>
#include <string>

namespace horn {

// Base of every error the library raises on purpose.
class HornError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Pochhammer factor in a denominator (or a negative-index form) sits on,
// or within kPoleEps of, an excluded integer.
class PoleError : public HornError {
 public:
  using HornError::HornError;
};

class OverflowError : public HornError {
 public:
  using HornError::HornError;
};

// Argument outside the mathematical domain of an operation (gamma_ln(x <= 0),
// finite-difference stencil leaving the safe box, ...).
class DomainError : public HornError {
 public:
  using HornError::HornError;
};

// Series tail still growing when the truncation rectangle is exhausted.
class NonConvergence : public HornError {
 public:
  using HornError::HornError;
};

class QuadratureFailure : public HornError {
 public:
  using HornError::HornError;
};

// An identity instance violates the identity's own exclusions.
class AdmissibilityError : public HornError {
 public:
  using HornError::HornError;
};

class SamplingExhausted : public HornError {
 public:
  using HornError::HornError;
};

}  // namespace horn
