#pragma once

#include <stdexcept>
#include <string>

namespace twistr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the documented domain (rank bounds, non-dominant weights, inadmissible pairs).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// q or w at a value where the algebra degenerates (0, 1, -1).
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole of a rational expression.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A structural guarantee failed (multiplicity, mixed symmetry, odd parent cycle, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Representation construction failed a relation check.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Recursion along a non-tree edge disagreed with the spanning-tree value.
class LoopInconsistency : public Error {
 public:
  using Error::Error;
};

/// Closed-form eigenvalues requested outside their range of validity.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// Intertwining system has only the zero solution.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// Sample point is non-generic (solution space dimension >= 2); retry with another point.
class NonGenericSample : public Error {
 public:
  using Error::Error;
};

/// Command-line request that cannot be honoured (unsupported export, bad flag combination).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistr
