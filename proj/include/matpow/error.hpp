#pragma once

#include <stdexcept>
#include <string>

namespace matpow {

/// Base of every error raised by the library. Each route reports failures
/// through one of the subclasses below so callers can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Root iteration hit its cap without meeting the residual target.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// The route cannot handle this eigenvalue structure (e.g. repeated roots
/// handed to the distinct-root closed form).
class UnsupportedStructureError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
};

/// A floating result failed its own consistency check (imaginary residual,
/// Cayley-Hamilton residual).
class AccuracyError : public Error {
 public:
  using Error::Error;
};

class ContourViolationError : public Error {
 public:
  using Error::Error;
};

class NearPoleError : public Error {
 public:
  using Error::Error;
};

/// Result magnitude does not fit in a double.
class RepresentableRangeError : public Error {
 public:
  using Error::Error;
};

class DegenerateDerivativeError : public Error {
 public:
  using Error::Error;
};

}  // namespace matpow
