#pragma once

#include <stdexcept>
#include <string>

namespace stiefel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: wrong shapes, out-of-range integers, malformed input.
/// The CLI maps this family to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class InvalidParameter : public InputError {
 public:
  using InputError::InputError;
};

class ParameterMismatch : public InputError {
 public:
  using InputError::InputError;
};

class WrongField : public InputError {
 public:
  using InputError::InputError;
};

class UnknownDesign : public InputError {
 public:
  using InputError::InputError;
};

class NotAnSSC : public InputError {
 public:
  using InputError::InputError;
};

/// No implemented construction covers the requested parameters. Not a
/// nonexistence claim unless the message says so. CLI exit code 3.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class InfeasibleParameters : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

class UnsupportedResidue : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

class UnsupportedDimension : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

class NoKnownConstruction : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

class BudgetExceeded : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

/// Non-finite objective during optimization. CLI exit code 4.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, int restart)
      : Error(what + " (restart " + std::to_string(restart) + ")"), restart_(restart) {}

  int restart() const noexcept { return restart_; }

 private:
  int restart_;
};

}  // namespace stiefel
