#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace opineq {

// Base for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input claimed Hermitian but ||m - m*||_F exceeds the tolerance.
struct NotHermitian : Error {
  using Error::Error;
};

// Hermitian input has an eigenvalue below the PSD clip window.
struct NotPSD : Error {
  using Error::Error;
};

// Fractional power requested with a negative exponent.
struct NegativeExponent : Error {
  using Error::Error;
};

// Exponent pair outside the domain of a sphere optimizer.
struct ExponentDomain : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DimensionOutOfRange : Error {
  using Error::Error;
};

// An inequality's side condition failed on the supplied inputs.
// `predicate` names the condition in the registry's vocabulary.
struct HypothesisViolated : Error {
  std::string predicate;
  explicit HypothesisViolated(std::string pred)
      : Error("hypothesis violated: " + pred), predicate(std::move(pred)) {}
};

// No registry row matches the requested id/variant.
struct UnknownId : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ConfigInvalid : Error {
  using Error::Error;
};

struct IoFailure : Error {
  using Error::Error;
};

}  // namespace opineq
