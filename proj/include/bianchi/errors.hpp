#pragma once

#include <stdexcept>
#include <string>

namespace bianchi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

/// Argument outside the domain of an operation (singular matrix, mu <= 0, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A structure tensor that was required to satisfy the Jacobi identity does not.
struct NotLie : Error {
  using Error::Error;
};

/// Input cannot be brought to a catalogued normal form.
struct UnsupportedForm : Error {
  using Error::Error;
};

/// Samples of a deformation path disagree away from t = 0.
struct StratumCrossing : Error {
  using Error::Error;
};

}  // namespace bianchi
