#pragma once

#include <stdexcept>
#include <string>

namespace lagsob {

/// Shape mismatch: non-square determinant, vectors of different length, ...
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (negative factorial argument,
/// missing moments, zero polynomial where a nonzero one is required).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The instance lies outside the exact regime (integer alpha >= m).
struct UnsupportedRegime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition does not hold for an otherwise valid input.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A linear system that must be uniquely solvable turned out singular.
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input (bad rational string, wrong JSON shape).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace lagsob
