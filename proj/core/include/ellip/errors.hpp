#pragma once

#include <stdexcept>
#include <string>

namespace ellip {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested value is infinite (K at r = 1).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed or incomplete configuration: unknown identifiers, empty
/// candidate lists, unparsable family specs.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bound family was requested with parameters for which the inequality
/// is neither a valid lower nor a valid upper bound.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical verification observed a pattern the theory rules out.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ellip
