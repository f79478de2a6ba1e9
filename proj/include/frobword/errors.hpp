#pragma once

#include <stdexcept>
#include <string>

namespace frobword {

/// Argument outside the mathematical domain of an operation (n = 0 for a
/// 1-indexed word, non-coprime weights, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact integer arithmetic would overflow.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Inconsistent configuration: a non-prolongable seed, a factor source that
/// does not apply to a generator, a scan budget too small for a bound.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A stated precondition of a bounded claim is not met.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A doubling scan hit its length cap before its result stopped changing.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested factor does not occur in the scanned part of a word.
class FactorNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Never silently repaired.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace frobword
