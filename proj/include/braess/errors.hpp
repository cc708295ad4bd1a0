#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace braess {

// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A four-node configuration violates its invariants (negative parameters,
// zero delay parameter in strict mode, vanishing total delay, ...).
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// Total flow Q must be strictly positive.
class InvalidQ : public Error {
 public:
  using Error::Error;
};

// A quantity is mathematically undefined for the given parameters.
class DomainError : public Error {
 public:
  using Error::Error;
};

// 0/0 encountered while forming an extended-real ratio.
class ZeroOverZero : public DomainError {
 public:
  using DomainError::DomainError;
};

// The role assignment of a general network does not decompose into the
// five designated paths.
class TopologyError : public Error {
 public:
  TopologyError(std::string role, const std::string& message)
      : Error(message), role_(std::move(role)) {}

  const std::string& role() const noexcept { return role_; }

 private:
  std::string role_;
};

// The links handed to path contraction do not chain head-to-tail.
class BrokenPath : public TopologyError {
 public:
  using TopologyError::TopologyError;
};

// Malformed input document (bad JSON, schema violation).
class ParseError : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

// Path flows are negative or do not sum to the total flow.
class InfeasibleFlows : public Error {
 public:
  using Error::Error;
};

// None of the equilibrium cases matched. The case analysis is exhaustive,
// so this is an internal consistency failure and never an input error.
class NoCaseMatched : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The active-set oracle found no support satisfying the KKT conditions.
class NoKKTPoint : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace braess
