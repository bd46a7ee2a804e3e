#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparsetrace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or input file. Position is a 0-based offset
/// into the parsed string; line/column are filled in by the file reader.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on the input was violated (wrong arity, non-square
/// system, containment failure, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The random specialization or lifting turned out to be non-generic.
/// Callers are expected to retry with fresh randomness.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The denominator of a trace is a zero divisor in the quotient algebra.
class ZeroDivisorError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace sparsetrace
