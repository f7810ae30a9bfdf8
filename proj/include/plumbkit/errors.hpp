#pragma once

#include <stdexcept>
#include <string>

namespace plumbkit {

// Every failure raised by the core derives from Error so callers (the C API in
// particular) can translate the concrete type into a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A divisibility-by-8 (or similar parity) check failed; indicates a broken
/// precondition or an implementation fault, never a user mistake.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Linear system over GF(2) has no unique solution.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A calculus move was requested where its preconditions do not hold.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// The Seifert-triple extraction hypothesis does not apply to a scan tuple.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or trace document. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace plumbkit
