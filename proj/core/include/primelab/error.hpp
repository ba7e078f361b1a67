#pragma once

#include <stdexcept>
#include <string>

namespace primelab {

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can map the whole family onto one exit path.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested range exceeds the configured sieve cap.
class RangeTooLarge : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole (zeta at s = 1, L(s, chi_0) at s = 1).
class PoleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace primelab
