#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace drft {

// Argument outside the mathematical domain of an operation (n <= 0,
// d not dividing r, mismatched moduli, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument exceeds a configured size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An exact integer intermediate does not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Malformed textual input (rationals, function files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A periodic function failed the evenness test at `witness`.
class NotEvenError : public DomainError {
 public:
  explicit NotEvenError(std::int64_t witness)
      : DomainError("function is not even: f(" + std::to_string(witness) +
                    ") != f(gcd(" + std::to_string(witness) + ", r))"),
        witness_(witness) {}

  std::int64_t witness() const noexcept { return witness_; }

 private:
  std::int64_t witness_;
};

}  // namespace drft
