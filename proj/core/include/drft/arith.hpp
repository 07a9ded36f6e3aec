#pragma once

// Exact elementary number theory on 64-bit integers: factorization,
// divisor lists, gcd, Moebius and Euler's totient.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace drft {

// Inputs to factorize() (and everything built on it) must not exceed this.
inline constexpr std::int64_t kMaxFactorInput = std::int64_t{1} << 50;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Factorization {
 public:
  // Validates the invariants: strictly increasing primes, positive
  // exponents, product equal to n.
  Factorization(std::int64_t n, std::vector<PrimePower> factors);

  std::int64_t n() const noexcept { return n_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }
  std::size_t distinct_primes() const noexcept { return factors_.size(); }

  // Number of divisors, prod (e_i + 1).
  std::int64_t divisor_count() const noexcept;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::int64_t n_;
  std::vector<PrimePower> factors_;
};

// Deterministic trial division. Throws DomainError for n < 1 and
// CapacityError for n > kMaxFactorInput.
Factorization factorize(std::int64_t n);

// Sorted divisors of r.
class DivisorList {
 public:
  explicit DivisorList(std::int64_t r);
  explicit DivisorList(const Factorization& factorization);

  std::int64_t modulus() const noexcept { return r_; }
  std::size_t size() const noexcept { return divisors_.size(); }
  std::int64_t operator[](std::size_t i) const { return divisors_[i]; }
  std::span<const std::int64_t> values() const noexcept { return divisors_; }
  auto begin() const noexcept { return divisors_.begin(); }
  auto end() const noexcept { return divisors_.end(); }

  bool contains(std::int64_t d) const noexcept;
  // Position of d in the sorted list; throws DomainError when d does not
  // divide r.
  std::size_t index_of(std::int64_t d) const;
  // Position of r / divisors_[i]. The list is sorted, so this is the
  // mirrored index.
  std::size_t complement_index(std::size_t i) const noexcept {
    return divisors_.size() - 1 - i;
  }

  friend bool operator==(const DivisorList& a, const DivisorList& b) {
    return a.r_ == b.r_;
  }

 private:
  std::int64_t r_;
  std::vector<std::int64_t> divisors_;
};

DivisorList divisors(std::int64_t r);

// gcd(0, 0) == 0. Negative arguments are a DomainError.
std::int64_t gcd(std::int64_t a, std::int64_t b);

int mobius(std::int64_t n);
int mobius(const Factorization& factorization) noexcept;

std::int64_t euler_phi(std::int64_t n);
std::int64_t euler_phi(const Factorization& factorization) noexcept;

// Residue of n in 1..r, so that n = 0 (mod r) maps to r.
std::int64_t residue(std::int64_t n, std::int64_t r);

}  // namespace drft
