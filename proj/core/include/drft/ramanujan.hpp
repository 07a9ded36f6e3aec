#pragma once

// Ramanujan's sum C(n, r). The production evaluation is the Moebius
// divisor sum C(n, r) = sum_{d | (n, r)} d * mu(r / d), which stays in
// exact integers; the exponential sum is kept as a floating-point oracle.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "drft/arith.hpp"
#include "drft/scalar.hpp"

namespace drft {

// Largest modulus accepted by ramanujan_sum_oracle.
inline constexpr std::int64_t kOracleMaxModulus = 1'000'000;

std::int64_t ramanujan_sum(std::int64_t n, std::int64_t r);

// Direct sum of exp(2 pi i k n / r) over 1 <= k <= r with gcd(k, r) = 1.
Complex ramanujan_sum_oracle(std::int64_t n, std::int64_t r);

// C(n, d) for n = 1..r. Requires d | r.
std::vector<std::int64_t> ramanujan_row(std::int64_t d, std::int64_t r);

// C(r / e, d) for each e | r in increasing order of e. Requires d | r.
std::vector<std::int64_t> ramanujan_divisor_row(std::int64_t d, std::int64_t r);

// The divisors of r together with their exponent vectors over the primes
// of r, so that C(m, d) for m, d | r needs no further factorization.
// Storage is O(tau(r) * omega(r)).
class DivisorLattice {
 public:
  explicit DivisorLattice(std::int64_t r);

  std::int64_t modulus() const noexcept { return divisors_.modulus(); }
  const Factorization& factorization() const noexcept { return factorization_; }
  const DivisorList& divisors() const noexcept { return divisors_; }
  std::size_t size() const noexcept { return divisors_.size(); }

  // phi(divisors()[i]).
  std::int64_t phi(std::size_t i) const { return phi_[i]; }

  // C(divisors()[m], divisors()[d]).
  std::int64_t kernel(std::size_t m, std::size_t d) const;

 private:
  const unsigned char* exponents(std::size_t i) const {
    return exponents_.data() + i * factorization_.distinct_primes();
  }

  Factorization factorization_;
  DivisorList divisors_;
  std::vector<unsigned char> exponents_;
  std::vector<std::int64_t> phi_;
};

// All values C(m, d) for m, d | r. Since C(., d) is even mod d and d | r,
// C(n, d) = C(gcd(n, r), d) for every integer n.
class RamanujanTable {
 public:
  explicit RamanujanTable(std::int64_t r);

  std::int64_t modulus() const noexcept { return divisors_.modulus(); }
  const DivisorList& divisors() const noexcept { return divisors_; }

  // C(n, d) for any integer n; d must divide r.
  std::int64_t operator()(std::int64_t n, std::int64_t d) const;
  // C(divisors()[m], divisors()[d]).
  std::int64_t at_index(std::size_t m, std::size_t d) const {
    return entries_[m * divisors_.size() + d];
  }

 private:
  DivisorList divisors_;
  std::vector<std::int64_t> entries_;
};

}  // namespace drft
