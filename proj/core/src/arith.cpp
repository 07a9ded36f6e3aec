#include "drft/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "drft/errors.hpp"

namespace drft {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return out;
}

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) {
    throw DomainError(std::string(what) + " requires a positive argument, got " +
                      std::to_string(n));
  }
}

bool is_prime_by_trial(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q <= p / q; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

Factorization::Factorization(std::int64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  require_positive(n_, "Factorization");
  std::int64_t product = 1;
  std::int64_t previous = 1;
  for (const auto& [prime, exponent] : factors_) {
    if (prime <= previous || exponent < 1 || !is_prime_by_trial(prime)) {
      throw DomainError("malformed factorization of " + std::to_string(n_));
    }
    previous = prime;
    for (int i = 0; i < exponent; ++i) product = checked_mul(product, prime);
  }
  if (product != n_) {
    throw DomainError("factorization does not multiply back to " +
                      std::to_string(n_));
  }
}

std::int64_t Factorization::divisor_count() const noexcept {
  std::int64_t count = 1;
  for (const auto& pp : factors_) count *= pp.exponent + 1;
  return count;
}

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  if (n > kMaxFactorInput) {
    throw CapacityError("factorize: " + std::to_string(n) +
                        " exceeds the cap 2^50");
  }
  std::vector<PrimePower> factors;
  std::int64_t m = n;
  for (std::int64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (m > 1) factors.push_back({m, 1});
  return Factorization(n, std::move(factors));
}

DivisorList::DivisorList(std::int64_t r) : DivisorList(factorize(r)) {}

DivisorList::DivisorList(const Factorization& factorization)
    : r_(factorization.n()) {
  divisors_.reserve(static_cast<std::size_t>(factorization.divisor_count()));
  divisors_.push_back(1);
  for (const auto& [prime, exponent] : factorization.factors()) {
    const std::size_t existing = divisors_.size();
    std::int64_t power = 1;
    for (int e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) {
        divisors_.push_back(divisors_[i] * power);
      }
    }
  }
  std::sort(divisors_.begin(), divisors_.end());
}

bool DivisorList::contains(std::int64_t d) const noexcept {
  return std::binary_search(divisors_.begin(), divisors_.end(), d);
}

std::size_t DivisorList::index_of(std::int64_t d) const {
  auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
  if (it == divisors_.end() || *it != d) {
    throw DomainError(std::to_string(d) + " does not divide " +
                      std::to_string(r_));
  }
  return static_cast<std::size_t>(it - divisors_.begin());
}

DivisorList divisors(std::int64_t r) {
  require_positive(r, "divisors");
  return DivisorList(r);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) {
    throw DomainError("gcd expects nonnegative arguments");
  }
  return std::gcd(a, b);
}

int mobius(const Factorization& factorization) noexcept {
  int sign = 1;
  for (const auto& pp : factorization.factors()) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  return mobius(factorize(n));
}

std::int64_t euler_phi(const Factorization& factorization) noexcept {
  std::int64_t phi = factorization.n();
  for (const auto& pp : factorization.factors()) {
    phi = phi / pp.prime * (pp.prime - 1);
  }
  return phi;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  return euler_phi(factorize(n));
}

std::int64_t residue(std::int64_t n, std::int64_t r) {
  require_positive(r, "residue");
  std::int64_t m = n % r;
  if (m <= 0) m += r;
  return m;
}

}  // namespace drft
