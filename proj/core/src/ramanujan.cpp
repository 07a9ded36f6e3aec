#include "drft/ramanujan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "drft/errors.hpp"

namespace drft {

namespace {

// sum over d' | g of d' * mu(d / d'), where d and g = gcd(m, d) are given by
// exponent vectors over `primes`. Only squarefree quotients s = d / d'
// contribute, so the sum runs over subsets of the primes of d.
std::int64_t mobius_divisor_sum(std::span<const PrimePower> primes,
                                const unsigned char* d_exponents,
                                const unsigned char* g_exponents,
                                std::int64_t d) {
  // Number of distinct primes is at most 13 below 2^50.
  std::array<std::int64_t, 16> optional_primes{};
  std::size_t optional_count = 0;
  std::int64_t base = d;
  std::int64_t sign = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const int de = d_exponents[i];
    const int ge = g_exponents[i];
    if (de == 0) continue;
    if (ge >= de) {
      optional_primes[optional_count++] = primes[i].prime;
    } else if (ge == de - 1) {
      // p must be in s, otherwise d' = d / s would not divide g.
      base /= primes[i].prime;
      sign = -sign;
    } else {
      return 0;
    }
  }
  std::int64_t total = 0;
  const std::uint32_t subsets = std::uint32_t{1} << optional_count;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::int64_t s = 1;
    int parity = 0;
    for (std::size_t j = 0; j < optional_count; ++j) {
      if (mask & (std::uint32_t{1} << j)) {
        s *= optional_primes[j];
        parity ^= 1;
      }
    }
    const std::int64_t term = base / s;
    total += parity ? -term : term;
  }
  return sign * total;
}

std::vector<unsigned char> exponents_over(const Factorization& f,
                                          std::int64_t m) {
  std::vector<unsigned char> out(f.distinct_primes(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t p = f.factors()[i].prime;
    while (m % p == 0) {
      m /= p;
      ++out[i];
    }
  }
  return out;
}

void require_divides(std::int64_t d, std::int64_t r) {
  if (r < 1) {
    throw DomainError("modulus must be positive, got " + std::to_string(r));
  }
  if (d < 1 || r % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide " +
                      std::to_string(r));
  }
}

}  // namespace

std::int64_t ramanujan_sum(std::int64_t n, std::int64_t r) {
  if (r < 1) {
    throw DomainError("ramanujan_sum: modulus must be positive, got " +
                      std::to_string(r));
  }
  const Factorization f = factorize(r);
  const std::int64_t g = std::gcd(residue(n, r), r);
  const auto r_exp = exponents_over(f, r);
  const auto g_exp = exponents_over(f, g);
  return mobius_divisor_sum(f.factors(), r_exp.data(), g_exp.data(), r);
}

Complex ramanujan_sum_oracle(std::int64_t n, std::int64_t r) {
  if (r < 1) {
    throw DomainError("ramanujan_sum_oracle: modulus must be positive, got " +
                      std::to_string(r));
  }
  if (r > kOracleMaxModulus) {
    throw CapacityError("ramanujan_sum_oracle: modulus " + std::to_string(r) +
                        " exceeds the cap 10^6");
  }
  const std::int64_t n0 = residue(n, r) % r;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(r);
  Complex sum{0.0, 0.0};
  for (std::int64_t k = 1; k <= r; ++k) {
    if (std::gcd(k, r) != 1) continue;
    const auto phase = static_cast<double>((k * n0) % r) * step;
    sum += Complex(std::cos(phase), std::sin(phase));
  }
  return sum;
}

std::vector<std::int64_t> ramanujan_row(std::int64_t d, std::int64_t r) {
  require_divides(d, r);
  // C(n, d) only depends on gcd(n, d).
  const DivisorList by_gcd = divisors(d);
  std::vector<std::int64_t> at_gcd(by_gcd.size());
  for (std::size_t i = 0; i < by_gcd.size(); ++i) {
    at_gcd[i] = ramanujan_sum(by_gcd[i], d);
  }
  std::vector<std::int64_t> row(static_cast<std::size_t>(r));
  for (std::int64_t n = 1; n <= r; ++n) {
    row[static_cast<std::size_t>(n - 1)] =
        at_gcd[by_gcd.index_of(std::gcd(n, d))];
  }
  return row;
}

std::vector<std::int64_t> ramanujan_divisor_row(std::int64_t d,
                                                std::int64_t r) {
  require_divides(d, r);
  const DivisorLattice lattice(r);
  const std::size_t di = lattice.divisors().index_of(d);
  std::vector<std::int64_t> row(lattice.size());
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    row[e] = lattice.kernel(lattice.divisors().complement_index(e), di);
  }
  return row;
}

DivisorLattice::DivisorLattice(std::int64_t r)
    : factorization_(factorize(r)), divisors_(factorization_) {
  const std::size_t width = factorization_.distinct_primes();
  exponents_.reserve(divisors_.size() * width);
  phi_.reserve(divisors_.size());
  for (std::int64_t d : divisors_) {
    const auto e = exponents_over(factorization_, d);
    exponents_.insert(exponents_.end(), e.begin(), e.end());
    std::int64_t phi = d;
    for (std::size_t i = 0; i < width; ++i) {
      if (e[i] > 0) {
        const std::int64_t p = factorization_.factors()[i].prime;
        phi = phi / p * (p - 1);
      }
    }
    phi_.push_back(phi);
  }
}

std::int64_t DivisorLattice::kernel(std::size_t m, std::size_t d) const {
  const std::size_t width = factorization_.distinct_primes();
  std::array<unsigned char, 16> g{};
  const unsigned char* me = exponents(m);
  const unsigned char* de = exponents(d);
  for (std::size_t i = 0; i < width; ++i) g[i] = std::min(me[i], de[i]);
  return mobius_divisor_sum(factorization_.factors(), de, g.data(),
                            divisors_[d]);
}

RamanujanTable::RamanujanTable(std::int64_t r) : divisors_(drft::divisors(r)) {
  const DivisorLattice lattice(r);
  const std::size_t t = lattice.size();
  entries_.resize(t * t);
  for (std::size_t m = 0; m < t; ++m) {
    for (std::size_t d = 0; d < t; ++d) {
      entries_[m * t + d] = lattice.kernel(m, d);
    }
  }
}

std::int64_t RamanujanTable::operator()(std::int64_t n, std::int64_t d) const {
  const std::int64_t r = modulus();
  const std::size_t di = divisors_.index_of(d);
  const std::size_t mi = divisors_.index_of(std::gcd(residue(n, r), r));
  return at_index(mi, di);
}

}  // namespace drft
