#pragma once

// Exhaustive checks of the identities behind the even-function transforms.
// Each verifier returns every evaluated instance, not just a verdict, so a
// failing instance can be printed as a counterexample.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drft/even.hpp"
#include "drft/scalar.hpp"

namespace drft {

// Largest modulus for the brute-force even Cauchy kernel check.
inline constexpr std::int64_t kCauchyKernelMaxModulus = 60;

struct Coordinate {
  std::string_view name;
  std::int64_t value;
};

template <class V>
struct IdentityCheck {
  std::vector<Coordinate> at;
  V lhs;
  V rhs;
  bool holds;
};

template <class V>
struct VerificationReport {
  std::string identity;
  std::int64_t modulus = 0;
  std::vector<IdentityCheck<V>> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.holds) return false;
    }
    return true;
  }

  const IdentityCheck<V>* first_failure() const {
    for (const auto& c : checks) {
      if (!c.holds) return &c;
    }
    return nullptr;
  }
};

// sum_{e | r} C(r/e, d1) C(r/e, d2) phi(e) == r phi(d1) [d1 == d2], for all
// divisor pairs (d1, d2).
VerificationReport<std::int64_t> verify_orthogonality(std::int64_t r);

// phi(e) C(r/e, d) == phi(d) C(r/d, e), for all divisor pairs (d, e).
VerificationReport<std::int64_t> verify_symmetry(std::int64_t r);

// With F = dft(to_periodic(f)) and R = rft(f), checks
//   F(k) == sum_{e | r} f(e) C(k, r/e)     for k = 1..r   ("dft-kernel")
//   R(d) == F(r / d)                       for d | r      ("rft-dft")
//   F(k) == F(gcd(k, r))                   for k = 1..r   ("dft-even")
// within `tolerance`.
VerificationReport<Complex> verify_rft_dft_bridge(const EvenFunction<Complex>& f,
                                                  double tolerance = 1e-8);
VerificationReport<Complex> verify_rft_dft_bridge(const EvenFunction<Rational>& f,
                                                  double tolerance = 1e-8);

// sum_{a + b = n mod r} C(a, d1) C(b, d2) == r C(n, d1) [d1 == d2] by brute
// force, for all divisor pairs and n = 1..r. Throws CapacityError when
// r > kCauchyKernelMaxModulus.
VerificationReport<std::int64_t> verify_cauchy_kernel_even(std::int64_t r);

}  // namespace drft
