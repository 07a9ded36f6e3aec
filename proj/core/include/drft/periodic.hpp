#pragma once

// Periodic arithmetical functions mod r stored by their values at the
// residues 1..r (f(r) plays the role of f(0)), the DFT pair, the Euclidean
// inner product and the Cauchy product.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drft/arith.hpp"
#include "drft/errors.hpp"
#include "drft/scalar.hpp"

namespace drft {

template <Scalar S>
class ResidueFunction {
 public:
  using value_type = S;

  // values[i] holds f(i + 1). Throws DomainError unless values.size() == r.
  ResidueFunction(std::int64_t r, std::vector<S> values)
      : r_(r), values_(std::move(values)) {
    if (r_ < 1) {
      throw DomainError("modulus must be positive, got " + std::to_string(r_));
    }
    if (values_.size() != static_cast<std::size_t>(r_)) {
      throw DomainError("expected " + std::to_string(r_) + " values, got " +
                        std::to_string(values_.size()));
    }
  }

  // f(n) = generator(n) for n = 1..r.
  static ResidueFunction generate(std::int64_t r,
                                  const std::function<S(std::int64_t)>& generator) {
    if (r < 1) {
      throw DomainError("modulus must be positive, got " + std::to_string(r));
    }
    std::vector<S> values;
    values.reserve(static_cast<std::size_t>(r));
    for (std::int64_t n = 1; n <= r; ++n) values.push_back(generator(n));
    return ResidueFunction(r, std::move(values));
  }

  std::int64_t modulus() const noexcept { return r_; }

  // f(n) for any integer n.
  const S& operator()(std::int64_t n) const {
    return values_[static_cast<std::size_t>(residue(n, r_) - 1)];
  }

  std::span<const S> values() const noexcept { return values_; }

  friend bool operator==(const ResidueFunction&, const ResidueFunction&) = default;

 private:
  std::int64_t r_;
  std::vector<S> values_;
};

// F_f(k) for k = 1..r.
class PeriodicSpectrum {
 public:
  PeriodicSpectrum(std::int64_t r, std::vector<Complex> coeffs);

  std::int64_t modulus() const noexcept { return r_; }
  // F(k) for any integer k (the spectrum is itself periodic mod r).
  const Complex& operator()(std::int64_t k) const {
    return coeffs_[static_cast<std::size_t>(residue(k, r_) - 1)];
  }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

 private:
  std::int64_t r_;
  std::vector<Complex> coeffs_;
};

// exp(2 pi i k / r) for k = 0..r-1, each computed from its reduced angle.
std::vector<Complex> unit_roots(std::int64_t r);

// F_f(k) = sum_{n=1}^{r} f(n) exp(-2 pi i k n / r), direct O(r^2) sum.
PeriodicSpectrum dft(const ResidueFunction<Complex>& f);
PeriodicSpectrum dft(const ResidueFunction<Rational>& f);

// f(n) = r^{-1} sum_{k=1}^{r} F(k) exp(2 pi i k n / r).
ResidueFunction<Complex> idft(const PeriodicSpectrum& spectrum);

ResidueFunction<Complex> to_complex(const ResidueFunction<Rational>& f);

namespace detail {
inline void require_same_modulus(std::int64_t a, std::int64_t b) {
  if (a != b) {
    throw DomainError("modulus mismatch: " + std::to_string(a) + " vs " +
                      std::to_string(b));
  }
}
}  // namespace detail

// sum_{n=1}^{r} f(n) conj(g(n)).
template <Scalar S>
S inner_product_periodic(const ResidueFunction<S>& f,
                         const ResidueFunction<S>& g) {
  detail::require_same_modulus(f.modulus(), g.modulus());
  S sum = from_integer<S>(0);
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    sum += f.values()[i] * conjugate(g.values()[i]);
  }
  return sum;
}

// (f o g)(n) = sum_{a + b = n mod r} f(a) g(b), by the direct double sum.
template <Scalar S>
ResidueFunction<S> cauchy_product(const ResidueFunction<S>& f,
                                  const ResidueFunction<S>& g) {
  detail::require_same_modulus(f.modulus(), g.modulus());
  const std::int64_t r = f.modulus();
  std::vector<S> h(static_cast<std::size_t>(r), from_integer<S>(0));
  for (std::int64_t n = 1; n <= r; ++n) {
    S& out = h[static_cast<std::size_t>(n - 1)];
    for (std::int64_t a = 1; a <= r; ++a) {
      out += f(a) * g(n - a);
    }
  }
  return ResidueFunction<S>(r, std::move(h));
}

// idft(dft(f) * dft(g)).
ResidueFunction<Complex> cauchy_product_spectral(const ResidueFunction<Complex>& f,
                                                 const ResidueFunction<Complex>& g);
ResidueFunction<Complex> cauchy_product_spectral(const ResidueFunction<Rational>& f,
                                                 const ResidueFunction<Rational>& g);

// First residue n in 1..r with f(n) != f(gcd(n, r)), if any. Complex values
// are compared within `tolerance`; rationals exactly.
template <Scalar S>
std::optional<std::int64_t> evenness_witness(const ResidueFunction<S>& f,
                                             double tolerance = 1e-12) {
  const std::int64_t r = f.modulus();
  for (std::int64_t n = 1; n <= r; ++n) {
    if (!same_value(f(n), f(std::gcd(n, r)), tolerance)) return n;
  }
  return std::nullopt;
}

template <Scalar S>
bool is_even(const ResidueFunction<S>& f, double tolerance = 1e-12) {
  return !evenness_witness(f, tolerance).has_value();
}

}  // namespace drft
