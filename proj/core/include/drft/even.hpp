#pragma once

// Even functions mod r, f(n) = f(gcd(n, r)), held by their tau(r) values on
// the divisors of r, and the Discrete Ramanujan-Fourier Transform
//
//   R_f(d) = phi(d)^{-1} sum_{n=1}^{r} f(n) C(n, d)        (grouped form)
//          = sum_{e | r} f(r / e) C(r / d, e)              (divisor form)
//   f(n)   = r^{-1} sum_{d | r} R_f(d) C(n, d)             (inverse)
//
// None of the transforms below touch r-length storage; everything is
// O(tau(r)) memory and O(tau(r)^2) kernel evaluations.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drft/arith.hpp"
#include "drft/errors.hpp"
#include "drft/periodic.hpp"
#include "drft/scalar.hpp"

namespace drft {

// Values indexed by the divisors of r, in increasing divisor order.
template <Scalar S, class Tag>
class DivisorIndexed {
 public:
  using value_type = S;

  DivisorIndexed(DivisorList divisors, std::vector<S> values)
      : divisors_(std::move(divisors)), values_(std::move(values)) {
    if (values_.size() != divisors_.size()) {
      throw DomainError("expected " + std::to_string(divisors_.size()) +
                        " divisor values for r = " +
                        std::to_string(divisors_.modulus()) + ", got " +
                        std::to_string(values_.size()));
    }
  }
  DivisorIndexed(std::int64_t r, std::vector<S> values)
      : DivisorIndexed(drft::divisors(r), std::move(values)) {}

  // Builds from (divisor, value) pairs in any order. The divisor set must be
  // exactly the divisors of r, without duplicates.
  static DivisorIndexed from_pairs(
      std::int64_t r, const std::vector<std::pair<std::int64_t, S>>& pairs) {
    DivisorList ds = drft::divisors(r);
    std::vector<S> values(ds.size());
    std::vector<bool> seen(ds.size(), false);
    for (const auto& [d, v] : pairs) {
      if (!ds.contains(d)) {
        throw DomainError(std::to_string(d) + " is not a divisor of " +
                          std::to_string(r));
      }
      const std::size_t i = ds.index_of(d);
      if (seen[i]) {
        throw DomainError("duplicate divisor " + std::to_string(d));
      }
      seen[i] = true;
      values[i] = v;
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (!seen[i]) {
        throw DomainError("missing value for divisor " + std::to_string(ds[i]));
      }
    }
    return DivisorIndexed(std::move(ds), std::move(values));
  }

  std::int64_t modulus() const noexcept { return divisors_.modulus(); }
  const DivisorList& divisors() const noexcept { return divisors_; }
  std::span<const S> values() const noexcept { return values_; }

  // Value at the divisor d; throws DomainError if d does not divide r.
  const S& at(std::int64_t d) const { return values_[divisors_.index_of(d)]; }

  // Value at any integer n, through gcd(n, r).
  const S& operator()(std::int64_t n) const {
    return at(std::gcd(residue(n, modulus()), modulus()));
  }

  friend bool operator==(const DivisorIndexed& a, const DivisorIndexed& b) {
    return a.modulus() == b.modulus() && a.values_ == b.values_;
  }

 private:
  DivisorList divisors_;
  std::vector<S> values_;
};

struct EvenFunctionTag {};
struct EvenSpectrumTag {};

template <Scalar S>
using EvenFunction = DivisorIndexed<S, EvenFunctionTag>;
template <Scalar S>
using EvenSpectrum = DivisorIndexed<S, EvenSpectrumTag>;

// Restriction of an even periodic function to the divisors of r. Throws
// NotEvenError carrying the first residue that breaks evenness.
template <Scalar S>
EvenFunction<S> from_periodic(const ResidueFunction<S>& f,
                              double tolerance = 1e-12);

// Expansion n -> f(gcd(n, r)), n = 1..r.
template <Scalar S>
ResidueFunction<S> to_periodic(const EvenFunction<S>& f);

// Grouped form: residues with gcd(n, r) = e are counted by phi(r / e).
template <Scalar S>
EvenSpectrum<S> rft(const EvenFunction<S>& f);

// Division-free divisor form with integer kernels C(r / d, e).
template <Scalar S>
EvenSpectrum<S> rft_divisor_form(const EvenFunction<S>& f);

template <Scalar S>
EvenFunction<S> irft(const EvenSpectrum<S>& spectrum);

// sum_{d | r} f(d) conj(g(d)) phi(r / d).
template <Scalar S>
S inner_product_even(const EvenFunction<S>& f, const EvenFunction<S>& g);

// irft(rft(f) * rft(g)).
template <Scalar S>
EvenFunction<S> cauchy_product_even(const EvenFunction<S>& f,
                                    const EvenFunction<S>& g);

// The row C(., d) as an even function mod r.
template <Scalar S>
EvenFunction<S> ramanujan_function(std::int64_t d, std::int64_t r);

#define DRFT_EXTERN_EVEN(S)                                                   \
  extern template EvenFunction<S> from_periodic(const ResidueFunction<S>&,    \
                                                double);                      \
  extern template ResidueFunction<S> to_periodic(const EvenFunction<S>&);     \
  extern template EvenSpectrum<S> rft(const EvenFunction<S>&);                \
  extern template EvenSpectrum<S> rft_divisor_form(const EvenFunction<S>&);   \
  extern template EvenFunction<S> irft(const EvenSpectrum<S>&);               \
  extern template S inner_product_even(const EvenFunction<S>&,                \
                                       const EvenFunction<S>&);               \
  extern template EvenFunction<S> cauchy_product_even(const EvenFunction<S>&, \
                                                      const EvenFunction<S>&); \
  extern template EvenFunction<S> ramanujan_function(std::int64_t,            \
                                                     std::int64_t);
DRFT_EXTERN_EVEN(Rational)
DRFT_EXTERN_EVEN(Complex)
#undef DRFT_EXTERN_EVEN

}  // namespace drft
