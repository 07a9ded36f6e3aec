#pragma once

// The two scalar kinds carried by function values: exact rationals and
// double-precision complex numbers.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>

#include "drft/rational.hpp"

namespace drft {

using Complex = std::complex<double>;

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, Complex>;

inline Rational conjugate(const Rational& q) { return q; }
inline Complex conjugate(const Complex& z) { return std::conj(z); }

inline Complex to_complex(const Rational& q) { return {q.to_double(), 0.0}; }
inline Complex to_complex(const Complex& z) { return z; }

template <Scalar S>
S from_integer(std::int64_t n) {
  if constexpr (std::same_as<S, Rational>) {
    return Rational(n);
  } else {
    return Complex(static_cast<double>(n), 0.0);
  }
}

// x / n: exact for rationals, a multiplication by 1.0 / n for complex.
inline Rational divide_by(const Rational& x, std::int64_t n) {
  return x / Rational(n);
}
inline Complex divide_by(const Complex& x, std::int64_t n) {
  return x * (1.0 / static_cast<double>(n));
}

inline Rational scale(const Rational& x, std::int64_t n) {
  return x * Rational(n);
}
inline Complex scale(const Complex& x, std::int64_t n) {
  return x * static_cast<double>(n);
}

// Exact equality for rationals; |a - b| <= tolerance for complex.
inline bool same_value(const Rational& a, const Rational& b, double) {
  return a == b;
}
inline bool same_value(const Complex& a, const Complex& b, double tolerance) {
  return std::abs(a - b) <= tolerance;
}

}  // namespace drft
