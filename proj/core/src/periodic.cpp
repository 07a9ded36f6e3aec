#include "drft/periodic.hpp"

#include <cmath>
#include <numbers>

namespace drft {

PeriodicSpectrum::PeriodicSpectrum(std::int64_t r, std::vector<Complex> coeffs)
    : r_(r), coeffs_(std::move(coeffs)) {
  if (r_ < 1) {
    throw DomainError("modulus must be positive, got " + std::to_string(r_));
  }
  if (coeffs_.size() != static_cast<std::size_t>(r_)) {
    throw DomainError("expected " + std::to_string(r_) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

std::vector<Complex> unit_roots(std::int64_t r) {
  std::vector<Complex> roots(static_cast<std::size_t>(r));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(r);
  for (std::int64_t j = 0; j < r; ++j) {
    const double angle = static_cast<double>(j) * step;
    roots[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
  }
  return roots;
}

namespace {

// out(k) = sum_{n=1}^{r} in(n) roots[(sign * k * n) mod r], k = 1..r.
std::vector<Complex> direct_transform(std::span<const Complex> in, int sign) {
  const auto r = static_cast<std::int64_t>(in.size());
  const auto roots = unit_roots(r);
  std::vector<Complex> out(in.size());
  for (std::int64_t k = 1; k <= r; ++k) {
    Complex sum{0.0, 0.0};
    const std::int64_t k0 = k % r;
    std::int64_t idx = 0;
    for (std::int64_t n = 1; n <= r; ++n) {
      // idx = k * n mod r, advanced incrementally.
      idx += k0;
      if (idx >= r) idx -= r;
      const std::int64_t j = sign > 0 ? idx : (idx == 0 ? 0 : r - idx);
      sum += in[static_cast<std::size_t>(n - 1)] * roots[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(k - 1)] = sum;
  }
  return out;
}

}  // namespace

PeriodicSpectrum dft(const ResidueFunction<Complex>& f) {
  return PeriodicSpectrum(f.modulus(), direct_transform(f.values(), -1));
}

PeriodicSpectrum dft(const ResidueFunction<Rational>& f) {
  return dft(to_complex(f));
}

ResidueFunction<Complex> idft(const PeriodicSpectrum& spectrum) {
  auto values = direct_transform(spectrum.coeffs(), +1);
  const double inv_r = 1.0 / static_cast<double>(spectrum.modulus());
  for (auto& v : values) v *= inv_r;
  return ResidueFunction<Complex>(spectrum.modulus(), std::move(values));
}

ResidueFunction<Complex> to_complex(const ResidueFunction<Rational>& f) {
  std::vector<Complex> values;
  values.reserve(f.values().size());
  for (const auto& q : f.values()) values.push_back(drft::to_complex(q));
  return ResidueFunction<Complex>(f.modulus(), std::move(values));
}

ResidueFunction<Complex> cauchy_product_spectral(const ResidueFunction<Complex>& f,
                                                 const ResidueFunction<Complex>& g) {
  detail::require_same_modulus(f.modulus(), g.modulus());
  const PeriodicSpectrum ff = dft(f);
  const PeriodicSpectrum gg = dft(g);
  std::vector<Complex> product(ff.coeffs().size());
  for (std::size_t k = 0; k < product.size(); ++k) {
    product[k] = ff.coeffs()[k] * gg.coeffs()[k];
  }
  return idft(PeriodicSpectrum(f.modulus(), std::move(product)));
}

ResidueFunction<Complex> cauchy_product_spectral(const ResidueFunction<Rational>& f,
                                                 const ResidueFunction<Rational>& g) {
  return cauchy_product_spectral(to_complex(f), to_complex(g));
}

}  // namespace drft
