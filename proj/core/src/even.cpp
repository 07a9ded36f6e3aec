#include "drft/even.hpp"

#include "drft/ramanujan.hpp"

namespace drft {

template <Scalar S>
EvenFunction<S> from_periodic(const ResidueFunction<S>& f, double tolerance) {
  if (auto witness = evenness_witness(f, tolerance)) {
    throw NotEvenError(*witness);
  }
  DivisorList ds = divisors(f.modulus());
  std::vector<S> values;
  values.reserve(ds.size());
  for (std::int64_t d : ds) values.push_back(f(d));
  return EvenFunction<S>(std::move(ds), std::move(values));
}

template <Scalar S>
ResidueFunction<S> to_periodic(const EvenFunction<S>& f) {
  const std::int64_t r = f.modulus();
  return ResidueFunction<S>::generate(
      r, [&](std::int64_t n) { return f.at(std::gcd(n, r)); });
}

template <Scalar S>
EvenSpectrum<S> rft(const EvenFunction<S>& f) {
  const DivisorLattice lattice(f.modulus());
  const auto& ds = lattice.divisors();
  const std::size_t t = lattice.size();
  std::vector<S> coeffs;
  coeffs.reserve(t);
  for (std::size_t d = 0; d < t; ++d) {
    S sum = from_integer<S>(0);
    for (std::size_t e = 0; e < t; ++e) {
      // sum over gcd(n, r) = e of C(n, d) = phi(r / e) * C(e, d)
      const std::int64_t grouped =
          checked_mul(lattice.phi(ds.complement_index(e)), lattice.kernel(e, d));
      if (grouped != 0) sum += scale(f.values()[e], grouped);
    }
    coeffs.push_back(divide_by(sum, lattice.phi(d)));
  }
  return EvenSpectrum<S>(ds, std::move(coeffs));
}

template <Scalar S>
EvenSpectrum<S> rft_divisor_form(const EvenFunction<S>& f) {
  const DivisorLattice lattice(f.modulus());
  const auto& ds = lattice.divisors();
  const std::size_t t = lattice.size();
  std::vector<S> coeffs;
  coeffs.reserve(t);
  for (std::size_t d = 0; d < t; ++d) {
    const std::size_t r_over_d = ds.complement_index(d);
    S sum = from_integer<S>(0);
    for (std::size_t e = 0; e < t; ++e) {
      const std::int64_t c = lattice.kernel(r_over_d, e);
      if (c != 0) sum += scale(f.values()[ds.complement_index(e)], c);
    }
    coeffs.push_back(std::move(sum));
  }
  return EvenSpectrum<S>(ds, std::move(coeffs));
}

template <Scalar S>
EvenFunction<S> irft(const EvenSpectrum<S>& spectrum) {
  const DivisorLattice lattice(spectrum.modulus());
  const std::size_t t = lattice.size();
  std::vector<S> values;
  values.reserve(t);
  for (std::size_t e = 0; e < t; ++e) {
    S sum = from_integer<S>(0);
    for (std::size_t d = 0; d < t; ++d) {
      const std::int64_t c = lattice.kernel(e, d);
      if (c != 0) sum += scale(spectrum.values()[d], c);
    }
    values.push_back(divide_by(sum, lattice.modulus()));
  }
  return EvenFunction<S>(lattice.divisors(), std::move(values));
}

template <Scalar S>
S inner_product_even(const EvenFunction<S>& f, const EvenFunction<S>& g) {
  detail::require_same_modulus(f.modulus(), g.modulus());
  const DivisorLattice lattice(f.modulus());
  const auto& ds = lattice.divisors();
  S sum = from_integer<S>(0);
  for (std::size_t d = 0; d < ds.size(); ++d) {
    sum += scale(f.values()[d] * conjugate(g.values()[d]),
                 lattice.phi(ds.complement_index(d)));
  }
  return sum;
}

template <Scalar S>
EvenFunction<S> cauchy_product_even(const EvenFunction<S>& f,
                                    const EvenFunction<S>& g) {
  detail::require_same_modulus(f.modulus(), g.modulus());
  const EvenSpectrum<S> rf = rft_divisor_form(f);
  const EvenSpectrum<S> rg = rft_divisor_form(g);
  std::vector<S> product;
  product.reserve(rf.values().size());
  for (std::size_t d = 0; d < rf.values().size(); ++d) {
    product.push_back(rf.values()[d] * rg.values()[d]);
  }
  return irft(EvenSpectrum<S>(rf.divisors(), std::move(product)));
}

template <Scalar S>
EvenFunction<S> ramanujan_function(std::int64_t d, std::int64_t r) {
  const DivisorLattice lattice(r);
  const std::size_t di = lattice.divisors().index_of(d);
  std::vector<S> values;
  values.reserve(lattice.size());
  for (std::size_t m = 0; m < lattice.size(); ++m) {
    values.push_back(from_integer<S>(lattice.kernel(m, di)));
  }
  return EvenFunction<S>(lattice.divisors(), std::move(values));
}

#define DRFT_INSTANTIATE_EVEN(S)                                             \
  template EvenFunction<S> from_periodic(const ResidueFunction<S>&, double); \
  template ResidueFunction<S> to_periodic(const EvenFunction<S>&);           \
  template EvenSpectrum<S> rft(const EvenFunction<S>&);                      \
  template EvenSpectrum<S> rft_divisor_form(const EvenFunction<S>&);         \
  template EvenFunction<S> irft(const EvenSpectrum<S>&);                     \
  template S inner_product_even(const EvenFunction<S>&,                      \
                                const EvenFunction<S>&);                     \
  template EvenFunction<S> cauchy_product_even(const EvenFunction<S>&,       \
                                               const EvenFunction<S>&);      \
  template EvenFunction<S> ramanujan_function(std::int64_t, std::int64_t);
DRFT_INSTANTIATE_EVEN(Rational)
DRFT_INSTANTIATE_EVEN(Complex)
#undef DRFT_INSTANTIATE_EVEN

}  // namespace drft
