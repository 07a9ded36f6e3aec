#include "drft/verify.hpp"

#include "drft/errors.hpp"
#include "drft/ramanujan.hpp"

namespace drft {

namespace {

void require_positive_modulus(std::int64_t r) {
  if (r < 1) {
    throw DomainError("modulus must be positive, got " + std::to_string(r));
  }
}

}  // namespace

VerificationReport<std::int64_t> verify_orthogonality(std::int64_t r) {
  require_positive_modulus(r);
  const DivisorLattice lattice(r);
  const auto& ds = lattice.divisors();
  const std::size_t t = lattice.size();
  VerificationReport<std::int64_t> report{"orthogonality", r, {}};
  report.checks.reserve(t * t);
  for (std::size_t d1 = 0; d1 < t; ++d1) {
    for (std::size_t d2 = 0; d2 < t; ++d2) {
      std::int64_t lhs = 0;
      for (std::size_t e = 0; e < t; ++e) {
        const std::size_t r_over_e = ds.complement_index(e);
        const std::int64_t term =
            checked_mul(checked_mul(lattice.kernel(r_over_e, d1),
                                    lattice.kernel(r_over_e, d2)),
                        lattice.phi(e));
        lhs = checked_add(lhs, term);
      }
      const std::int64_t rhs = d1 == d2 ? checked_mul(r, lattice.phi(d1)) : 0;
      report.checks.push_back(
          {{{"d1", ds[d1]}, {"d2", ds[d2]}}, lhs, rhs, lhs == rhs});
    }
  }
  return report;
}

VerificationReport<std::int64_t> verify_symmetry(std::int64_t r) {
  require_positive_modulus(r);
  const DivisorLattice lattice(r);
  const auto& ds = lattice.divisors();
  const std::size_t t = lattice.size();
  VerificationReport<std::int64_t> report{"symmetry", r, {}};
  report.checks.reserve(t * t);
  for (std::size_t d = 0; d < t; ++d) {
    for (std::size_t e = 0; e < t; ++e) {
      const std::int64_t lhs =
          checked_mul(lattice.phi(e), lattice.kernel(ds.complement_index(e), d));
      const std::int64_t rhs =
          checked_mul(lattice.phi(d), lattice.kernel(ds.complement_index(d), e));
      report.checks.push_back({{{"d", ds[d]}, {"e", ds[e]}}, lhs, rhs, lhs == rhs});
    }
  }
  return report;
}

namespace {

VerificationReport<Complex> bridge(const EvenFunction<Complex>& f,
                                   const EvenSpectrum<Complex>& spectrum,
                                   double tolerance) {
  const std::int64_t r = f.modulus();
  const DivisorLattice lattice(r);
  const auto& ds = lattice.divisors();
  const std::size_t t = lattice.size();
  const PeriodicSpectrum dft_values = dft(to_periodic(f));

  VerificationReport<Complex> report{"rft-dft bridge", r, {}};
  report.checks.reserve(2 * static_cast<std::size_t>(r) + t);
  auto record = [&](std::vector<Coordinate> at, Complex lhs, Complex rhs) {
    report.checks.push_back(
        {std::move(at), lhs, rhs, std::abs(lhs - rhs) <= tolerance});
  };

  for (std::int64_t k = 1; k <= r; ++k) {
    const std::size_t g = ds.index_of(std::gcd(k, r));
    Complex kernel_sum{0.0, 0.0};
    for (std::size_t e = 0; e < t; ++e) {
      kernel_sum += f.values()[e] *
                    static_cast<double>(lattice.kernel(g, ds.complement_index(e)));
    }
    record({{"dft-kernel k", k}}, dft_values(k), kernel_sum);
  }
  for (std::size_t d = 0; d < t; ++d) {
    record({{"rft-dft d", ds[d]}}, spectrum.values()[d],
           dft_values(ds[ds.complement_index(d)]));
  }
  for (std::int64_t k = 1; k <= r; ++k) {
    record({{"dft-even k", k}}, dft_values(k), dft_values(std::gcd(k, r)));
  }
  return report;
}

}  // namespace

VerificationReport<Complex> verify_rft_dft_bridge(const EvenFunction<Complex>& f,
                                                  double tolerance) {
  return bridge(f, rft(f), tolerance);
}

VerificationReport<Complex> verify_rft_dft_bridge(const EvenFunction<Rational>& f,
                                                  double tolerance) {
  std::vector<Complex> values;
  for (const auto& q : f.values()) values.push_back(to_complex(q));
  const EvenSpectrum<Rational> exact = rft(f);
  std::vector<Complex> coeffs;
  for (const auto& q : exact.values()) coeffs.push_back(to_complex(q));
  return bridge(EvenFunction<Complex>(f.divisors(), std::move(values)),
                EvenSpectrum<Complex>(f.divisors(), std::move(coeffs)),
                tolerance);
}

VerificationReport<std::int64_t> verify_cauchy_kernel_even(std::int64_t r) {
  require_positive_modulus(r);
  if (r > kCauchyKernelMaxModulus) {
    throw CapacityError("verify_cauchy_kernel_even: modulus " +
                        std::to_string(r) + " exceeds the cap " +
                        std::to_string(kCauchyKernelMaxModulus));
  }
  const DivisorList ds = divisors(r);
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(ds.size());
  for (std::int64_t d : ds) rows.push_back(ramanujan_row(d, r));
  auto c = [&](std::int64_t n, std::size_t d) {
    return rows[d][static_cast<std::size_t>(residue(n, r) - 1)];
  };

  VerificationReport<std::int64_t> report{"cauchy kernel", r, {}};
  report.checks.reserve(ds.size() * ds.size() * static_cast<std::size_t>(r));
  for (std::size_t d1 = 0; d1 < ds.size(); ++d1) {
    for (std::size_t d2 = 0; d2 < ds.size(); ++d2) {
      for (std::int64_t n = 1; n <= r; ++n) {
        std::int64_t lhs = 0;
        for (std::int64_t a = 1; a <= r; ++a) lhs += c(a, d1) * c(n - a, d2);
        const std::int64_t rhs = d1 == d2 ? r * c(n, d1) : 0;
        report.checks.push_back({{{"d1", ds[d1]}, {"d2", ds[d2]}, {"n", n}},
                                 lhs,
                                 rhs,
                                 lhs == rhs});
      }
    }
  }
  return report;
}

}  // namespace drft
