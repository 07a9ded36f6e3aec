#include <gtest/gtest.h>

#include <random>

#include "drft/verify.hpp"
#include "support/oracles.hpp"

using namespace drft;

namespace {

template <class V>
const IdentityCheck<V>& find(const VerificationReport<V>& report,
                             std::vector<std::int64_t> coords) {
  for (const auto& c : report.checks) {
    bool match = c.at.size() == coords.size();
    for (std::size_t i = 0; match && i < coords.size(); ++i) {
      match = c.at[i].value == coords[i];
    }
    if (match) return c;
  }
  throw std::runtime_error("coordinate not found");
}

}  // namespace

TEST(VerifyOrthogonality, Examples) {
  const auto report = verify_orthogonality(4);
  EXPECT_EQ(report.checks.size(), 9u);
  // C(4,2) C(4,2) phi(1) + C(2,2) C(2,2) phi(2) ... evaluated by hand:
  // 1*1*1 + 1*1*1 + (-1)(-1)*2 = 4 = r phi(2)
  const auto& same = find(report, {2, 2});
  EXPECT_EQ(same.lhs, 4);
  EXPECT_EQ(same.rhs, 4);
  EXPECT_TRUE(same.holds);
  const auto& mixed = find(report, {1, 2});
  EXPECT_EQ(mixed.lhs, 0);
  EXPECT_TRUE(mixed.holds);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.first_failure(), nullptr);

  const auto one = verify_orthogonality(1);
  ASSERT_EQ(one.checks.size(), 1u);
  EXPECT_EQ(one.checks[0].lhs, 1);
  EXPECT_TRUE(one.passed());
  EXPECT_THROW(verify_orthogonality(0), DomainError);
}

TEST(VerifyOrthogonality, AllModuliUpTo200) {
  for (std::int64_t r = 1; r <= 200; ++r) {
    const auto report = verify_orthogonality(r);
    ASSERT_TRUE(report.passed()) << r;
    ASSERT_EQ(report.checks.size(), divisors(r).size() * divisors(r).size());
  }
}

TEST(VerifySymmetry, Examples) {
  const auto report = verify_symmetry(4);
  const auto& c = find(report, {4, 2});
  EXPECT_EQ(c.lhs, -2);
  EXPECT_EQ(c.rhs, -2);
  for (const auto& check : report.checks) {
    if (check.at[0].value == check.at[1].value) EXPECT_EQ(check.lhs, check.rhs);
  }
  const auto twelve = verify_symmetry(12);
  EXPECT_EQ(twelve.checks.size(), 36u);
  EXPECT_TRUE(twelve.passed());
}

TEST(VerifySymmetry, AllModuliUpTo200) {
  for (std::int64_t r = 1; r <= 200; ++r) ASSERT_TRUE(verify_symmetry(r).passed()) << r;
}

TEST(VerifyBridge, Examples) {
  std::vector<Rational> gcd_values{Rational(1), Rational(2), Rational(4)};
  const EvenFunction<Rational> g(4, gcd_values);
  const auto report = verify_rft_dft_bridge(g);
  EXPECT_TRUE(report.passed());
  // DFT of n -> gcd(n, 4), evaluated directly: F(4) = 8, F(2) = 4, F(1) = F(3) = 2
  const auto spectrum = dft(to_periodic(g));
  const double expected[] = {2.0, 4.0, 2.0, 8.0};
  for (std::int64_t k = 1; k <= 4; ++k) {
    EXPECT_LE(std::abs(spectrum(k) - Complex(expected[k - 1])), 1e-12);
  }
  EXPECT_LE(std::abs(find(report, {1}).lhs - Complex(2.0)), 1e-12);

  const EvenFunction<Rational> one(4, std::vector<Rational>(3, Rational(1)));
  EXPECT_TRUE(verify_rft_dft_bridge(one).passed());

  const auto c6 = ramanujan_function<Rational>(6, 6);
  const auto c6_report = verify_rft_dft_bridge(c6);
  EXPECT_TRUE(c6_report.passed());
  EXPECT_LE(std::abs(dft(to_periodic(c6))(1) - Complex(6.0)), 1e-12);
}

TEST(VerifyBridge, RandomEvenFunctions) {
  std::mt19937_64 rng(31);
  for (std::int64_t r = 1; r <= 128; ++r) {
    ASSERT_TRUE(verify_rft_dft_bridge(drft::testing::random_even_complex(r, rng)).passed()) << r;
    ASSERT_TRUE(verify_rft_dft_bridge(drft::testing::random_even_rational(r, rng)).passed()) << r;
  }
}

TEST(VerifyBridge, ReportsFailureWhenToleranceIsImpossible) {
  std::mt19937_64 rng(32);
  const auto report = verify_rft_dft_bridge(drft::testing::random_even_complex(30, rng), -1.0);
  EXPECT_FALSE(report.passed());
  ASSERT_NE(report.first_failure(), nullptr);
}

TEST(VerifyCauchyKernel, Examples) {
  const auto report = verify_cauchy_kernel_even(4);
  const auto& c = find(report, {2, 2, 1});
  EXPECT_EQ(c.lhs, -4);
  EXPECT_EQ(c.rhs, -4);
  for (std::int64_t n = 1; n <= 4; ++n) EXPECT_EQ(find(report, {2, 4, n}).lhs, 0);
  EXPECT_TRUE(report.passed());

  const auto one = verify_cauchy_kernel_even(1);
  ASSERT_EQ(one.checks.size(), 1u);
  EXPECT_EQ(one.checks[0].lhs, 1);
  EXPECT_TRUE(one.passed());

  EXPECT_THROW(verify_cauchy_kernel_even(kCauchyKernelMaxModulus + 1), CapacityError);
}

TEST(VerifyCauchyKernel, AllModuliUpTo60) {
  for (std::int64_t r = 1; r <= 60; ++r) ASSERT_TRUE(verify_cauchy_kernel_even(r).passed()) << r;
}
