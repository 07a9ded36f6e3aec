#include <gtest/gtest.h>

#include <random>

#include "drft/errors.hpp"
#include "drft/rational.hpp"

using drft::ParseError;
using drft::Rational;

TEST(Rational, CanonicalPrinting) {
  EXPECT_EQ(Rational(6, 2).to_string(), "3");
  EXPECT_EQ(Rational(12, -9).to_string(), "-4/3");
  EXPECT_EQ(Rational(0, -5).to_string(), "0");
  EXPECT_EQ((Rational(5, 6) + Rational(1, 6)).to_string(), "1");
  EXPECT_EQ((Rational(3, 5) * Rational(3, 5) + Rational(3, 5)).to_string(), "24/25");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-14/6"), Rational(-7, 3));
  EXPECT_EQ(Rational::parse("+3/-6").to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").to_string(),
            "41152263004115226300411522630");
  for (const char* bad : {"", "/", "1/", "/2", "1.5", "a", "1/0", "1//2", " 1"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, Arithmetic) {
  const Rational x(3, 5);
  EXPECT_EQ(x * x * x * x, Rational(81, 625));
  EXPECT_EQ(x / x, Rational(1));
  EXPECT_EQ(-x, Rational(-3, 5));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(x.is_integer());
  EXPECT_THROW(x / Rational(0), drft::DomainError);
  EXPECT_THROW(Rational(1, 0), drft::DomainError);
}

TEST(Rational, TextRoundTripIsCanonical) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(-50, 50);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t q = den(rng);
    if (q == 0) continue;
    const Rational a(num(rng), q);
    const std::string text = a.to_string();
    const Rational b = Rational::parse(text);
    ASSERT_EQ(a, b);
    ASSERT_EQ(b.to_string(), text);
    ASSERT_EQ(text.find("/-"), std::string::npos);
    ASSERT_EQ(a.is_integer(), text.find('/') == std::string::npos);
  }
}
