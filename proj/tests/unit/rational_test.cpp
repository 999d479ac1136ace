#include "qdet/rational.hpp"

#include <gtest/gtest.h>

#include <random>

#include "random_values.hpp"

namespace qdet {
namespace {

using testing::random_rational;

TEST(RationalTest, ReductionInvariants) {
  EXPECT_EQ(Rational(BigInt(6), BigInt(4)).to_string(), "3/2");
  EXPECT_EQ(Rational(BigInt(-6), BigInt(-4)).to_string(), "3/2");
  EXPECT_EQ(Rational(BigInt(6), BigInt(-4)).to_string(), "-3/2");
  EXPECT_EQ(Rational(BigInt(0), BigInt(17)).to_string(), "0");
  EXPECT_EQ(Rational(BigInt(0), BigInt(17)).den(), BigInt(1));
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), Error);
}

TEST(RationalTest, FieldIdentities) {
  std::mt19937 rng(8101);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      EXPECT_EQ(a * b / b, a);
    }
    EXPECT_EQ(a + Rational(0), a);
    EXPECT_EQ(a * Rational(1), a);
    // Results of arithmetic stay reduced with positive denominators.
    Rational s = a * b;
    EXPECT_GT(s.den().sign(), 0);
    EXPECT_TRUE(gcd(s.num(), s.den()).is_one());
  }
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(RationalTest, DyadicPowers) {
  EXPECT_EQ(Rational::pow2(5).to_string(), "32");
  EXPECT_EQ(Rational::pow2(0).to_string(), "1");
  EXPECT_EQ(Rational::pow2(-3).to_string(), "1/8");
  EXPECT_EQ(Rational::pow2(-1) - Rational(1), Rational(BigInt(-1), BigInt(2)));
}

TEST(RationalTest, SignedPow) {
  Rational half(BigInt(1), BigInt(2));
  EXPECT_EQ(pow(half, 3).to_string(), "1/8");
  EXPECT_EQ(pow(half, -2).to_string(), "4");
  EXPECT_EQ(pow(Rational(-3), 2).to_string(), "9");
  EXPECT_EQ(pow(Rational(5), 0).to_string(), "1");
  EXPECT_THROW(pow(Rational(0), -1), Error);
}

TEST(RationalTest, StringRoundTrip) {
  for (const char* s : {"0", "-3/7", "22/7", "-9223372036854775808", "1/2"}) {
    EXPECT_EQ(Rational::from_string(s).to_string(), s);
  }
  EXPECT_EQ(Rational::from_string("6/4").to_string(), "3/2");  // normalized on entry
}

TEST(RationalTest, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(1.5), Rational(BigInt(3), BigInt(2)));
  EXPECT_EQ(Rational::from_double(10.0), Rational(10));
  EXPECT_EQ(Rational::from_double(-0.25), Rational(BigInt(-1), BigInt(4)));
  EXPECT_EQ(Rational::from_double(0.0), Rational(0));
  // Non-dyadic doubles convert to their exact binary value.
  std::mt19937 rng(8102);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    double v = dist(rng);
    EXPECT_EQ(Rational::from_double(v).to_double(), v);
  }
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2)));
  EXPECT_LT(Rational(-1), Rational(BigInt(1), BigInt(9)));
  EXPECT_GT(Rational(BigInt(7), BigInt(2)), Rational(3));
}

}  // namespace
}  // namespace qdet
