#include "qdet/bigint.hpp"

#include <gmp.h>
#include <gtest/gtest.h>

#include <climits>
#include <random>
#include <string>

#include "random_values.hpp"

namespace qdet {
namespace {

using testing::random_bigint;

std::string mpz_str(mpz_srcptr z) {
  char* s = mpz_get_str(nullptr, 10, z);
  std::string out(s);
  void (*freefunc)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

/// Raw-GMP mirror of a binary operation, used as the arithmetic oracle.
std::string gmp_binop(const std::string& a, const std::string& b, const char* op) {
  mpz_t x, y, r;
  mpz_init_set_str(x, a.c_str(), 10);
  mpz_init_set_str(y, b.c_str(), 10);
  mpz_init(r);
  if (op[0] == '+') mpz_add(r, x, y);
  else if (op[0] == '-') mpz_sub(r, x, y);
  else if (op[0] == '*') mpz_mul(r, x, y);
  else if (op[0] == 'g') mpz_gcd(r, x, y);
  else if (op[0] == 'f') mpz_fdiv_q(r, x, y);
  else if (op[0] == 'c') mpz_cdiv_q(r, x, y);
  else if (op[0] == 'm') mpz_fdiv_r(r, x, y);
  std::string out = mpz_str(r);
  mpz_clear(x);
  mpz_clear(y);
  mpz_clear(r);
  return out;
}

TEST(BigIntTest, StringRoundTrip) {
  for (const char* s : {"0", "1", "-1", "42", "-9223372036854775808", "9223372036854775807",
                        "18446744073709551616", "-340282366920938463463374607431768211457",
                        "123456789012345678901234567890123456789"}) {
    EXPECT_EQ(BigInt::from_string(s).to_string(), s);
  }
}

TEST(BigIntTest, CanonicalZeroAndParseErrors) {
  EXPECT_EQ(BigInt().to_string(), "0");
  EXPECT_TRUE(BigInt() == BigInt(0));
  EXPECT_EQ(BigInt::from_string("-0").to_string(), "0");  // normalized on entry
  EXPECT_THROW(BigInt::from_string(""), std::invalid_argument);
  EXPECT_THROW(BigInt::from_string("12x"), std::invalid_argument);
  EXPECT_THROW(BigInt::from_string("-"), std::invalid_argument);
  EXPECT_THROW(BigInt::from_string("1 2"), std::invalid_argument);
}

TEST(BigIntTest, SmallWordOverflowEdges) {
  BigInt max(LLONG_MAX);
  BigInt min(LLONG_MIN);
  EXPECT_EQ((max + BigInt(1)).to_string(), "9223372036854775808");
  EXPECT_EQ((min - BigInt(1)).to_string(), "-9223372036854775809");
  EXPECT_EQ((min * BigInt(-1)).to_string(), "9223372036854775808");
  EXPECT_EQ((-min).to_string(), "9223372036854775808");
  EXPECT_EQ(abs(min).to_string(), "9223372036854775808");
  // Values shrink back to the inline representation after cancellation.
  BigInt big = max + BigInt(5);
  BigInt back = big - BigInt(5);
  EXPECT_TRUE(back.fits_longlong());
  EXPECT_EQ(back.as_longlong(), LLONG_MAX);
}

TEST(BigIntTest, ArithmeticAgreesWithGmp) {
  std::mt19937 rng(7001);
  for (int trial = 0; trial < 3000; ++trial) {
    BigInt a = random_bigint(rng);
    BigInt b = random_bigint(rng);
    std::string sa = a.to_string(), sb = b.to_string();
    EXPECT_EQ((a + b).to_string(), gmp_binop(sa, sb, "+"));
    EXPECT_EQ((a - b).to_string(), gmp_binop(sa, sb, "-"));
    EXPECT_EQ((a * b).to_string(), gmp_binop(sa, sb, "*"));
    EXPECT_EQ(gcd(a, b).to_string(), gmp_binop(sa, sb, "g"));
    if (!b.is_zero()) {
      EXPECT_EQ(floor_div(a, b).to_string(), gmp_binop(sa, sb, "f"));
      EXPECT_EQ(ceil_div(a, b).to_string(), gmp_binop(sa, sb, "c"));
      if (b.sign() > 0) {
        EXPECT_EQ(mod_floor(a, b).to_string(), gmp_binop(sa, sb, "m"));
      }
    }
  }
}

TEST(BigIntTest, FusedMulAgreesWithComposition) {
  std::mt19937 rng(7002);
  for (int trial = 0; trial < 2000; ++trial) {
    BigInt acc = random_bigint(rng);
    BigInt a = random_bigint(rng);
    BigInt b = random_bigint(rng);
    BigInt fused = acc;
    fused.add_mul(a, b);
    EXPECT_EQ(fused, acc + a * b);
    BigInt fused2 = acc;
    fused2.sub_mul(a, b);
    EXPECT_EQ(fused2, acc - a * b);
  }
}

TEST(BigIntTest, ExactDivision) {
  std::mt19937 rng(7003);
  for (int trial = 0; trial < 1000; ++trial) {
    BigInt a = random_bigint(rng);
    BigInt b = random_bigint(rng);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_div(a * b, b), a);
  }
  EXPECT_THROW(exact_div(BigInt(7), BigInt(2)), Error);
  EXPECT_THROW(exact_div(BigInt(7), BigInt(0)), Error);
  try {
    exact_div(BigInt(7), BigInt(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonExactDivision);
  }
}

TEST(BigIntTest, FloorCeilModOnNegatives) {
  EXPECT_EQ(floor_div(BigInt(-1), BigInt(3)), BigInt(-1));
  EXPECT_EQ(ceil_div(BigInt(-1), BigInt(3)), BigInt(0));
  EXPECT_EQ(floor_div(BigInt(-5), BigInt(3)), BigInt(-2));
  EXPECT_EQ(mod_floor(BigInt(-5), BigInt(3)), BigInt(1));
  EXPECT_EQ(mod_floor(BigInt(-3), BigInt(3)), BigInt(0));
}

TEST(BigIntTest, Comparisons) {
  std::mt19937 rng(7004);
  for (int trial = 0; trial < 1000; ++trial) {
    BigInt a = random_bigint(rng);
    BigInt b = random_bigint(rng);
    mpz_t x, y;
    mpz_init_set_str(x, a.to_string().c_str(), 10);
    mpz_init_set_str(y, b.to_string().c_str(), 10);
    int c = mpz_cmp(x, y);
    EXPECT_EQ(a < b, c < 0);
    EXPECT_EQ(a > b, c > 0);
    EXPECT_EQ(a == b, c == 0);
    EXPECT_EQ(a <= b, c <= 0);
    mpz_clear(x);
    mpz_clear(y);
  }
}

TEST(BigIntTest, PowAndSign) {
  EXPECT_EQ(pow(BigInt(2), 10), BigInt(1024));
  EXPECT_EQ(pow(BigInt(2), 0), BigInt(1));
  EXPECT_EQ(pow(BigInt(-3), 3), BigInt(-27));
  EXPECT_EQ(pow(BigInt(2), 100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ(BigInt(-5).sign(), -1);
  EXPECT_EQ(BigInt(0).sign(), 0);
  EXPECT_EQ(BigInt(5).sign(), 1);
  EXPECT_TRUE(BigInt(3).odd());
  EXPECT_FALSE(BigInt(-4).odd());
  EXPECT_TRUE(BigInt::from_string("18446744073709551617").odd());
}

}  // namespace
}  // namespace qdet
