#pragma once

// Deterministic random generators for property-style tests.

#include <random>
#include <string>
#include <vector>

#include "qdet/laurent.hpp"
#include "qdet/matrix.hpp"
#include "qdet/rational.hpp"
#include "qdet/xpoly.hpp"

namespace qdet::testing {

/// Random integer with roughly the requested bit width, sign included.
/// Routinely crosses the 64-bit boundary so both representations get hit.
inline BigInt random_bigint(std::mt19937& rng, int max_bits = 80) {
  std::uniform_int_distribution<int> bits_dist(1, max_bits);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> sign(0, 1);
  int digits = std::max(1, bits_dist(rng) * 3 / 10);
  std::string s = sign(rng) ? "-" : "";
  s += static_cast<char>('1' + digit(rng) % 9);
  for (int i = 1; i < digits; ++i) s += static_cast<char>('0' + digit(rng));
  return BigInt::from_string(s);
}

inline Rational random_rational(std::mt19937& rng, long long max_abs = 30) {
  std::uniform_int_distribution<long long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long long> den(1, max_abs);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

/// Random Laurent polynomial with at most `max_support` terms, coefficients
/// in [-coeff_bound, coeff_bound] and exponents in [min_exp, max_exp].
inline LaurentPoly random_laurent(std::mt19937& rng, int max_support = 3, long long coeff_bound = 9,
                                  long long min_exp = -3, long long max_exp = 3) {
  std::uniform_int_distribution<int> support(0, max_support);
  std::uniform_int_distribution<long long> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<long long> exp(min_exp, max_exp);
  LaurentPoly p;
  int terms = support(rng);
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(BigInt(coeff(rng)), exp(rng));
  return p;
}

inline LaurentPoly random_nonzero_laurent(std::mt19937& rng, int max_support = 3,
                                          long long coeff_bound = 9) {
  for (;;) {
    LaurentPoly p = random_laurent(rng, max_support, coeff_bound);
    if (!p.is_zero()) return p;
  }
}

inline Matrix<LaurentPoly> random_laurent_matrix(std::mt19937& rng, std::size_t n,
                                                 int max_support = 3, long long coeff_bound = 9) {
  Matrix<LaurentPoly> m(n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k) m(j, k) = random_laurent(rng, max_support, coeff_bound);
  return m;
}

inline XPoly random_xpoly(std::mt19937& rng, int max_xdeg = 2) {
  std::uniform_int_distribution<int> deg(0, max_xdeg);
  XPoly p;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) p += XPoly::monomial(random_laurent(rng, 2, 5, -2, 2), static_cast<std::size_t>(i));
  return p;
}

}  // namespace qdet::testing
