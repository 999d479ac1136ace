#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdet/bigint.hpp"
#include "qdet/rational.hpp"

namespace qdet {

/// Exact Laurent polynomial in one variable over the integers, stored as a
/// dense coefficient vector plus the exponent of its lowest-order term.
///
/// Canonical form: the zero polynomial is the empty vector with low() == 0;
/// otherwise the first and last coefficients are nonzero. The variable is
/// anonymous; printing chooses a symbol (q by default, t for the rings that
/// carry fractional q-powers with integer exponents).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long long c) {
    if (c != 0) c_.emplace_back(c);
  }
  explicit LaurentPoly(BigInt c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }

  static LaurentPoly monomial(BigInt coeff, long long exp);
  static LaurentPoly variable() { return monomial(BigInt(1), 1); }
  /// Build from a coefficient window starting at exponent `low`; normalizes.
  static LaurentPoly from_coeffs(long long low, std::vector<BigInt> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0].is_one(); }
  bool is_monomial() const { return c_.size() == 1; }

  /// Exponent of the lowest-order term (0 for the zero polynomial).
  long long low() const { return low_; }
  /// Exponent of the highest-order term (0 for the zero polynomial).
  long long high() const { return c_.empty() ? 0 : low_ + static_cast<long long>(c_.size()) - 1; }
  std::size_t length() const { return c_.size(); }

  /// Coefficient of v^e (zero outside the stored window).
  BigInt coeff(long long e) const {
    if (c_.empty() || e < low_ || e > high()) return BigInt(0);
    return c_[static_cast<std::size_t>(e - low_)];
  }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(unsigned long long e) const;

  /// Multiply by the monomial c * v^e.
  LaurentPoly mul_monomial(const BigInt& c, long long e) const;
  LaurentPoly mul_scalar(const BigInt& c) const { return mul_monomial(c, 0); }

  /// Exact rational value at q0. Throws ZERO_POINT when q0 = 0 meets a
  /// negative-exponent term.
  Rational eval(const Rational& q0) const;
  double eval_double(double x0) const;

  /// Exponent-lattice substitution v -> v^n (n >= 1): c * v^e becomes c * v^(n*e).
  LaurentPoly inflate(long long n) const;

  /// Signed monomial list in descending exponent order, e.g. "-q^-1 - q^-2".
  std::string to_string(std::string_view var = "q") const;
  /// JSON object {"low": int, "coeffs": [decimal strings from low() upward]}.
  std::string to_json() const;

 private:
  long long low_ = 0;
  std::vector<BigInt> c_;

  void trim();
  friend LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);
};

/// Exact quotient f/g in the Laurent ring; throws NON_EXACT_DIVISION when g
/// does not divide f (and when g = 0).
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace qdet
