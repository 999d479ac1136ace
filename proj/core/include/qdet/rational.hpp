#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "qdet/bigint.hpp"
#include "qdet/error.hpp"

namespace qdet {

/// Exact rational number. Always reduced to lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(int v) : num_(v), den_(1) {}        // NOLINT
  explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static Rational from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
  }

  /// Exact value of a finite double (every finite double is dyadic).
  static Rational from_double(double v);

  /// 2^e as an exact dyadic rational; e may be negative.
  static Rational pow2(long long e) {
    if (e >= 0) return Rational(pow(BigInt(2), static_cast<unsigned long>(e)));
    return Rational(BigInt(1), pow(BigInt(2), static_cast<unsigned long>(-e)));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) raise(Errc::NonExactDivision, "rational division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
  }

  Rational operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  /// Field division under the exact-ring protocol.
  friend Rational exact_div(Rational a, const Rational& b) { return a /= b; }

  friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }
  double to_double() const { return num_.to_double() / den_.to_double(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

 private:
  BigInt num_;
  BigInt den_;

  void reduce() {
    if (den_.is_zero()) raise(Errc::NonExactDivision, "rational with zero denominator");
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

inline Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) raise(Errc::BadSpec, "cannot convert a non-finite double");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  return Rational{BigInt(scaled)} * Rational::pow2(exp);
}

/// q0^e for a signed exponent; q0 must be nonzero when e < 0.
inline Rational pow(const Rational& base, long long e) {
  if (e >= 0) {
    return Rational(pow(base.num(), static_cast<unsigned long>(e)),
                    pow(base.den(), static_cast<unsigned long>(e)));
  }
  if (base.is_zero()) raise(Errc::ZeroPoint, "negative power of zero");
  return Rational(pow(base.den(), static_cast<unsigned long>(-e)),
                  pow(base.num(), static_cast<unsigned long>(-e)));
}

}  // namespace qdet
