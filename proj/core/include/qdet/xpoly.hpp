#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdet/laurent.hpp"

namespace qdet {

/// Polynomial in the indeterminate x with LaurentPoly coefficients; entry i of
/// the coefficient vector holds the coefficient of x^i. Canonical form strips
/// trailing zero coefficients; the zero polynomial is the empty vector.
///
/// The x-degree is unbounded (elimination intermediates routinely exceed
/// degree 1); only final verified determinants are asserted linear in x.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(long long c) {
    if (c != 0) c_.emplace_back(LaurentPoly(c));
  }
  explicit XPoly(LaurentPoly c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }

  static XPoly variable() { return monomial(LaurentPoly(1), 1); }
  static XPoly monomial(LaurentPoly c, std::size_t xdeg);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  /// Degree in x; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  const LaurentPoly& coeff(std::size_t i) const;

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly operator-() const;
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);

  bool operator==(const XPoly& o) const { return c_ == o.c_; }
  bool operator!=(const XPoly& o) const { return !(*this == o); }

  /// Substitute a Laurent value for x.
  LaurentPoly eval_at(const LaurentPoly& x0) const;

  std::string to_string(std::string_view var = "q") const;

 private:
  std::vector<LaurentPoly> c_;

  void trim();
  friend XPoly exact_div(const XPoly& f, const XPoly& g);
};

/// Exact quotient in x with exact LaurentPoly coefficient divisions; throws
/// NON_EXACT_DIVISION when g does not divide f.
XPoly exact_div(const XPoly& f, const XPoly& g);

std::ostream& operator<<(std::ostream& os, const XPoly& p);

}  // namespace qdet
