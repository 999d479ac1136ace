#include "qdet/laurent.hpp"

#include <algorithm>
#include <ostream>

#include <nlohmann/json.hpp>

namespace qdet {

void LaurentPoly::trim() {
  std::size_t front = 0;
  while (front < c_.size() && c_[front].is_zero()) ++front;
  if (front == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t back = c_.size();
  while (back > front && c_[back - 1].is_zero()) --back;
  if (front > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(front));
  c_.resize(back - front);
  low_ += static_cast<long long>(front);
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, long long exp) {
  LaurentPoly p;
  if (!coeff.is_zero()) {
    p.low_ = exp;
    p.c_.push_back(std::move(coeff));
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long long low, std::vector<BigInt> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (this == &o) {
    // Self-addition: doubling keeps the canonical form (no new zeros).
    for (auto& c : c_) c *= BigInt(2);
    return *this;
  }
  long long lo = std::min(low_, o.low_);
  long long hi = std::max(high(), o.high());
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = std::move(c_[i]);
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
  c_ = std::move(out);
  low_ = lo;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = -o;
    return *this;
  }
  if (this == &o) {
    *this = LaurentPoly();
    return *this;
  }
  long long lo = std::min(low_, o.low_);
  long long hi = std::max(high(), o.high());
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = std::move(c_[i]);
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] -= o.c_[i];
  c_ = std::move(out);
  low_ = lo;
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j].add_mul(a.c_[i], b.c_[j]);
  }
  r.low_ = a.low_ + b.low_;
  r.trim();  // no-op over an integral domain, kept as a canonical-form guard
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long long e) const {
  LaurentPoly acc(1);
  LaurentPoly base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

LaurentPoly LaurentPoly::mul_monomial(const BigInt& c, long long e) const {
  if (c.is_zero() || is_zero()) return LaurentPoly();
  LaurentPoly r(*this);
  r.low_ += e;
  if (!c.is_one()) {
    for (auto& x : r.c_) x *= c;
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (is_zero()) return Rational(0);
  if (q0.is_zero()) {
    if (low_ < 0) raise(Errc::ZeroPoint, "Laurent polynomial with negative exponents evaluated at 0");
    return Rational(coeff(0));
  }
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * q0 + Rational(c_[i]);
  }
  return acc * qdet::pow(q0, low_);
}

double LaurentPoly::eval_double(double x0) const {
  if (is_zero()) return 0.0;
  // Extended precision absorbs the cancellation of alternating coefficient
  // sums (binomial expansions evaluated near 1).
  long double acc = 0.0L;
  const long double x = x0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + static_cast<long double>(c_[i].to_double());
  }
  long double shift = 1.0L;
  long long e = low_;
  long double base = e < 0 ? 1.0L / x : x;
  for (long long k = 0; k < (e < 0 ? -e : e); ++k) shift *= base;
  return static_cast<double>(acc * shift);
}

LaurentPoly LaurentPoly::inflate(long long n) const {
  if (n < 1) raise(Errc::BadSpec, "inflate requires n >= 1");
  if (is_zero() || n == 1) return *this;
  LaurentPoly r;
  r.low_ = low_ * n;
  r.c_.resize(static_cast<std::size_t>((c_.size() - 1) * static_cast<std::size_t>(n) + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(n)] = c_[i];
  return r;
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) raise(Errc::NonExactDivision, "Laurent division by zero polynomial");
  if (f.is_zero()) return LaurentPoly();
  if (f.c_.size() < g.c_.size()) raise(Errc::NonExactDivision, "quotient support would be negative");
  // Valuation-normalize both operands, then classical top-down long division
  // over plain polynomials; every leading-coefficient division must be exact.
  std::vector<BigInt> rem = f.c_;
  const std::vector<BigInt>& d = g.c_;
  const std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<BigInt> quot(qlen);
  const BigInt& lead = d.back();
  for (std::size_t i = qlen; i-- > 0;) {
    BigInt qi = exact_div(rem[i + d.size() - 1], lead);
    if (!qi.is_zero()) {
      for (std::size_t j = 0; j + 1 < d.size(); ++j) rem[i + j].sub_mul(qi, d[j]);
      rem[i + d.size() - 1] = BigInt(0);
    }
    quot[i] = std::move(qi);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) raise(Errc::NonExactDivision, "nonzero Laurent remainder");
  }
  LaurentPoly q;
  q.c_ = std::move(quot);
  q.low_ = f.low_ - g.low_;
  q.trim();
  return q;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long long e = high(); e >= low_; --e) {
    BigInt c = coeff(e);
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    BigInt mag = abs(c);
    if (e == 0) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) {
        out += mag.to_string();
        out += "*";
      }
      out += var;
      if (e != 1) {
        out += "^";
        out += std::to_string(e);
      }
    }
  }
  return out;
}

std::string LaurentPoly::to_json() const {
  nlohmann::json j;
  j["low"] = low_;
  auto arr = nlohmann::json::array();
  for (const auto& c : c_) arr.push_back(c.to_string());
  j["coeffs"] = std::move(arr);
  return j.dump();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace qdet
