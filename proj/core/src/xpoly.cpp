#include "qdet/xpoly.hpp"

#include <algorithm>
#include <ostream>

namespace qdet {

namespace {
const LaurentPoly kZero;
}

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::monomial(LaurentPoly c, std::size_t xdeg) {
  XPoly p;
  if (!c.is_zero()) {
    p.c_.resize(xdeg + 1);
    p.c_[xdeg] = std::move(c);
  }
  return p;
}

const LaurentPoly& XPoly::coeff(std::size_t i) const {
  if (i >= c_.size()) return kZero;
  return c_[i];
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (this == &o) {
    for (auto& c : c_) c = c.mul_scalar(BigInt(2));
    return *this;
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (this == &o) {
    *this = XPoly();
    return *this;
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return XPoly();
  XPoly r;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

LaurentPoly XPoly::eval_at(const LaurentPoly& x0) const {
  LaurentPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
  return acc;
}

XPoly exact_div(const XPoly& f, const XPoly& g) {
  if (g.is_zero()) raise(Errc::NonExactDivision, "x-polynomial division by zero");
  if (f.is_zero()) return XPoly();
  if (f.c_.size() < g.c_.size()) raise(Errc::NonExactDivision, "x-degree of quotient would be negative");
  std::vector<LaurentPoly> rem = f.c_;
  const std::vector<LaurentPoly>& d = g.c_;
  const std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<LaurentPoly> quot(qlen);
  const LaurentPoly& lead = d.back();
  for (std::size_t i = qlen; i-- > 0;) {
    LaurentPoly qi = exact_div(rem[i + d.size() - 1], lead);
    if (!qi.is_zero()) {
      for (std::size_t j = 0; j + 1 < d.size(); ++j) rem[i + j] -= qi * d[j];
      rem[i + d.size() - 1] = LaurentPoly();
    }
    quot[i] = std::move(qi);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) raise(Errc::NonExactDivision, "nonzero x-polynomial remainder");
  }
  XPoly q;
  q.c_ = std::move(quot);
  q.trim();
  return q;
}

std::string XPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t ip1 = c_.size(); ip1-- > 0;) {
    const LaurentPoly& c = c_[ip1];
    if (c.is_zero()) continue;
    const std::size_t deg = ip1;
    std::string body;
    bool neg = false;
    if (deg == 0) {
      body = c.to_string(var);
      if (!body.empty() && body[0] == '-') {
        neg = true;
        body.erase(0, 1);
      }
    } else {
      std::string xs = deg == 1 ? "x" : "x^" + std::to_string(deg);
      if (c.is_one()) {
        body = xs;
      } else if ((-c).is_one()) {
        neg = true;
        body = xs;
      } else if (c.is_monomial()) {
        std::string cs = c.to_string(var);
        if (!cs.empty() && cs[0] == '-') {
          neg = true;
          cs.erase(0, 1);
        }
        body = cs + "*" + xs;
      } else {
        body = "(" + c.to_string(var) + ")*" + xs;
      }
    }
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << p.to_string(); }

}  // namespace qdet
