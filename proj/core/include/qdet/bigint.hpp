#pragma once

#include <gmp.h>

#include <climits>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "qdet/error.hpp"

namespace qdet {

static_assert(sizeof(long) == 8, "LP64 platform expected (mpz small-value interop)");

/// Signed arbitrary-precision integer.
///
/// Values that fit a signed 64-bit word live inline; anything larger spills
/// into a heap mpz_t. Canonical form: the mpz slot is used only for values
/// outside the 64-bit range, so two equal values always share a representation
/// kind and there is a single zero.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) : v_(v) {}  // NOLINT: implicit by design, enables R(0)/R(1) in generic code
  BigInt(int v) : v_(v) {}

  BigInt(const BigInt& o) : v_(o.v_) {
    if (o.z_) {
      z_ = new_mpz();
      mpz_set(z_, o.z_);
    }
  }
  BigInt(BigInt&& o) noexcept : v_(o.v_), z_(o.z_) { o.z_ = nullptr; }

  BigInt& operator=(const BigInt& o) {
    if (this == &o) return *this;
    if (o.z_) {
      if (!z_) z_ = new_mpz();
      mpz_set(z_, o.z_);
    } else {
      release();
      v_ = o.v_;
    }
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    if (this == &o) return *this;
    release();
    v_ = o.v_;
    z_ = o.z_;
    o.z_ = nullptr;
    return *this;
  }
  ~BigInt() { release(); }

  static BigInt from_string(std::string_view s);
  std::string to_string() const;
  double to_double() const { return z_ ? mpz_get_d(z_) : static_cast<double>(v_); }

  bool is_zero() const { return !z_ && v_ == 0; }
  bool is_one() const { return !z_ && v_ == 1; }
  int sign() const {
    if (z_) return mpz_sgn(z_) > 0 ? 1 : -1;
    return (v_ > 0) - (v_ < 0);
  }
  bool odd() const { return z_ ? mpz_odd_p(z_) != 0 : (v_ & 1) != 0; }

  bool fits_longlong() const { return z_ == nullptr; }
  long long as_longlong() const {
    if (z_) raise(Errc::Internal, "BigInt does not fit a 64-bit word");
    return v_;
  }

  BigInt& operator+=(const BigInt& o) {
    if (!z_ && !o.z_) {
      long long r;
      if (!__builtin_add_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    ensure_big();
    if (o.z_) {
      mpz_add(z_, z_, o.z_);
    } else if (o.v_ >= 0) {
      mpz_add_ui(z_, z_, static_cast<unsigned long>(o.v_));
    } else {
      mpz_sub_ui(z_, z_, umag(o.v_));
    }
    demote();
    return *this;
  }

  BigInt& operator-=(const BigInt& o) {
    if (!z_ && !o.z_) {
      long long r;
      if (!__builtin_sub_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    ensure_big();
    if (o.z_) {
      mpz_sub(z_, z_, o.z_);
    } else if (o.v_ >= 0) {
      mpz_sub_ui(z_, z_, static_cast<unsigned long>(o.v_));
    } else {
      mpz_add_ui(z_, z_, umag(o.v_));
    }
    demote();
    return *this;
  }

  BigInt& operator*=(const BigInt& o) {
    if (!z_ && !o.z_) {
      long long r;
      if (!__builtin_mul_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    ensure_big();
    if (o.z_) {
      mpz_mul(z_, z_, o.z_);
    } else {
      mpz_mul_si(z_, z_, static_cast<long>(o.v_));
    }
    demote();
    return *this;
  }

  BigInt operator-() const {
    if (!z_ && v_ != LLONG_MIN) return BigInt(-v_);
    BigInt r(*this);
    r.ensure_big();
    mpz_neg(r.z_, r.z_);
    r.demote();
    return r;
  }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  /// *this += a * b, fused (the polynomial-multiplication hot path).
  void add_mul(const BigInt& a, const BigInt& b) {
    if (!z_ && !a.z_ && !b.z_) {
      __int128 t = static_cast<__int128>(a.v_) * b.v_ + v_;
      if (t == static_cast<__int128>(static_cast<long long>(t))) {
        v_ = static_cast<long long>(t);
        return;
      }
    }
    ensure_big();
    MpzView av(a), bv(b);
    mpz_addmul(z_, av, bv);
    demote();
  }

  /// *this -= a * b, fused.
  void sub_mul(const BigInt& a, const BigInt& b) {
    if (!z_ && !a.z_ && !b.z_) {
      __int128 t = static_cast<__int128>(v_) - static_cast<__int128>(a.v_) * b.v_;
      if (t == static_cast<__int128>(static_cast<long long>(t))) {
        v_ = static_cast<long long>(t);
        return;
      }
    }
    ensure_big();
    MpzView av(a), bv(b);
    mpz_submul(z_, av, bv);
    demote();
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    if (!a.z_ && !b.z_) return a.v_ == b.v_;
    if (a.z_ && b.z_) return mpz_cmp(a.z_, b.z_) == 0;
    return false;  // canonical: the mpz slot never holds a 64-bit value
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  friend BigInt abs(const BigInt& a) { return a.sign() < 0 ? -a : a; }

  friend BigInt gcd(const BigInt& a, const BigInt& b) {
    if (!a.z_ && !b.z_ && a.v_ != LLONG_MIN && b.v_ != LLONG_MIN) {
      unsigned long long g = std::gcd(static_cast<unsigned long long>(a.v_ < 0 ? -a.v_ : a.v_),
                                      static_cast<unsigned long long>(b.v_ < 0 ? -b.v_ : b.v_));
      return BigInt(static_cast<long long>(g));
    }
    MpzView av(a), bv(b);
    BigInt r;
    r.ensure_big();
    mpz_gcd(r.z_, av, bv);
    r.demote();
    return r;
  }

  /// Exact quotient a/b; throws NON_EXACT_DIVISION on a nonzero remainder
  /// (and on b = 0).
  friend BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) raise(Errc::NonExactDivision, "integer division by zero");
    if (!a.z_ && !b.z_ && !(a.v_ == LLONG_MIN && b.v_ == -1)) {
      if (a.v_ % b.v_ != 0) raise(Errc::NonExactDivision, "nonzero integer remainder");
      return BigInt(a.v_ / b.v_);
    }
    MpzView av(a), bv(b);
    BigInt q, r;
    q.ensure_big();
    r.ensure_big();
    mpz_tdiv_qr(q.z_, r.z_, av, bv);
    if (mpz_sgn(r.z_) != 0) raise(Errc::NonExactDivision, "nonzero integer remainder");
    q.demote();
    return q;
  }

  /// Quotient rounded toward minus infinity.
  friend BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) raise(Errc::NonExactDivision, "integer division by zero");
    if (!a.z_ && !b.z_ && !(a.v_ == LLONG_MIN && b.v_ == -1)) {
      long long q = a.v_ / b.v_;
      long long r = a.v_ % b.v_;
      if (r != 0 && ((r < 0) != (b.v_ < 0))) --q;
      return BigInt(q);
    }
    MpzView av(a), bv(b);
    BigInt q;
    q.ensure_big();
    mpz_fdiv_q(q.z_, av, bv);
    q.demote();
    return q;
  }

  /// Quotient rounded toward plus infinity.
  friend BigInt ceil_div(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) raise(Errc::NonExactDivision, "integer division by zero");
    if (!a.z_ && !b.z_ && !(a.v_ == LLONG_MIN && b.v_ == -1)) {
      long long q = a.v_ / b.v_;
      long long r = a.v_ % b.v_;
      if (r != 0 && ((r < 0) == (b.v_ < 0))) ++q;
      return BigInt(q);
    }
    MpzView av(a), bv(b);
    BigInt q;
    q.ensure_big();
    mpz_cdiv_q(q.z_, av, bv);
    q.demote();
    return q;
  }

  /// Least nonnegative residue of a modulo b (b > 0).
  friend BigInt mod_floor(const BigInt& a, const BigInt& b) {
    if (b.sign() <= 0) raise(Errc::BadModulus, "mod_floor needs a positive modulus");
    if (!a.z_ && !b.z_) {
      long long r = a.v_ % b.v_;
      if (r < 0) r += b.v_;
      return BigInt(r);
    }
    MpzView av(a), bv(b);
    BigInt r;
    r.ensure_big();
    mpz_fdiv_r(r.z_, av, bv);
    r.demote();
    return r;
  }

  friend BigInt pow(const BigInt& base, unsigned long e) {
    MpzView bv(base);
    BigInt r;
    r.ensure_big();
    mpz_pow_ui(r.z_, bv, e);
    r.demote();
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.to_string(); }

 private:
  long long v_ = 0;
  mpz_ptr z_ = nullptr;

  /// Read-only mpz view of a BigInt; materializes inline values on the stack.
  class MpzView {
   public:
    explicit MpzView(const BigInt& x) {
      if (x.z_) {
        p_ = x.z_;
        owns_ = false;
      } else {
        mpz_init_set_si(local_, static_cast<long>(x.v_));
        p_ = local_;
        owns_ = true;
      }
    }
    MpzView(const MpzView&) = delete;
    MpzView& operator=(const MpzView&) = delete;
    ~MpzView() {
      if (owns_) mpz_clear(local_);
    }
    operator mpz_srcptr() const { return p_; }

   private:
    mpz_t local_;
    mpz_srcptr p_ = nullptr;
    bool owns_ = false;
  };

  static unsigned long umag(long long v) {
    return static_cast<unsigned long>(0ULL - static_cast<unsigned long long>(v));
  }

  static mpz_ptr new_mpz() {
    auto p = new __mpz_struct;
    mpz_init(p);
    return p;
  }

  void release() {
    if (z_) {
      mpz_clear(z_);
      delete z_;
      z_ = nullptr;
    }
  }

  void ensure_big() {
    if (!z_) {
      z_ = new_mpz();
      mpz_set_si(z_, static_cast<long>(v_));
    }
  }

  void demote() {
    if (z_ && mpz_fits_slong_p(z_)) {
      v_ = mpz_get_si(z_);
      release();
    }
  }

  static int cmp(const BigInt& a, const BigInt& b) {
    if (!a.z_ && !b.z_) return (a.v_ > b.v_) - (a.v_ < b.v_);
    if (a.z_ && b.z_) return mpz_cmp(a.z_, b.z_);
    if (a.z_) return mpz_sgn(a.z_) > 0 ? 1 : -1;
    return mpz_sgn(b.z_) > 0 ? -1 : 1;
  }
};

inline BigInt BigInt::from_string(std::string_view s) {
  bool ok = !s.empty();
  std::size_t i = (ok && s[0] == '-') ? 1 : 0;
  ok = ok && i < s.size();
  for (std::size_t j = i; ok && j < s.size(); ++j) ok = s[j] >= '0' && s[j] <= '9';
  if (!ok) throw std::invalid_argument("BigInt::from_string: '" + std::string(s) + "'");
  BigInt r;
  r.ensure_big();
  mpz_set_str(r.z_, std::string(s).c_str(), 10);
  r.demote();
  return r;
}

inline std::string BigInt::to_string() const {
  if (!z_) return std::to_string(v_);
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefunc)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, std::strlen(s) + 1);
  return out;
}

}  // namespace qdet
