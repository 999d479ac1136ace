#include "qdet/ntheory.hpp"

#include <numeric>

#include "qdet/error.hpp"

namespace qdet {

int jacobi(const BigInt& m, const BigInt& n) {
  if (n.sign() <= 0 || !n.odd()) raise(Errc::BadModulus, "Jacobi symbol needs an odd positive modulus");
  if (n.is_one()) return 1;
  BigInt a = mod_floor(m, n);
  BigInt b = n;
  int result = 1;
  while (!a.is_zero()) {
    // Strip factors of two; each one contributes (2/b) = (-1)^((b^2-1)/8).
    while (!a.odd()) {
      a = exact_div(a, BigInt(2));
      long long b8 = mod_floor(b, BigInt(8)).as_longlong();
      if (b8 == 3 || b8 == 5) result = -result;
    }
    std::swap(a, b);
    // Quadratic reciprocity for odd coprime arguments.
    if (mod_floor(a, BigInt(4)).as_longlong() == 3 && mod_floor(b, BigInt(4)).as_longlong() == 3) {
      result = -result;
    }
    a = mod_floor(a, b);
  }
  return b.is_one() ? result : 0;
}

long long floor_div_ll(long long p, long long n) {
  if (n < 1) raise(Errc::BadModulus, "floor_div needs a positive divisor");
  long long q = p / n;
  long long r = p % n;
  if (r < 0) --q;
  return q;
}

long long ceil_div_ll(long long p, long long n) {
  if (n < 1) raise(Errc::BadModulus, "ceil_div needs a positive divisor");
  long long q = p / n;
  long long r = p % n;
  if (r > 0) ++q;
  return q;
}

long long mod_nonneg(long long p, long long n) {
  if (n < 1) raise(Errc::BadModulus, "mod_nonneg needs a positive modulus");
  long long r = p % n;
  if (r < 0) r += n;
  return r;
}

MulPermutation MulPermutation::make(long long a, long long n) {
  if (n < 1 || n % 2 == 0) raise(Errc::BadModulus, "multiplication permutation needs an odd positive n");
  if (std::gcd(mod_nonneg(a, n), n) != 1) raise(Errc::NotCoprime, "a and n must be coprime");
  MulPermutation p;
  p.n = n;
  p.a = a;
  p.images.resize(static_cast<std::size_t>(n));
  long long ar = mod_nonneg(a, n);
  for (long long j = 1; j <= n; ++j) {
    long long r = mod_nonneg(ar * j, n);
    p.images[static_cast<std::size_t>(j - 1)] = r == 0 ? n : r;
  }
  return p;
}

int perm_sign(const BigInt& a, const BigInt& n) {
  if (n.sign() <= 0 || !n.odd()) raise(Errc::BadModulus, "perm_sign needs an odd positive n");
  if (!n.fits_longlong()) raise(Errc::TooLarge, "permutation would not fit in memory");
  return perm_sign(mod_floor(a, n).as_longlong(), n.as_longlong());
}

int perm_sign(long long a, long long n) {
  MulPermutation p = MulPermutation::make(a, n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  long long cycles = 0;
  for (long long j = 0; j < n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++cycles;
    long long k = j;
    while (!seen[static_cast<std::size_t>(k)]) {
      seen[static_cast<std::size_t>(k)] = true;
      k = p.images[static_cast<std::size_t>(k)] - 1;
    }
  }
  return ((n - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace qdet
