#pragma once

#include <vector>

#include "qdet/bigint.hpp"

namespace qdet {

/// Jacobi symbol (m/n) for odd positive n, computed by the iterative binary
/// reciprocity algorithm (no factoring). (m/1) = 1 for every m; the value is
/// 0 exactly when gcd(m, n) > 1. Throws BAD_MODULUS for even or nonpositive n.
int jacobi(const BigInt& m, const BigInt& n);
inline int jacobi(long long m, long long n) { return jacobi(BigInt(m), BigInt(n)); }

/// Floor/ceiling integer division with a positive divisor n.
long long floor_div_ll(long long p, long long n);
long long ceil_div_ll(long long p, long long n);
/// Least nonnegative residue of p modulo n > 0.
long long mod_nonneg(long long p, long long n);

/// The multiplication-by-a permutation of {1,...,n}: entry j-1 of images is
/// the least positive residue of a*j modulo n. Requires odd n and gcd(a,n)=1.
struct MulPermutation {
  long long n = 1;
  long long a = 1;
  std::vector<long long> images;

  static MulPermutation make(long long a, long long n);
};

/// Sign of the multiplication-by-a permutation, via cycle decomposition.
/// Throws NOT_COPRIME when gcd(a,n) > 1, BAD_MODULUS for even/nonpositive n.
int perm_sign(long long a, long long n);
/// Wide-argument form: a reduces mod n; n itself must fit a machine word
/// (the permutation is materialized), TOO_LARGE otherwise.
int perm_sign(const BigInt& a, const BigInt& n);

}  // namespace qdet
