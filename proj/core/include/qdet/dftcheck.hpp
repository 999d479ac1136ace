#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qdet/error.hpp"
#include "qdet/report.hpp"

namespace qdet {

using Complex = std::complex<double>;

/// Round trip through the inversion pair: a_m = sum_k b_k zeta^(km) followed
/// by b'_m = (1/n) sum_k a_k zeta^(-km), with zeta = e^(2*pi*i/n). The
/// reported residual is the max-norm of b - b'.
ResidualReport dft_roundtrip(std::span<const Complex> b, double tol = 1e-10);

/// W (1/n) W* = I for W = [zeta^(jk)], 1 <= j,k <= n.
ResidualReport vandermonde_inverse_check(long long n, double tol = 1e-9);

/// Q = U C V for the numeric fractional-part matrix Q = [q0^(-{(aj-(a+1)k)/n})]
/// with U = [zeta^(ajk)], V = [zeta^(-(a+1)jk)] and
/// c_m = (1 - q0^-1) / (n (1 - q0^(-1/n) zeta^(-m))).
/// Additionally asserts det(U) ~ 0 when gcd(a,n) > 1 and det(V) ~ 0 when
/// gcd(a+1,n) > 1, at the natural n^(n/2) determinant scale.
/// Throws BAD_Q for q0 <= 0 or q0 = 1 (the c_m are undefined at q0 = 1).
ResidualReport ucv_factorization_check(long long a, long long n, double q0, double tol = 1e-9);

/// Cross-validation of the two pipelines: LU determinant of the numeric Q
/// against the exact Laurent determinant evaluated at t = q0^(1/n). The
/// residual is relative; a zero exact value demands a numeric determinant
/// vanishing at the n^(n/2) scale.
ResidualReport detq_cross_check(long long a, long long n, double q0, double tol = 1e-8);

struct NumericSweepOptions {
  std::vector<double> q0_values = {2.0, 1.5, 10.0};
  double ucv_tol = 1e-9;
  double roundtrip_tol = 1e-10;
  double cross_tol = 1e-8;
  unsigned rng_seed = 20240915;
};

/// Deterministic numeric sweep: per n a DFT round trip on a seeded random
/// vector and the Vandermonde inverse check, plus the UCV factorization and
/// determinant cross-check per (a, n, q0).
std::vector<ResidualReport> run_numeric_sweep(std::span<const long long> a_values,
                                              std::span<const long long> n_values,
                                              const NumericSweepOptions& opts = {});

}  // namespace qdet
