#pragma once

#include <span>
#include <vector>

#include "qdet/qmatrix.hpp"
#include "qdet/report.hpp"

namespace qdet {

/// det of the floor q-integer matrix against -(a(a+1)/n) q^((1-3n)/2).
/// Both sides must be exactly zero when gcd(a(a+1), n) > 1.
VerificationReport verify_floor_theorem(long long a, long long n);

/// det of the ceiling q-integer matrix against (a(a+1)/n) q^((n-1)/2).
VerificationReport verify_ceil_theorem(long long a, long long n);

/// x-shifted determinants: asserts x-degree <= 1 (DEGREE_VIOLATION otherwise)
/// and compares against
///   (a(a+1)/n) q^((1-3n)/2) (1-q)^(n-1) (1+qx)   for FloorX,
///   (a(a+1)/n) q^((n-1)/2)  (1-q)^(n-1) (x+q)    for CeilX.
VerificationReport verify_x_theorem(long long a, long long n, MatrixKind kind);

/// The seven specialized identities at q -> 1, q = 2 and q = -1, in order:
/// Cor1Floor, Cor2Floor, Cor1Ceil, Cor2Ceil, CorNeg1, Cor2PowFloor,
/// Cor2PowCeil. All exact integer/rational arithmetic.
std::vector<VerificationReport> verify_specializations(long long a, long long n);

/// det(Q) = (a(a+1)/n) (1 - t^-n)^(n-1) in the t ring.
VerificationReport verify_prop_detQ(long long a, long long n);

/// Q F = (1 - t^-n) I with F the explicit bracket-sum inverse numerator.
/// Throws NOT_COPRIME when gcd(a(a+1), n) > 1 (Q is singular there).
VerificationReport verify_prop_Qinv(long long a, long long n);

/// Grand adjugate sums: all-ones form of adj(A) = t^n det(A) for the floor
/// power matrix, and = t^-n det(A') for the ceiling power matrix.
/// Throw NOT_COPRIME when gcd(a(a+1), n) > 1.
VerificationReport verify_sum_s(long long a, long long n);
VerificationReport verify_sum_sprime(long long a, long long n);

/// rank(A) <= n/3 and rank(A') <= n/3 for the power matrices, measured by
/// exact rational elimination at the default sample points.
/// Throws COPRIME_INPUT when gcd(a(a+1), n) = 1 (hypothesis unmet).
VerificationReport verify_rank_bound(long long a, long long n);

/// Sign of the multiplication-by-a permutation equals the Jacobi symbol
/// (a/n). Returns a skipped report when gcd(a, n) > 1.
VerificationReport verify_zolotarev(long long a, long long n);

/// Exact matrix factorizations A = B Q C and A' = B' Q' C' in the t ring.
VerificationReport verify_factorization(long long a, long long n);

/// Closed-form determinant for each LaurentPoly matrix family:
///   floor-qint          -(a(a+1)/n) q^((1-3n)/2)
///   ceil-qint            (a(a+1)/n) q^((n-1)/2)
///   floor-power          (a(a+1)/n) t^(-n(n+1)/2) (1-t^-n)^(n-1)
///   ceil-power           (a(a+1)/n) t^(n(n+1)/2)  (1-t^n)^(n-1)
///   q-fractional         (a(a+1)/n) (1-t^-n)^(n-1)
///   q-prime-fractional   (a(a+1)/n) (1-t^n)^(n-1)
LaurentPoly closed_form_det(const MatrixSpec& spec);

/// Closed form for the x-shifted families:
///   floor-x   (a(a+1)/n) q^((1-3n)/2) (1-q)^(n-1) (1+qx)
///   ceil-x    (a(a+1)/n) q^((n-1)/2)  (1-q)^(n-1) (x+q)
XPoly closed_form_det_x(const MatrixSpec& spec);

/// One case of one identity. Cases whose hypothesis (coprimality or its
/// negation) is unmet come back skipped; thrown errors are captured as
/// failing reports.
VerificationReport run_case(IdentityId id, long long a, long long n);

struct SweepOptions {
  unsigned jobs = 0;  // 0 = hardware concurrency
};

/// Cartesian sweep over the given identities, n values (odd positive only;
/// BAD_SPEC otherwise) and a values, deterministically ordered by
/// (identity, n, a) regardless of the parallelism degree.
std::vector<VerificationReport> run_suite(std::span<const long long> a_values,
                                          std::span<const long long> n_values,
                                          std::span<const IdentityId> identities,
                                          const SweepOptions& opts = {});

/// Zolotarev over its full natural parameter set: every a in {1,...,n} per n
/// (non-coprime a come back skipped).
std::vector<VerificationReport> run_zolotarev_sweep(std::span<const long long> n_values,
                                                    const SweepOptions& opts = {});

}  // namespace qdet
