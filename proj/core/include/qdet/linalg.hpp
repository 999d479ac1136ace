#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qdet/laurent.hpp"
#include "qdet/matrix.hpp"
#include "qdet/rational.hpp"

namespace qdet {

/// Largest dimension accepted by the direct cofactor-expansion routines.
inline constexpr std::size_t kCofactorLimit = 8;

/// Diagnostics from a fraction-free elimination run. The row-swap parity
/// determines the sign correction; every recorded division was exact.
template <class R>
struct EliminationTrace {
  std::vector<std::size_t> pivot_rows;
  std::size_t row_swaps = 0;
  std::vector<R> pivots;
};

/// Exact determinant by fraction-free Bareiss elimination with row pivoting
/// on the first nonzero entry. Divisions are exact by construction; a failed
/// division is rethrown as INTERNAL_ERROR since it indicates a bug.
template <class R>
R det_bareiss(Matrix<R> m, EliminationTrace<R>* trace = nullptr) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  try {
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      std::size_t pivot = 0;
      for (std::size_t r = k; r <= n; ++r) {
        if (!m(r, k).is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot == 0) return R(0);
      if (pivot != k) {
        for (std::size_t c = k; c <= n; ++c) std::swap(m(k, c), m(pivot, c));
        negate = !negate;
        if (trace) ++trace->row_swaps;
      }
      if (trace) trace->pivot_rows.push_back(pivot);
      for (std::size_t i = k + 1; i <= n; ++i) {
        for (std::size_t j = k + 1; j <= n; ++j) {
          m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        }
        m(i, k) = R(0);
      }
      prev = m(k, k);
      if (trace) trace->pivots.push_back(prev);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::NonExactDivision) {
      raise(Errc::Internal, std::string("inexact division inside Bareiss elimination: ") + e.what());
    }
    throw;
  }
  if (trace) trace->pivots.push_back(m(n, n));
  return negate ? -m(n, n) : m(n, n);
}

/// Determinant by first-row cofactor expansion; the O(n!) oracle.
/// Throws TOO_LARGE for n > kCofactorLimit.
template <class R>
R det_cofactor(const Matrix<R>& m) {
  const std::size_t n = m.size();
  if (n > kCofactorLimit) raise(Errc::TooLarge, "cofactor expansion limited to n <= 8");
  if (n == 0) return R(1);
  if (n == 1) return m(1, 1);
  R acc(0);
  for (std::size_t c = 1; c <= n; ++c) {
    if (m(1, c).is_zero()) continue;
    Matrix<R> minor(n - 1, m.var());
    for (std::size_t j = 2; j <= n; ++j) {
      std::size_t mc = 1;
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == c) continue;
        minor(j - 1, mc++) = m(j, k);
      }
    }
    R term = m(1, c) * det_cofactor(minor);
    if (c % 2 == 0) term = -term;
    acc += term;
  }
  return acc;
}

namespace detail {

/// Adjugate by explicit cofactor minors (used for singular inputs).
template <class R>
Matrix<R> adjugate_cofactor(const Matrix<R>& m) {
  const std::size_t n = m.size();
  if (n > kCofactorLimit) {
    raise(Errc::TooLarge, "cofactor adjugate limited to n <= 8; elimination path needs det != 0");
  }
  Matrix<R> adj(n, m.var());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      Matrix<R> minor(n - 1, m.var());
      std::size_t mr = 1;
      for (std::size_t r = 1; r <= n; ++r) {
        if (r == i) continue;
        std::size_t mc = 1;
        for (std::size_t c = 1; c <= n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      R cof = det_cofactor(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = std::move(cof);  // adjugate is the transposed cofactor matrix
    }
  }
  return adj;
}

/// One-step fraction-free Gauss-Jordan on [M | I]. Returns true and fills
/// adj/det when M is invertible; returns false on a singular input.
template <class R>
bool adjugate_ffgj(const Matrix<R>& m, Matrix<R>& adj_out, R& det_out) {
  const std::size_t n = m.size();
  // Working augmented rows [M | I], 0-based.
  std::vector<std::vector<R>> w(n, std::vector<R>(2 * n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) w[j][k] = m(j + 1, k + 1);
    w[j][n + j] = R(1);
  }
  bool negate = false;
  R prev(1);
  try {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pivot = n;
      for (std::size_t r = k; r < n; ++r) {
        if (!w[r][k].is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot == n) return false;
      if (pivot != k) {
        w[k].swap(w[pivot]);
        negate = !negate;
      }
      const std::vector<R>& rk = w[k];
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        std::vector<R>& ri = w[i];
        if (!ri[k].is_zero()) {
          for (std::size_t j = k + 1; j < 2 * n; ++j) {
            ri[j] = exact_div(rk[k] * ri[j] - ri[k] * rk[j], prev);
          }
          ri[k] = R(0);
        } else {
          for (std::size_t j = k + 1; j < 2 * n; ++j) {
            ri[j] = exact_div(rk[k] * ri[j], prev);
          }
        }
      }
      // Completed diagonal entries advance to the current pivot: their update
      // reduces to w[i][i] <- w[k][k] * w[i][i] / prev with w[i][i] = prev.
      for (std::size_t i = 0; i < k; ++i) w[i][i] = rk[k];
      prev = rk[k];
    }
  } catch (const Error& e) {
    if (e.code() == Errc::NonExactDivision) {
      raise(Errc::Internal, std::string("inexact division inside Gauss-Jordan elimination: ") + e.what());
    }
    throw;
  }
  // Now T * M = p * I with T in the right block and p the last pivot, so
  // T = p * M^-1 and adj(M) = det(M) * M^-1 = sign * T.
  det_out = negate ? -prev : prev;
  adj_out = Matrix<R>(n, m.var());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      adj_out(j + 1, k + 1) = negate ? -w[j][n + k] : w[j][n + k];
    }
  }
  return true;
}

}  // namespace detail

/// Transposed cofactor matrix, satisfying M * adj(M) = det(M) * I exactly.
/// Invertible inputs run through fraction-free Gauss-Jordan elimination in
/// O(n^3) ring operations; singular inputs fall back to direct cofactors
/// (TOO_LARGE above kCofactorLimit).
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
  if (m.size() <= 1) return Matrix<R>::identity(m.size(), m.var());
  Matrix<R> adj;
  R det(0);
  if (detail::adjugate_ffgj(m, adj, det)) return adj;
  return detail::adjugate_cofactor(m);
}

/// Adjugate and determinant from a single elimination pass.
template <class R>
std::pair<Matrix<R>, R> adjugate_and_det(const Matrix<R>& m) {
  if (m.size() <= 1) {
    return {Matrix<R>::identity(m.size(), m.var()),
            m.size() == 1 ? m(1, 1) : R(1)};
  }
  Matrix<R> adj;
  R det(0);
  if (detail::adjugate_ffgj(m, adj, det)) return {std::move(adj), std::move(det)};
  return {detail::adjugate_cofactor(m), R(0)};
}

/// Sum of all adjugate entries, i.e. the all-ones bilinear form over adj(M).
template <class R>
R grand_adjugate_sum(const Matrix<R>& m) {
  Matrix<R> adj = adjugate(m);
  R acc(0);
  for (std::size_t j = 1; j <= m.size(); ++j) {
    for (std::size_t k = 1; k <= m.size(); ++k) acc += adj(j, k);
  }
  return acc;
}

/// det(M + u v^T) evaluated through the rank-one-update identity
/// det(M) + v^T adj(M) u.
template <class R>
R det_rank_one_update(const Matrix<R>& m, const std::vector<R>& u, const std::vector<R>& v) {
  const std::size_t n = m.size();
  if (u.size() != n || v.size() != n) raise(Errc::BadSpec, "rank-one update dimension mismatch");
  Matrix<R> adj = adjugate(m);
  R acc = det_bareiss(m);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      R term = v[j - 1] * adj(j, k) * u[k - 1];
      acc += term;
    }
  }
  return acc;
}

/// Rank of a rational matrix by exact Gaussian elimination.
int rank_rational(Matrix<Rational> m);

inline const std::vector<Rational>& default_rank_points() {
  static const std::vector<Rational> pts = {Rational(2), Rational(3), Rational(BigInt(5), BigInt(2))};
  return pts;
}

/// Function-field rank probe: evaluates the Laurent matrix at each sample
/// point, takes the exact rational rank, and returns the maximum. Requires
/// at least 3 nonzero sample points; this lower-bounds the function-field
/// rank and equals it for generic points.
int rank_by_evaluation(const Matrix<LaurentPoly>& m, std::span<const Rational> points);
inline int rank_by_evaluation(const Matrix<LaurentPoly>& m) {
  return rank_by_evaluation(m, default_rank_points());
}

}  // namespace qdet
