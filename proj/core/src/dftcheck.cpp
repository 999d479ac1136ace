#include "qdet/dftcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "qdet/linalg.hpp"
#include "qdet/ntheory.hpp"
#include "qdet/qmatrix.hpp"

namespace qdet {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// zeta^r for r = 0..n-1; exponents are reduced mod n before lookup so phase
/// error does not grow with the raw exponent.
std::vector<Complex> root_table(long long n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (long long r = 0; r < n; ++r) {
    double arg = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    z[static_cast<std::size_t>(r)] = Complex(std::cos(arg), std::sin(arg));
  }
  return z;
}

Complex zeta_pow(const std::vector<Complex>& z, long long e) {
  return z[static_cast<std::size_t>(mod_nonneg(e, static_cast<long long>(z.size())))];
}

/// Determinant of a small complex matrix by LU with partial pivoting.
Complex lu_det(std::vector<std::vector<Complex>> m) {
  const std::size_t n = m.size();
  Complex det(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(m[k][k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(m[r][k]) > best) {
        best = std::abs(m[r][k]);
        pivot = r;
      }
    }
    if (pivot != k) {
      m[k].swap(m[pivot]);
      det = -det;
    }
    if (m[k][k] == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    det *= m[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      Complex f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return det;
}

}  // namespace

ResidualReport dft_roundtrip(std::span<const Complex> b, double tol) {
  auto t0 = Clock::now();
  const long long n = static_cast<long long>(b.size());
  ResidualReport r;
  r.check = "dft-roundtrip";
  r.n = n;
  if (n < 1) raise(Errc::BadSpec, "round trip needs n >= 1");
  auto z = root_table(n);
  std::vector<Complex> a(static_cast<std::size_t>(n));
  for (long long m = 1; m <= n; ++m) {
    Complex acc(0.0, 0.0);
    for (long long k = 1; k <= n; ++k) acc += b[static_cast<std::size_t>(k - 1)] * zeta_pow(z, k * m);
    a[static_cast<std::size_t>(m - 1)] = acc;
  }
  double resid = 0.0;
  double scale = 0.0;
  for (const auto& x : b) scale = std::max(scale, std::abs(x));
  for (long long m = 1; m <= n; ++m) {
    Complex acc(0.0, 0.0);
    for (long long k = 1; k <= n; ++k) acc += a[static_cast<std::size_t>(k - 1)] * zeta_pow(z, -k * m);
    acc /= static_cast<double>(n);
    resid = std::max(resid, std::abs(acc - b[static_cast<std::size_t>(m - 1)]));
  }
  r.residual = resid;
  r.tolerance = tol * std::max(1.0, scale);
  r.pass = resid <= r.tolerance;
  r.elapsed_ms = ms_since(t0);
  return r;
}

ResidualReport vandermonde_inverse_check(long long n, double tol) {
  auto t0 = Clock::now();
  if (n < 1) raise(Errc::BadSpec, "Vandermonde check needs n >= 1");
  auto z = root_table(n);
  double resid = 0.0;
  for (long long j = 1; j <= n; ++j) {
    for (long long k = 1; k <= n; ++k) {
      Complex acc(0.0, 0.0);
      for (long long m = 1; m <= n; ++m) acc += zeta_pow(z, j * m) * zeta_pow(z, -m * k);
      acc /= static_cast<double>(n);
      Complex want = j == k ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      resid = std::max(resid, std::abs(acc - want));
    }
  }
  ResidualReport r;
  r.check = "vandermonde-inverse";
  r.n = n;
  r.residual = resid;
  r.tolerance = tol;
  r.pass = resid <= tol;
  r.elapsed_ms = ms_since(t0);
  return r;
}

ResidualReport ucv_factorization_check(long long a, long long n, double q0, double tol) {
  auto t0 = Clock::now();
  if (n < 1 || n % 2 == 0) raise(Errc::BadSpec, "n must be odd and positive");
  if (q0 <= 0.0 || q0 == 1.0) raise(Errc::BadQ, "q0 must be a positive real other than 1");
  auto z = root_table(n);
  const auto ns = static_cast<std::size_t>(n);

  std::vector<std::vector<Complex>> qm(ns, std::vector<Complex>(ns));
  double max_entry = 0.0;
  for (long long j = 1; j <= n; ++j) {
    for (long long k = 1; k <= n; ++k) {
      long long rres = mod_nonneg(a * j - (a + 1) * k, n);
      double v = std::pow(q0, -static_cast<double>(rres) / static_cast<double>(n));
      qm[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = Complex(v, 0.0);
      max_entry = std::max(max_entry, v);
    }
  }

  std::vector<Complex> c(ns);
  const double qinv_n = std::pow(q0, -1.0 / static_cast<double>(n));
  for (long long m = 1; m <= n; ++m) {
    Complex denom = Complex(1.0, 0.0) - qinv_n * zeta_pow(z, -m);
    c[static_cast<std::size_t>(m - 1)] =
        Complex((1.0 - 1.0 / q0), 0.0) / (static_cast<double>(n) * denom);
  }

  double resid = 0.0;
  std::vector<std::vector<Complex>> um(ns, std::vector<Complex>(ns));
  std::vector<std::vector<Complex>> vm(ns, std::vector<Complex>(ns));
  for (long long j = 1; j <= n; ++j) {
    for (long long k = 1; k <= n; ++k) {
      um[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = zeta_pow(z, a * j * k);
      vm[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
          zeta_pow(z, -(a + 1) * j * k);
    }
  }
  for (std::size_t j = 0; j < ns; ++j) {
    for (std::size_t k = 0; k < ns; ++k) {
      Complex acc(0.0, 0.0);
      for (std::size_t m = 0; m < ns; ++m) acc += um[j][m] * c[m] * vm[m][k];
      resid = std::max(resid, std::abs(acc - qm[j][k]));
    }
  }

  ResidualReport r;
  r.check = "ucv-factorization";
  r.n = n;
  r.a = a;
  r.q0 = q0;
  r.residual = resid;
  r.tolerance = tol * std::max(1.0, static_cast<double>(n) * max_entry / 15.0);
  r.pass = resid <= r.tolerance;

  // Two equal rows force a vanishing determinant on the side whose multiplier
  // shares a factor with n; check it at the natural n^(n/2) scale.
  const double det_scale = std::pow(static_cast<double>(n), static_cast<double>(n) / 2.0);
  const double det_tol = 10.0 * tol;
  if (std::gcd(mod_nonneg(a, n), n) != 1) {
    double rel = std::abs(lu_det(um)) / det_scale;
    if (rel > det_tol) r.pass = false;
  }
  if (std::gcd(mod_nonneg(a + 1, n), n) != 1) {
    double rel = std::abs(lu_det(vm)) / det_scale;
    if (rel > det_tol) r.pass = false;
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

namespace {

/// Value of an exact t-ring polynomial at t = q0^(1/n). Exponents are grouped
/// by residue class mod n; each class sum is an exact rational in q0 (the
/// exponents (e - r)/n are integers), so the binomial-style cancellation
/// inside a class costs no precision. Only the final n-term combination is
/// floating point.
double eval_exact_at_root(const LaurentPoly& p, double q0, long long n) {
  if (p.is_zero()) return 0.0;
  const Rational q0r = Rational::from_double(q0);
  std::vector<Rational> class_sum(static_cast<std::size_t>(n));
  for (long long e = p.low(); e <= p.high(); ++e) {
    BigInt c = p.coeff(e);
    if (c.is_zero()) continue;
    long long r = mod_nonneg(e, n);
    class_sum[static_cast<std::size_t>(r)] += Rational(c) * pow(q0r, (e - r) / n);
  }
  const long double t0 = std::pow(static_cast<long double>(q0), 1.0L / static_cast<long double>(n));
  long double acc = 0.0L;
  long double tr = 1.0L;
  for (long long r = 0; r < n; ++r) {
    const Rational& s = class_sum[static_cast<std::size_t>(r)];
    if (!s.is_zero()) acc += static_cast<long double>(s.to_double()) * tr;
    tr *= t0;
  }
  return static_cast<double>(acc);
}

}  // namespace

ResidualReport detq_cross_check(long long a, long long n, double q0, double tol) {
  auto t0 = Clock::now();
  if (n < 1 || n % 2 == 0) raise(Errc::BadSpec, "n must be odd and positive");
  if (q0 <= 0.0 || q0 == 1.0) raise(Errc::BadQ, "q0 must be a positive real other than 1");
  const auto ns = static_cast<std::size_t>(n);
  std::vector<std::vector<Complex>> qm(ns, std::vector<Complex>(ns));
  for (long long j = 1; j <= n; ++j) {
    for (long long k = 1; k <= n; ++k) {
      long long rres = mod_nonneg(a * j - (a + 1) * k, n);
      qm[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
          Complex(std::pow(q0, -static_cast<double>(rres) / static_cast<double>(n)), 0.0);
    }
  }
  double numeric = lu_det(std::move(qm)).real();
  LaurentPoly exact = det_bareiss(build_laurent({MatrixKind::QFractional, a, n}));
  double exact_val = eval_exact_at_root(exact, q0, n);

  ResidualReport r;
  r.check = "detq-cross";
  r.n = n;
  r.a = a;
  r.q0 = q0;
  r.tolerance = tol;
  if (exact.is_zero()) {
    r.residual = std::abs(numeric) / std::pow(static_cast<double>(n), static_cast<double>(n) / 2.0);
  } else {
    r.residual = std::abs(numeric - exact_val) / std::abs(exact_val);
  }
  r.pass = r.residual <= tol;
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::vector<ResidualReport> run_numeric_sweep(std::span<const long long> a_values,
                                              std::span<const long long> n_values,
                                              const NumericSweepOptions& opts) {
  std::vector<ResidualReport> out;
  std::mt19937 rng(opts.rng_seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (long long n : n_values) {
    if (n < 1 || n % 2 == 0) raise(Errc::BadSpec, "n must be odd and positive");
    std::vector<Complex> b(static_cast<std::size_t>(n));
    for (auto& x : b) x = Complex(dist(rng), dist(rng));
    out.push_back(dft_roundtrip(b, opts.roundtrip_tol));
    out.push_back(vandermonde_inverse_check(n, opts.ucv_tol));
    for (long long a : a_values) {
      for (double q0 : opts.q0_values) {
        out.push_back(ucv_factorization_check(a, n, q0, opts.ucv_tol));
        out.push_back(detq_cross_check(a, n, q0, opts.cross_tol));
      }
    }
  }
  return out;
}

}  // namespace qdet
