#include "qdet/linalg.hpp"

namespace qdet {

int rank_rational(Matrix<Rational> m) {
  const std::size_t n = m.size();
  int rank = 0;
  std::size_t row = 1;
  for (std::size_t col = 1; col <= n && row <= n; ++col) {
    std::size_t pivot = 0;
    for (std::size_t r = row; r <= n; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == 0) continue;
    if (pivot != row) {
      for (std::size_t c = col; c <= n; ++c) std::swap(m(row, c), m(pivot, c));
    }
    for (std::size_t r = row + 1; r <= n; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c <= n; ++c) m(r, c) -= f * m(row, c);
    }
    ++rank;
    ++row;
  }
  return rank;
}

int rank_by_evaluation(const Matrix<LaurentPoly>& m, std::span<const Rational> points) {
  if (points.size() < 3) raise(Errc::BadSpec, "rank probe needs at least 3 sample points");
  for (const auto& p : points) {
    if (p.is_zero()) raise(Errc::ZeroPoint, "rank probe sample points must be nonzero");
  }
  const std::size_t n = m.size();
  int best = 0;
  for (const auto& p : points) {
    Matrix<Rational> num(n);
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) num(j, k) = m(j, k).eval(p);
    }
    best = std::max(best, rank_rational(std::move(num)));
  }
  return best;
}

}  // namespace qdet
