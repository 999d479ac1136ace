#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdet/error.hpp"

namespace qdet {

/// Printing symbol for the Laurent variable of a matrix: q, or t = q^(1/n)
/// for the rings that carry fractional q-powers with integer exponents.
enum class Variable { Q, T };

constexpr const char* variable_name(Variable v) { return v == Variable::Q ? "q" : "t"; }

/// Dense square matrix over an exact ring. Indices are 1-based to match the
/// usual 1 <= j,k <= n convention of the matrices being built.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, Variable var = Variable::Q) : n_(n), var_(var), e_(n * n) {}

  static Matrix identity(std::size_t n, Variable var = Variable::Q) {
    Matrix m(n, var);
    for (std::size_t j = 1; j <= n; ++j) m(j, j) = R(1);
    return m;
  }

  std::size_t size() const { return n_; }
  Variable var() const { return var_; }
  void set_var(Variable v) { var_ = v; }

  R& operator()(std::size_t j, std::size_t k) {
    check_index(j, k);
    return e_[(j - 1) * n_ + (k - 1)];
  }
  const R& operator()(std::size_t j, std::size_t k) const {
    check_index(j, k);
    return e_[(j - 1) * n_ + (k - 1)];
  }

  Matrix transpose() const {
    Matrix m(n_, var_);
    for (std::size_t j = 1; j <= n_; ++j)
      for (std::size_t k = 1; k <= n_; ++k) m(k, j) = (*this)(j, k);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) raise(Errc::BadSpec, "matrix product dimension mismatch");
    Matrix m(a.n_, a.var_);
    for (std::size_t j = 1; j <= a.n_; ++j) {
      for (std::size_t l = 1; l <= a.n_; ++l) {
        const R& ajl = a(j, l);
        if (ajl.is_zero()) continue;
        for (std::size_t k = 1; k <= a.n_; ++k) m(j, k) += ajl * b(l, k);
      }
    }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) raise(Errc::BadSpec, "matrix sum dimension mismatch");
    Matrix m(a.n_, a.var_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
  }

  Matrix operator-() const {
    Matrix m(n_, var_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
  }

  Matrix scaled(const R& c) const {
    Matrix m(n_, var_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
    return m;
  }

  bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  Variable var_ = Variable::Q;
  std::vector<R> e_;

  void check_index(std::size_t j, std::size_t k) const {
    if (j < 1 || j > n_ || k < 1 || k > n_) raise(Errc::Internal, "matrix index out of range");
  }
};

}  // namespace qdet
