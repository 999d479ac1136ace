#include "qdet/qmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdet/ntheory.hpp"

namespace qdet {

std::optional<MatrixKind> parse_kind(std::string_view name) {
  for (MatrixKind k : {MatrixKind::FloorQInt, MatrixKind::CeilQInt, MatrixKind::FloorPower,
                       MatrixKind::CeilPower, MatrixKind::FloorX, MatrixKind::CeilX,
                       MatrixKind::QFractional, MatrixKind::QPrimeFractional}) {
    if (name == kind_name(k)) return k;
  }
  return std::nullopt;
}

void MatrixSpec::validate() const {
  if (n < 1 || n % 2 == 0) {
    raise(Errc::BadSpec, "n must be odd and positive, got " + std::to_string(n));
  }
}

LaurentPoly q_integer(long long m) {
  if (m == 0) return LaurentPoly();
  if (m > 0) {
    // 1 + q + ... + q^(m-1)
    return LaurentPoly::from_coeffs(0, std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(1)));
  }
  // -(q^-1 + q^-2 + ... + q^m)
  return LaurentPoly::from_coeffs(m, std::vector<BigInt>(static_cast<std::size_t>(-m), BigInt(-1)));
}

namespace {

long long floor_arg(const MatrixSpec& s, long long j, long long k) { return s.a * j - (s.a + 1) * k; }
long long ceil_arg(const MatrixSpec& s, long long j, long long k) { return (s.a + 1) * j - s.a * k; }

}  // namespace

Matrix<LaurentPoly> build_laurent(const MatrixSpec& spec) {
  spec.validate();
  if (spec.x_kind()) raise(Errc::BadSpec, "x-shifted kinds build XPoly matrices");
  const auto n = static_cast<std::size_t>(spec.n);
  Variable var = spec.kind == MatrixKind::FloorQInt || spec.kind == MatrixKind::CeilQInt
                     ? Variable::Q
                     : Variable::T;
  Matrix<LaurentPoly> m(n, var);
  for (long long j = 1; j <= spec.n; ++j) {
    for (long long k = 1; k <= spec.n; ++k) {
      LaurentPoly e;
      switch (spec.kind) {
        case MatrixKind::FloorQInt:
          e = q_integer(floor_div_ll(floor_arg(spec, j, k), spec.n));
          break;
        case MatrixKind::CeilQInt:
          e = q_integer(ceil_div_ll(ceil_arg(spec, j, k), spec.n));
          break;
        case MatrixKind::FloorPower:
          e = LaurentPoly::monomial(BigInt(1), spec.n * floor_div_ll(floor_arg(spec, j, k), spec.n));
          break;
        case MatrixKind::CeilPower:
          e = LaurentPoly::monomial(BigInt(1), spec.n * ceil_div_ll(ceil_arg(spec, j, k), spec.n));
          break;
        case MatrixKind::QFractional:
          e = LaurentPoly::monomial(BigInt(1), -mod_nonneg(floor_arg(spec, j, k), spec.n));
          break;
        case MatrixKind::QPrimeFractional:
          e = LaurentPoly::monomial(BigInt(1), mod_nonneg(spec.a * k - (spec.a + 1) * j, spec.n));
          break;
        default:
          raise(Errc::BadSpec, "unhandled kind");
      }
      m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = std::move(e);
    }
  }
  return m;
}

Matrix<XPoly> build_x(const MatrixSpec& spec) {
  spec.validate();
  if (!spec.x_kind()) raise(Errc::BadSpec, "only x-shifted kinds build XPoly matrices");
  const auto n = static_cast<std::size_t>(spec.n);
  Matrix<XPoly> m(n, Variable::Q);
  for (long long j = 1; j <= spec.n; ++j) {
    for (long long k = 1; k <= spec.n; ++k) {
      long long e = spec.kind == MatrixKind::FloorX
                        ? floor_div_ll(floor_arg(spec, j, k), spec.n)
                        : ceil_div_ll(ceil_arg(spec, j, k), spec.n);
      XPoly entry = XPoly::variable();
      entry += XPoly(LaurentPoly::monomial(BigInt(1), e));
      m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = std::move(entry);
    }
  }
  return m;
}

std::pair<Matrix<LaurentPoly>, Matrix<LaurentPoly>> build_diagonal_factors(const MatrixSpec& spec) {
  spec.validate();
  if (spec.kind != MatrixKind::FloorPower && spec.kind != MatrixKind::CeilPower) {
    raise(Errc::BadSpec, "diagonal factors exist for the power kinds only");
  }
  const auto n = static_cast<std::size_t>(spec.n);
  Matrix<LaurentPoly> b(n, Variable::T);
  Matrix<LaurentPoly> c(n, Variable::T);
  const bool floor_side = spec.kind == MatrixKind::FloorPower;
  for (long long j = 1; j <= spec.n; ++j) {
    long long be = floor_side ? spec.a * j : (spec.a + 1) * j;
    long long ce = floor_side ? -(spec.a + 1) * j : -spec.a * j;
    b(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = LaurentPoly::monomial(BigInt(1), be);
    c(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = LaurentPoly::monomial(BigInt(1), ce);
  }
  return {std::move(b), std::move(c)};
}

namespace {

template <class R>
nlohmann::json matrix_json_impl(const MatrixSpec& spec, const Matrix<R>& m, const char* var) {
  nlohmann::json j;
  j["kind"] = kind_name(spec.kind);
  j["a"] = spec.a;
  j["n"] = spec.n;
  j["variable"] = var;
  auto rows = nlohmann::json::array();
  for (std::size_t r = 1; r <= m.size(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 1; c <= m.size(); ++c) row.push_back(m(r, c).to_string(var));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

template <class R>
std::string matrix_text_impl(const Matrix<R>& m, const char* var) {
  std::vector<std::string> cells;
  cells.reserve(m.size() * m.size());
  std::size_t width = 0;
  for (std::size_t r = 1; r <= m.size(); ++r) {
    for (std::size_t c = 1; c <= m.size(); ++c) {
      cells.push_back(m(r, c).to_string(var));
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    out << "[ ";
    for (std::size_t c = 0; c < m.size(); ++c) {
      const std::string& s = cells[r * m.size() + c];
      out << s << std::string(width - s.size(), ' ');
      out << (c + 1 == m.size() ? " ]\n" : "  ");
    }
  }
  return out.str();
}

}  // namespace

std::string matrix_to_json(const MatrixSpec& spec, const Matrix<LaurentPoly>& m) {
  return matrix_json_impl(spec, m, variable_name(m.var())).dump();
}

std::string matrix_to_json(const MatrixSpec& spec, const Matrix<XPoly>& m) {
  return matrix_json_impl(spec, m, variable_name(m.var())).dump();
}

std::string matrix_to_text(const Matrix<LaurentPoly>& m) {
  return matrix_text_impl(m, variable_name(m.var()));
}

std::string matrix_to_text(const Matrix<XPoly>& m) { return matrix_text_impl(m, variable_name(m.var())); }

}  // namespace qdet
