#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qdet/laurent.hpp"
#include "qdet/matrix.hpp"
#include "qdet/xpoly.hpp"

namespace qdet {

/// The eight structured matrix families, all indexed by an integer a and an
/// odd positive n:
///   FloorQInt          [[floor((a*j-(a+1)*k)/n)]_q]            (variable q)
///   CeilQInt           [[ceil(((a+1)*j-a*k)/n)]_q]             (variable q)
///   FloorPower         [t^(n*floor((a*j-(a+1)*k)/n))]          (variable t)
///   CeilPower          [t^(n*ceil(((a+1)*j-a*k)/n))]           (variable t)
///   FloorX             [x + q^floor((a*j-(a+1)*k)/n)]          (XPoly, variable q)
///   CeilX              [x + q^ceil(((a+1)*j-a*k)/n)]           (XPoly, variable q)
///   QFractional        [t^(-((a*j-(a+1)*k) mod n))]            (variable t)
///   QPrimeFractional   [t^((a*k-(a+1)*j) mod n)]               (variable t)
/// with mod taking the least nonnegative residue.
enum class MatrixKind {
  FloorQInt,
  CeilQInt,
  FloorPower,
  CeilPower,
  FloorX,
  CeilX,
  QFractional,
  QPrimeFractional,
};

constexpr const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::FloorQInt: return "floor-qint";
    case MatrixKind::CeilQInt: return "ceil-qint";
    case MatrixKind::FloorPower: return "floor-power";
    case MatrixKind::CeilPower: return "ceil-power";
    case MatrixKind::FloorX: return "floor-x";
    case MatrixKind::CeilX: return "ceil-x";
    case MatrixKind::QFractional: return "q-fractional";
    case MatrixKind::QPrimeFractional: return "q-prime-fractional";
  }
  return "?";
}

std::optional<MatrixKind> parse_kind(std::string_view name);

/// Which matrix to build: a family, the integer a, and the odd dimension n.
struct MatrixSpec {
  MatrixKind kind = MatrixKind::FloorQInt;
  long long a = 0;
  long long n = 1;

  /// Throws BAD_SPEC unless n is odd and positive.
  void validate() const;
  bool x_kind() const { return kind == MatrixKind::FloorX || kind == MatrixKind::CeilX; }
};

/// The q-analogue [m]_q = (1 - q^m)/(1 - q) as an exact Laurent polynomial:
/// 1 + q + ... + q^(m-1) for m > 0, zero for m = 0, and
/// -(q^-1 + q^-2 + ... + q^m) for m < 0.
LaurentPoly q_integer(long long m);

/// Builders. build_laurent covers the six LaurentPoly families and throws
/// BAD_SPEC for the two XPoly families, which build_x covers.
Matrix<LaurentPoly> build_laurent(const MatrixSpec& spec);
Matrix<XPoly> build_x(const MatrixSpec& spec);

/// Diagonal factors (in t) of the power-matrix factorizations
/// A = B (Q-fractional) C and A' = B' (Q'-fractional) C':
///   floor:   B = diag(t^(a*j)),     C = diag(t^(-(a+1)*k))
///   ceiling: B' = diag(t^((a+1)*j)), C' = diag(t^(-a*k))
/// Only FloorPower and CeilPower specs are accepted.
std::pair<Matrix<LaurentPoly>, Matrix<LaurentPoly>> build_diagonal_factors(const MatrixSpec& spec);

/// Serialization: {kind, a, n, variable, entries: [[string,...],...]} with
/// entries in the signed monomial-list text form.
std::string matrix_to_json(const MatrixSpec& spec, const Matrix<LaurentPoly>& m);
std::string matrix_to_json(const MatrixSpec& spec, const Matrix<XPoly>& m);

/// Aligned text grid of entries.
std::string matrix_to_text(const Matrix<LaurentPoly>& m);
std::string matrix_to_text(const Matrix<XPoly>& m);

}  // namespace qdet
