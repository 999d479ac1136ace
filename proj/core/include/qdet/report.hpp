#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdet {

/// Identifiers for every verified identity.
enum class IdentityId {
  ThmFloor,       // det of the floor q-integer matrix
  ThmCeil,        // det of the ceiling q-integer matrix
  ThmXFloor,      // x-shifted floor determinant
  ThmXCeil,       // x-shifted ceiling determinant
  Cor1Floor,      // q -> 1 floor specialization
  Cor2Floor,      // q -> 2 floor specialization, entries 2^floor - 1
  Cor1Ceil,       // q -> 1 ceiling specialization
  Cor2Ceil,       // q -> 2 ceiling specialization, entries 2^ceil - 1
  CorNeg1,        // q = -1 power determinants (floor and ceiling agree)
  Cor2PowFloor,   // entries 2^floor
  Cor2PowCeil,    // entries 2^ceil
  PropDetQ,       // det of the fractional-part matrix Q
  PropQInv,       // explicit inverse of Q, denominator-cleared
  SumS,           // grand adjugate sum of the floor power matrix
  SumSPrime,      // grand adjugate sum of the ceiling power matrix
  RankBound,      // rank <= n/3 in the non-coprime case
  Zolotarev,      // permutation sign equals the Jacobi symbol
  FactorBQC,      // exact A = B*Q*C and A' = B'*Q'*C' factorizations
};

constexpr const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::ThmFloor: return "thm-floor";
    case IdentityId::ThmCeil: return "thm-ceil";
    case IdentityId::ThmXFloor: return "thm-x-floor";
    case IdentityId::ThmXCeil: return "thm-x-ceil";
    case IdentityId::Cor1Floor: return "cor-1floor";
    case IdentityId::Cor2Floor: return "cor-2floor";
    case IdentityId::Cor1Ceil: return "cor-1ceil";
    case IdentityId::Cor2Ceil: return "cor-2ceil";
    case IdentityId::CorNeg1: return "cor-neg1";
    case IdentityId::Cor2PowFloor: return "cor-2pow-floor";
    case IdentityId::Cor2PowCeil: return "cor-2pow-ceil";
    case IdentityId::PropDetQ: return "prop-detq";
    case IdentityId::PropQInv: return "prop-qinv";
    case IdentityId::SumS: return "sum-s";
    case IdentityId::SumSPrime: return "sum-sprime";
    case IdentityId::RankBound: return "rank-bound";
    case IdentityId::Zolotarev: return "zolotarev";
    case IdentityId::FactorBQC: return "factor-bqc";
  }
  return "?";
}

const std::vector<IdentityId>& all_identities();
std::optional<IdentityId> parse_identity(std::string_view name);

/// Outcome of one exact identity check at one (a, n).
struct VerificationReport {
  IdentityId identity = IdentityId::ThmFloor;
  long long a = 0;
  long long n = 1;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool skipped = false;  // hypothesis unmet; never counted as a failure
  double elapsed_ms = 0.0;

  bool failed() const { return !pass && !skipped; }
};

/// Outcome of one floating-point residual check.
struct ResidualReport {
  std::string check;
  long long n = 1;
  long long a = 0;
  double q0 = 0.0;  // 0 when the check has no q parameter
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double elapsed_ms = 0.0;
};

/// JSON-lines records with the fixed schema
/// {"identity","a","n","pass","skipped","lhs","rhs","elapsed_ms","numeric"}.
std::string to_json_line(const VerificationReport& r);
std::string to_json_line(const ResidualReport& r);

/// CSV with the fixed header identity,a,n,pass,lhs,rhs,elapsed_ms; the pass
/// column renders PASS, FAIL or SKIP.
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);
std::string to_csv_row(const ResidualReport& r);

/// One-line human-readable rendering.
std::string to_text_line(const VerificationReport& r);
std::string to_text_line(const ResidualReport& r);

}  // namespace qdet
