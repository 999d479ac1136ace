#include "qdet/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace qdet {

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::ThmFloor,     IdentityId::ThmCeil,     IdentityId::ThmXFloor,
      IdentityId::ThmXCeil,     IdentityId::Cor1Floor,   IdentityId::Cor2Floor,
      IdentityId::Cor1Ceil,     IdentityId::Cor2Ceil,    IdentityId::CorNeg1,
      IdentityId::Cor2PowFloor, IdentityId::Cor2PowCeil, IdentityId::PropDetQ,
      IdentityId::PropQInv,     IdentityId::SumS,        IdentityId::SumSPrime,
      IdentityId::RankBound,    IdentityId::Zolotarev,   IdentityId::FactorBQC,
  };
  return ids;
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (IdentityId id : all_identities()) {
    if (name == identity_name(id)) return id;
  }
  return std::nullopt;
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::json j;
  j["identity"] = identity_name(r.identity);
  j["a"] = r.a;
  j["n"] = r.n;
  j["pass"] = r.pass;
  j["skipped"] = r.skipped;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["elapsed_ms"] = r.elapsed_ms;
  j["numeric"] = false;
  return j.dump();
}

std::string to_json_line(const ResidualReport& r) {
  std::ostringstream lhs;
  lhs << "residual=" << r.residual;
  if (r.q0 != 0.0) lhs << " (q0=" << r.q0 << ")";
  std::ostringstream rhs;
  rhs << "<= " << r.tolerance;
  nlohmann::json j;
  j["identity"] = r.check;
  j["a"] = r.a;
  j["n"] = r.n;
  j["pass"] = r.pass;
  j["skipped"] = false;
  j["lhs"] = lhs.str();
  j["rhs"] = rhs.str();
  j["elapsed_ms"] = r.elapsed_ms;
  j["numeric"] = true;
  return j.dump();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

const char* outcome(bool pass, bool skipped) { return skipped ? "SKIP" : pass ? "PASS" : "FAIL"; }

}  // namespace

std::string csv_header() { return "identity,a,n,pass,lhs,rhs,elapsed_ms"; }

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << identity_name(r.identity) << ',' << r.a << ',' << r.n << ','
      << outcome(r.pass, r.skipped) << ',' << csv_escape(r.lhs) << ',' << csv_escape(r.rhs) << ','
      << r.elapsed_ms;
  return out.str();
}

std::string to_csv_row(const ResidualReport& r) {
  std::ostringstream out;
  out << r.check << ',' << r.a << ',' << r.n << ',' << outcome(r.pass, false) << ','
      << "residual=" << r.residual << ',' << "<= " << r.tolerance << ',' << r.elapsed_ms;
  return out.str();
}

std::string to_text_line(const VerificationReport& r) {
  std::ostringstream out;
  out << outcome(r.pass, r.skipped) << ' ' << identity_name(r.identity) << " a=" << r.a
      << " n=" << r.n;
  if (!r.skipped) out << "  lhs = " << r.lhs << "  rhs = " << r.rhs;
  out << "  (" << r.elapsed_ms << " ms)";
  return out.str();
}

std::string to_text_line(const ResidualReport& r) {
  std::ostringstream out;
  out << outcome(r.pass, false) << ' ' << r.check << " a=" << r.a << " n=" << r.n;
  if (r.q0 != 0.0) out << " q0=" << r.q0;
  out << "  residual = " << r.residual << "  tol = " << r.tolerance << "  (" << r.elapsed_ms
      << " ms)";
  return out.str();
}

}  // namespace qdet
