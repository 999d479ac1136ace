#include "qdet/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

namespace qdet {
namespace {

VerificationReport sample_report() {
  VerificationReport r;
  r.identity = IdentityId::ThmFloor;
  r.a = 1;
  r.n = 3;
  r.lhs = "q^-4";
  r.rhs = "q^-4";
  r.pass = true;
  r.elapsed_ms = 0.25;
  return r;
}

TEST(ReportTest, JsonLineSchema) {
  auto j = nlohmann::json::parse(to_json_line(sample_report()));
  EXPECT_EQ(j["identity"], "thm-floor");
  EXPECT_EQ(j["a"], 1);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["skipped"], false);
  EXPECT_EQ(j["lhs"], "q^-4");
  EXPECT_EQ(j["rhs"], "q^-4");
  EXPECT_TRUE(j["elapsed_ms"].is_number());
  EXPECT_EQ(j["numeric"], false);
}

TEST(ReportTest, NumericJsonLine) {
  ResidualReport r;
  r.check = "ucv-factorization";
  r.n = 3;
  r.a = 1;
  r.q0 = 2.0;
  r.residual = 1e-13;
  r.tolerance = 1e-9;
  r.pass = true;
  auto j = nlohmann::json::parse(to_json_line(r));
  EXPECT_EQ(j["identity"], "ucv-factorization");
  EXPECT_EQ(j["numeric"], true);
  EXPECT_EQ(j["pass"], true);
  EXPECT_NE(j["lhs"].get<std::string>().find("q0=2"), std::string::npos);
}

TEST(ReportTest, CsvRows) {
  EXPECT_EQ(csv_header(), "identity,a,n,pass,lhs,rhs,elapsed_ms");
  std::string row = to_csv_row(sample_report());
  EXPECT_EQ(row.substr(0, row.find(',')), "thm-floor");
  EXPECT_NE(row.find("PASS"), std::string::npos);

  VerificationReport skip;
  skip.identity = IdentityId::PropQInv;
  skip.a = 2;
  skip.n = 3;
  skip.skipped = true;
  EXPECT_NE(to_csv_row(skip).find("SKIP"), std::string::npos);

  VerificationReport fail = sample_report();
  fail.pass = false;
  fail.lhs = "has,comma";
  std::string frow = to_csv_row(fail);
  EXPECT_NE(frow.find("FAIL"), std::string::npos);
  EXPECT_NE(frow.find("\"has,comma\""), std::string::npos);
}

TEST(ReportTest, TextLines) {
  EXPECT_NE(to_text_line(sample_report()).find("PASS thm-floor a=1 n=3"), std::string::npos);
  ResidualReport r;
  r.check = "vandermonde-inverse";
  r.n = 5;
  r.residual = 2e-14;
  r.tolerance = 1e-9;
  r.pass = true;
  EXPECT_NE(to_text_line(r).find("vandermonde-inverse"), std::string::npos);
}

TEST(ReportTest, IdentityNamesRoundTrip) {
  for (IdentityId id : all_identities()) {
    auto parsed = parse_identity(identity_name(id));
    ASSERT_TRUE(parsed.has_value()) << identity_name(id);
    EXPECT_EQ(*parsed, id);
  }
  EXPECT_FALSE(parse_identity("nope").has_value());
  EXPECT_EQ(all_identities().size(), 18u);
}

}  // namespace
}  // namespace qdet
