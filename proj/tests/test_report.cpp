// Tests for report serialization: the JSON schema (alphabetical keys,
// exact decimal coefficient strings, "inf" for an infinite valuation,
// whole-millisecond timings), the one-line TSV form, and the multi-line
// text form.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "qfrob/report.hpp"

using namespace qfrob;

namespace {

VerificationReport sample_report() {
  VerificationReport r;
  r.id = "demo-check";
  r.status = VerifyStatus::violated;
  r.n_max = 41;
  r.N = 100;
  r.elapsed_ms = 12.6;
  r.witnesses.push_back(Witness{7, Int("-123456789012345678901234567890"), 0});
  r.witnesses.push_back(Witness{9, Int(0), std::nullopt});
  return r;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(to_string(VerifyStatus::verified) == std::string("verified"));
  CHECK(to_string(VerifyStatus::violated) == std::string("violated"));
  CHECK(to_string(VerifyStatus::infeasible) == std::string("infeasible"));
}

TEST_CASE("ok means not violated") {
  VerificationReport r;
  r.status = VerifyStatus::verified;
  CHECK(r.ok());
  r.status = VerifyStatus::infeasible;
  CHECK(r.ok());
  r.status = VerifyStatus::violated;
  CHECK_FALSE(r.ok());
}

TEST_CASE("json serialization carries the full schema") {
  const nlohmann::json j = report_to_json(sample_report());
  CHECK(j.at("id") == "demo-check");
  CHECK(j.at("status") == "violated");
  CHECK(j.at("range").at("n_max") == 41);
  CHECK(j.at("range").at("N") == 100);
  // Timings serialize as whole milliseconds (12.6 rounds to 13).
  CHECK(j.at("elapsed_ms") == 13);
  REQUIRE(j.at("witnesses").size() == 2);
  const auto& w0 = j.at("witnesses")[0];
  CHECK(w0.at("n") == 7);
  // Coefficients are exact decimal strings (they exceed 64-bit range).
  CHECK(w0.at("coefficient") == "-123456789012345678901234567890");
  CHECK(w0.at("valuation") == 0);
  const auto& w1 = j.at("witnesses")[1];
  CHECK(w1.at("coefficient") == "0");
  CHECK(w1.at("valuation") == "inf");
  // Object keys appear in alphabetical order in the dump.
  const std::string text = j.dump();
  CHECK(text.find("\"elapsed_ms\"") < text.find("\"id\""));
  CHECK(text.find("\"id\"") < text.find("\"range\""));
  CHECK(text.find("\"range\"") < text.find("\"status\""));
  CHECK(text.find("\"status\"") < text.find("\"witnesses\""));
}

TEST_CASE("tsv is a single line with semicolon-joined witnesses") {
  const std::string line = report_to_tsv(sample_report());
  CHECK(line ==
        "demo-check\tviolated\t41\t100\t"
        "7:-123456789012345678901234567890:0;9:0:inf\t13");
  CHECK(line.find('\n') == std::string::npos);

  VerificationReport clean;
  clean.id = "empty";
  clean.status = VerifyStatus::verified;
  clean.n_max = 5;
  clean.N = 6;
  clean.elapsed_ms = 0.4;
  CHECK(report_to_tsv(clean) == "empty\tverified\t5\t6\t\t0");
}

TEST_CASE("text form is multi-line and ends with a newline") {
  const std::string text = report_to_text(sample_report());
  CHECK(text.find("demo-check") != std::string::npos);
  CHECK(text.find("violated") != std::string::npos);
  CHECK(text.find("witness n=7") != std::string::npos);
  CHECK(text.find("valuation=inf") != std::string::npos);
  CHECK(text.find("elapsed_ms=13") != std::string::npos);
  REQUIRE_FALSE(text.empty());
  CHECK(text.back() == '\n');
}
