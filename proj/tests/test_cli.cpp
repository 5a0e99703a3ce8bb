// End-to-end tests of the command-line tool, run as a subprocess.  The
// binary path arrives in the QFROB_CLI environment variable (set by the
// test harness).  Covers the exit-code contract (0 none violated, 1 some
// violated, 2 usage/unknown), the documented example invocations, output
// formats, and flag validation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
  const char* exe = std::getenv("QFROB_CLI");
  REQUIRE_MESSAGE(exe != nullptr,
                  "QFROB_CLI must point at the command-line binary");
  const std::string cmd = std::string(exe) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    r.output.append(buf, got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("expand prints coefficients as a space-joined line") {
  CliResult r = run_cli("expand p 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 1 2 3 5 7\n");

  r = run_cli("expand cphi3_closed 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 9\n");

  // A series with a negative leading exponent starts at its valuation.
  r = run_cli("expand xi 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 -3 0 5\n");
}

TEST_CASE("expand rejects unknown series ids with exit 2") {
  const CliResult r = run_cli("expand nosuch 10");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("tables dumps exact entries") {
  CliResult r = run_cli("tables a 1 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "21 10206 767637 14348907\n");

  r = run_cli("tables b 1 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "162 21870 531441 0\n");

  r = run_cli("tables m 1 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n");

  r = run_cli("tables m 3 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3 0 0\n1 81 0\n0 54 2187\n");

  CHECK(run_cli("tables q 1 1").exit_code == 2);
  CHECK(run_cli("tables m 0 1").exit_code == 2);
  CHECK(run_cli("tables m 1").exit_code == 2);
}

TEST_CASE("oracle prints combinatorial counts") {
  const CliResult r = run_cli("oracle 3 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 9 27 82 207 486 1055\n");
  CHECK(run_cli("oracle 0 3").exit_code == 2);
  // A starved budget is a usage-level failure, not a violation.
  CHECK(run_cli("oracle 3 12 --budget 10").exit_code == 2);
}

TEST_CASE("verify reports a violated ad-hoc family with exit 1") {
  const CliResult r = run_cli("verify --family \"p;3;1;mod=3\" 10");
  CHECK(r.exit_code == 1);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0].at("id") == "p;3;1;mod=3");
  CHECK(j[0].at("status") == "violated");
  CHECK(j[0].at("witnesses")[0].at("n") == 1);
  CHECK(j[0].at("witnesses")[0].at("coefficient") == "1");
}

TEST_CASE("verify accepts registry entries and suites") {
  CliResult r = run_cli("verify modular-eq 40");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j[0].at("status") == "verified");

  r = run_cli("verify cphi3-3n1-3e2 100 --format tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("cphi3-3n1-3e2\tverified\t32\t100", 0) == 0);

  r = run_cli("verify identities 5 --format tsv");
  CHECK(r.exit_code == 0);

  CHECK(run_cli("verify nosuch-entry 10").exit_code == 2);
}

TEST_CASE("the bounds suite honestly reports the w-row violations") {
  const CliResult r = run_cli("verify bounds");
  CHECK(r.exit_code == 1);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  int violated = 0;
  for (const auto& rep : j)
    if (rep.at("status") == "violated") {
      ++violated;
      CHECK(rep.at("id") == "yzw-order-bounds");
      REQUIRE(rep.at("witnesses").size() == 2);
      CHECK(rep.at("witnesses")[0].at("n") == 3001004);
      CHECK(rep.at("witnesses")[1].at("n") == 3001006);
    }
  CHECK(violated == 1);
}

TEST_CASE("sharpness finds exact-valuation witnesses") {
  const CliResult r = run_cli("sharpness cphi3-3n1-3e2 50");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j[0].at("id") == "cphi3-3n1-3e2-sharp");
  CHECK(j[0].at("status") == "verified");
  CHECK(j[0].at("witnesses")[0].at("n") == 1);
  CHECK(j[0].at("witnesses")[0].at("valuation") == 2);
  CHECK(run_cli("sharpness nosuch-family").exit_code == 2);
  // Only families that claim a best exponent participate.
  CHECK(run_cli("sharpness cphibar3-3n2-3e3 50").exit_code == 2);
}

TEST_CASE("flag validation follows the usage contract") {
  CHECK(run_cli("expand p 6 --upto 7").exit_code == 2);  // conflicting depths
  CHECK(run_cli("expand p --upto 6").exit_code == 0);    // flag form works
  CHECK(run_cli("expand p 1").exit_code == 2);           // depth below 2
  CHECK(run_cli("expand p abc").exit_code == 2);         // non-numeric depth
  CHECK(run_cli("expand p 6 --frobulate").exit_code == 2);  // unknown flag
  CHECK(run_cli("expand").exit_code == 2);               // missing argument
  CHECK(run_cli("").exit_code == 2);                     // missing command
  CHECK(run_cli("frobnicate p 6").exit_code == 2);       // unknown command
  CHECK(run_cli("expand p 6 --format xml").exit_code == 2);  // bad format
  CHECK(run_cli("verify modular-eq 40 --budget 0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("json format is parseable everywhere it is offered") {
  for (const char* args :
       {"expand p 6 --format json", "tables m 2 2 --format json",
        "oracle 2 4 --format json", "verify t-xi-product 20 --format json",
        "sharpness cphi9-9n3-3e2 60 --format json"}) {
    const CliResult r = run_cli(args);
    INFO(args);
    CHECK(r.exit_code == 0);
    CHECK_NOTHROW((void)nlohmann::json::parse(r.output));
  }
}

TEST_CASE("identical invocations agree byte for byte modulo timings") {
  auto strip_elapsed = [](const std::string& text) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string::npos) eol = text.size();
      const std::string line = text.substr(pos, eol - pos);
      if (line.find("elapsed_ms") == std::string::npos) {
        out += line;
        out += '\n';
      }
      pos = eol + 1;
    }
    return out;
  };
  const CliResult a = run_cli("verify theorems 200 --format json");
  const CliResult b = run_cli("verify theorems 200 --format json");
  CHECK(a.exit_code == 0);
  CHECK(strip_elapsed(a.output) == strip_elapsed(b.output));
}
