// Tests for the identity registry and the suite runner: registry shape,
// spot verification of representative entries at reduced depth, argument
// validation, and the composition of the combined suite (whose only
// violation is the genuine w-seed-row bound failure reported by the table
// audit).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qfrob/congruences.hpp"
#include "qfrob/identities.hpp"
#include "qfrob/tables.hpp"

using namespace qfrob;

TEST_CASE("the registry holds fifty-two identity checks with unique ids") {
  const auto& reg = identity_registry();
  CHECK(reg.size() == 52);
  std::set<std::string> ids;
  for (const auto& e : reg) {
    CHECK(ids.insert(e.id).second);
    CHECK(e.default_N >= 150);
    CHECK(is_identity_id(e.id));
  }
  CHECK(reg.front().id == "modular-eq");
  CHECK(reg.back().id == "cphibar3-eq-cphi3-coprime3");
  CHECK_FALSE(is_identity_id("nosuch"));
}

TEST_CASE("default depths are at least 150 and 300 for the core entries") {
  std::map<std::string, std::int64_t> dn;
  for (const auto& e : identity_registry()) dn[e.id] = e.default_N;
  CHECK(dn.at("modular-eq") == 300);
  CHECK(dn.at("a-lambert-eta") == 300);
  CHECK(dn.at("cube-dissection") == 300);
  CHECK(dn.at("F1-eq-F2") == 300);
  CHECK(dn.at("cphi3-gen-27n17") == 150);
  CHECK(dn.at("cphi3-gen-81n71") == 150);
  CHECK(dn.at("a3-gen-27n24") == 200);
  CHECK(dn.at("cphi9-vs-cphi3-9n8-3e11") == 5000);
  CHECK(dn.at("cphi3-27n17-eta-form") == 150);
}

TEST_CASE("representative identities verify at reduced depth") {
  for (const char* id : {"modular-eq", "a-cubed", "cube-dissection",
                         "inv-cube-dissection", "F1-eq-F2", "F1-3dissect-1",
                         "F2-3dissect-2", "cphi3-3n2", "xi-inv-dissect-4",
                         "xi-combo-a-2", "xi-combo-b-1", "t-xi-product",
                         "a1-3n-eq-cphi3", "cphi9-3n-via-cphi3",
                         "cphi9-3n-via-a-series", "cphibar3-eq-cphi3-coprime3"}) {
    const VerificationReport r = verify_identity(id, 30);
    INFO(id);
    CHECK(r.id == id);
    CHECK(r.status == VerifyStatus::verified);
    CHECK(r.witnesses.empty());
    CHECK(r.N == 30);
  }
}

TEST_CASE("generating-function rows verify at reduced depth") {
  for (const char* id :
       {"cphi3-gen-3n2", "cphi3-gen-9n8", "cphi3-gen-27n17", "cphi3-gen-81n71",
        "a3-gen-9n6", "a3-gen-27n24", "a4-gen-9n6", "a4-gen-27n24",
        "a5-gen-9n6", "a5-gen-27n24"}) {
    const VerificationReport r = verify_identity(id, 8);
    INFO(id);
    CHECK(r.status == VerifyStatus::verified);
    // The compared window covers at least the requested depth.
    CHECK(r.n_max >= 7);
  }
}

TEST_CASE("progression-phrased entries behave like congruence scans") {
  const VerificationReport r = verify_identity("a3-9n6-3e4", 200);
  CHECK(r.status == VerifyStatus::verified);
  CHECK(r.n_max == 21);  // largest n with 9n+6 < 200
  const VerificationReport c = verify_identity("cphi9-vs-cphi3-3n2-3e8", 100);
  CHECK(c.status == VerifyStatus::verified);
}

TEST_CASE("an empty comparison range reports infeasible") {
  // At depth 2 the deep coupled progressions have no checkable index.
  const VerificationReport r = verify_identity("cphi9-vs-cphi3-243n152-3e16", 2);
  CHECK(r.status == VerifyStatus::infeasible);
  CHECK(r.n_max == -1);
}

TEST_CASE("unknown ids and bad depths are rejected") {
  CHECK_THROWS_AS(verify_identity("nosuch", 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("modular-eq", 0), std::invalid_argument);
}

TEST_CASE("suite names parse") {
  CHECK(suite_from_name("identities") == Suite::identities);
  CHECK(suite_from_name("theorems") == Suite::theorems);
  CHECK(suite_from_name("bounds") == Suite::bounds);
  CHECK(suite_from_name("all") == Suite::all);
  CHECK_FALSE(suite_from_name("everything").has_value());
  CHECK_FALSE(suite_from_name("").has_value());
}

TEST_CASE("the identity suite runs every entry in registry order") {
  const auto reports = run_suite(Suite::identities, 2);
  const auto& reg = identity_registry();
  REQUIRE(reports.size() == reg.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].id == reg[i].id);
    CHECK(reports[i].status != VerifyStatus::violated);
  }
}

TEST_CASE("the theorem suite runs every family in registry order") {
  const auto reports = run_suite(Suite::theorems, 2);
  const auto& reg = congruence_registry();
  REQUIRE(reports.size() == reg.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    CHECK(reports[i].id == reg[i].id);
}

TEST_CASE("the combined suite is identities, theorems, sharpness, bounds") {
  const auto reports = run_suite(Suite::all, 2);
  const std::size_t n_id = identity_registry().size();
  const std::size_t n_thm = congruence_registry().size();
  std::size_t n_sharp = 0;
  for (const auto& f : congruence_registry())
    if (f.sharp) ++n_sharp;
  const std::size_t n_bounds = valuation_audit_ids().size();
  REQUIRE(reports.size() == n_id + n_thm + n_sharp + n_bounds);

  // The only violation anywhere is the genuine bound failure in the w
  // seed row, reported by the yzw audit with its two known cells.
  std::vector<const VerificationReport*> violated;
  for (const auto& r : reports)
    if (r.status == VerifyStatus::violated) violated.push_back(&r);
  REQUIRE(violated.size() == 1);
  CHECK(violated[0]->id == "yzw-order-bounds");
  REQUIRE(violated[0]->witnesses.size() == 2);
  CHECK(violated[0]->witnesses[0].n == 3001004);
  CHECK(violated[0]->witnesses[1].n == 3001006);

  // Sharpness reports follow the theorem block and carry the suffix.
  const auto& first_sharp = reports[n_id + n_thm];
  CHECK(first_sharp.id == "cphi3-3n1-3e2-sharp");
}

TEST_CASE("suite entries run at the smaller of N and their default depth") {
  const auto reports = run_suite(Suite::identities, 40);
  for (const auto& r : reports) {
    CHECK(r.N == 40);  // every default is >= 150, so min(N, default) = 40
    CHECK(r.status != VerifyStatus::violated);
  }
}
