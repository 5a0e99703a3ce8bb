// Tests for the congruence-family registry and scanner: registry shape
// and ids, chain offsets as modular inverses, ad-hoc family parsing,
// exhaustive in-range verification with witnesses for failures, and the
// search for exponent-sharpness witnesses.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qfrob/congruences.hpp"

using namespace qfrob;

TEST_CASE("the registry holds forty-six families with unique ids") {
  const auto& reg = congruence_registry();
  CHECK(reg.size() == 46);
  std::set<std::string> ids;
  for (const auto& f : reg) {
    CHECK(ids.insert(f.id).second);
    CHECK(f.A >= 1);
    CHECK(f.B >= 0);
    CHECK(f.B < f.A);
    CHECK((f.p == 3 || f.p == 5));
    CHECK(f.e >= 1);
    CHECK((f.default_N == 3000 || f.default_N == 5000));
  }
  // The three families claimed twice at the same strength appear once.
  CHECK(ids.count("cphi9-9n3-3e2") == 1);
  CHECK(ids.count("cphi9-9n6-3e3") == 1);
  CHECK(ids.count("cphi3-3n2-3e3") == 1);
}

TEST_CASE("registered ids strip the route suffix from the target name") {
  const CongruenceFamily* f = find_congruence("cphi3-3n1-3e2");
  REQUIRE(f != nullptr);
  CHECK(f->target == "cphi3_closed");
  CHECK(f->A == 3);
  CHECK(f->B == 1);
  CHECK(f->p == 3);
  CHECK(f->e == 2);
  CHECK(f->sharp);
  CHECK(f->default_N == 5000);
  CHECK(find_congruence("nosuch-family") == nullptr);
}

TEST_CASE("deeper chains carry the closed-form offsets") {
  struct Expect {
    const char* id;
    std::int64_t A, B, e;
  };
  const std::vector<Expect> rows = {
      {"cphi3-729n638-3e17", 729, 638, 17},
      {"cphi3-2187n1367-3e18", 2187, 1367, 18},
      {"cphi3-2187n2096-3e19", 2187, 2096, 19},
      {"cphi3-6561n3554-3e20", 6561, 3554, 20},
      {"cphi3-6561n5741-3e21", 6561, 5741, 21},
      {"cphi9-2187n1914-3e17", 2187, 1914, 17},
      {"cphi9-6561n4101-3e18", 6561, 4101, 18},
      {"cphi9-6561n6288-3e19", 6561, 6288, 19},
      {"cphi9-19683n10662-3e20", 19683, 10662, 20},
      {"cphibar3-81n71-3e10", 81, 71, 10},
      {"cphi2-25n23-5e2", 25, 23, 2},
  };
  for (const auto& e : rows) {
    const CongruenceFamily* f = find_congruence(e.id);
    REQUIRE_MESSAGE(f != nullptr, e.id);
    CHECK(f->A == e.A);
    CHECK(f->B == e.B);
    CHECK(f->e == e.e);
  }
}

TEST_CASE("modular inverses match the closed-form chain offsets") {
  // 8^{-1} mod 3^k gives the offsets of the Moebius-inverted chain.
  CHECK(inverse_mod(8, 3) == 2);
  CHECK(inverse_mod(8, 9) == 8);
  CHECK(inverse_mod(8, 27) == 17);
  CHECK(inverse_mod(8, 81) == 71);
  // 12^{-1} mod 5^k gives the two-colored offsets.
  CHECK(inverse_mod(12, 5) == 3);
  CHECK(inverse_mod(12, 25) == 23);
  CHECK(inverse_mod(1, 2) == 1);
  CHECK_THROWS_AS(inverse_mod(3, 9), std::invalid_argument);
  CHECK_THROWS_AS(inverse_mod(5, 1), std::invalid_argument);
}

TEST_CASE("ad-hoc family specs parse and validate") {
  const CongruenceFamily f = parse_family_spec("p;3;1;mod=3");
  CHECK(f.id == "p;3;1;mod=3");
  CHECK(f.target == "p");
  CHECK(f.A == 3);
  CHECK(f.B == 1);
  CHECK(f.p == 3);
  CHECK(f.e == 1);
  CHECK_FALSE(f.sharp);

  const CongruenceFamily g = parse_family_spec("cphi3;9;5;mod=243");
  CHECK(g.p == 3);
  CHECK(g.e == 5);
  const CongruenceFamily h = parse_family_spec("cphi2;25;23;mod=25");
  CHECK(h.p == 5);
  CHECK(h.e == 2);

  for (const char* bad : {
           "p;3;1",              // missing modulus
           "p;3;1;mod=6",        // 6 is not a prime power
           "p;3;1;mod=1",        // modulus below 2
           "p;0;0;mod=3",        // step must be positive
           "p;3;5;mod=3",        // offset not below the step
           "p;-3;1;mod=3",       // negative step
           "nosuch;3;1;mod=3",   // unknown series
           "p;x;1;mod=3",        // non-numeric field
           "p;3;1;3",            // missing mod= prefix
           "",                   // empty
       }) {
    INFO(bad);
    CHECK_THROWS_AS(parse_family_spec(bad), std::invalid_argument);
  }
}

TEST_CASE("verification scans every in-range index and reports witnesses") {
  // The partition series has no congruence on 3n+1 mod 3; the first two
  // failures are p(1) = 1 and p(4) = 5.
  const VerificationReport bad =
      verify_congruence(parse_family_spec("p;3;1;mod=3"), 10);
  CHECK(bad.status == VerifyStatus::violated);
  CHECK(bad.n_max == 2);
  REQUIRE(bad.witnesses.size() >= 2);
  CHECK(bad.witnesses[0].n == 1);
  CHECK(bad.witnesses[0].coefficient == 1);
  CHECK(bad.witnesses[0].valuation == 0);
  CHECK(bad.witnesses[1].n == 4);
  CHECK(bad.witnesses[1].coefficient == 5);

  const CongruenceFamily* f = find_congruence("cphi3-3n1-3e2");
  REQUIRE(f != nullptr);
  const VerificationReport good = verify_congruence(*f, 100);
  CHECK(good.status == VerifyStatus::verified);
  CHECK(good.n_max == 32);
  CHECK(good.witnesses.empty());
}

TEST_CASE("witness lists are capped") {
  // Almost every index fails, far more than the cap.
  const VerificationReport r =
      verify_congruence(parse_family_spec("p;2;1;mod=3"), 300);
  CHECK(r.status == VerifyStatus::violated);
  CHECK(r.witnesses.size() == kMaxReportWitnesses);
}

TEST_CASE("progressions that never enter the range are infeasible") {
  const CongruenceFamily* f = find_congruence("cphi3-243n233-3e14");
  REQUIRE(f != nullptr);
  const VerificationReport r = verify_congruence(*f, 100);
  CHECK(r.status == VerifyStatus::infeasible);
  CHECK(r.n_max == -1);
  CHECK(r.witnesses.empty());
}

TEST_CASE("the sharpness search returns the first exact-valuation witness") {
  const CongruenceFamily* f = find_congruence("cphi3-3n1-3e2");
  REQUIRE(f != nullptr);
  const VerificationReport r = sharpness_check(*f, 50);
  CHECK(r.id == "cphi3-3n1-3e2-sharp");
  CHECK(r.status == VerifyStatus::verified);
  CHECK(r.n_max == 0);  // found at progression index 0
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].n == 1);
  CHECK(r.witnesses[0].coefficient == 9);
  CHECK(r.witnesses[0].valuation == 2);
}

TEST_CASE("sharpness requires a family that claims a best exponent") {
  CHECK_THROWS_AS(sharpness_check(parse_family_spec("p;3;1;mod=3"), 10),
                  std::invalid_argument);
  // Out-of-range progressions report infeasible rather than guessing.
  const CongruenceFamily* f = find_congruence("cphi9-729n456-3e13");
  REQUIRE(f != nullptr);
  CHECK(f->sharp);
  CHECK(sharpness_check(*f, 100).status == VerifyStatus::infeasible);
}

TEST_CASE("every sharp family is among the series-specific rows") {
  std::int64_t sharp_count = 0;
  for (const auto& f : congruence_registry())
    if (f.sharp) {
      ++sharp_count;
      CHECK((f.target == "cphi3_closed" || f.target == "cphi9_closed"));
      CHECK(f.default_N == 5000);
    }
  CHECK(sharp_count == 20);
}
