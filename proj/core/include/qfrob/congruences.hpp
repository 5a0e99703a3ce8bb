#pragma once

// Arithmetic progressions on which a named series is divisible by a fixed
// prime power: the registry of claimed congruence families, exact
// verification of every in-range index, and the search for indices that
// witness the exponent being best possible.

#include <cstdint>
#include <string>
#include <vector>

#include "qfrob/genfun.hpp"
#include "qfrob/report.hpp"

namespace qfrob {

/// The claim: target(A*n + B) == 0 (mod p^e) for every n >= 0.
struct CongruenceFamily {
  /// "<series>-<A>n<B>-<p>e<e>" for registered rows (with the series name
  /// shorn of any "_closed" route suffix); ad-hoc rows keep their spec
  /// string verbatim.
  std::string id;
  std::string target;  // catalog series id whose coefficients are tested
  std::int64_t A = 1;  // progression step, >= 1
  std::int64_t B = 0;  // progression offset, 0 <= B < A
  std::int64_t p = 3;  // modulus prime
  std::int64_t e = 1;  // modulus exponent; the modulus is p^e
  /// Whether e is claimed to be best possible (see sharpness_check).
  bool sharp = false;
  /// Truncation the family is normally verified at.
  std::int64_t default_N = 3000;
};

/// The registered families in fixed verification order.  Three families
/// are each claimed twice at the same strength (once among the sharp
/// series-specific rows, once in a k-indexed chain); they appear once.
const std::vector<CongruenceFamily>& congruence_registry();

/// Registered family by id, or nullptr.
const CongruenceFamily* find_congruence(const std::string& id);

/// Parse an ad-hoc family "target;A;B;mod=m" where m is a prime power.
/// Throws std::invalid_argument on malformed input.
CongruenceFamily parse_family_spec(const std::string& text);

/// Check p^e | target(A*n + B) for every n with A*n + B < N.
/// No such index: infeasible.  Witnesses carry the failing series index
/// A*n + B; range.n_max is the largest progression n examined.
VerificationReport verify_congruence(const CongruenceFamily& family,
                                     std::int64_t N,
                                     const BuildOptions& opts = {});

/// Scan n upward for the first coefficient with p-adic valuation exactly e
/// (so p^{e+1} fails there).  Requires family.sharp; found: verified with
/// that single witness; none below N: infeasible.  The report id is the
/// family id with "-sharp" appended.
VerificationReport sharpness_check(const CongruenceFamily& family,
                                   std::int64_t N,
                                   const BuildOptions& opts = {});

/// a^{-1} mod m (0 < result < m); throws std::invalid_argument unless
/// m >= 2 and gcd(a, m) == 1.  The registry's progression offsets for the
/// chains indexed by k are these inverses, and unit tests pin them against
/// the equivalent closed-form fractions.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace qfrob
