#pragma once

// The registry of exact q-series identities and fixed prime-power
// coefficient relations the library re-derives and checks term by term,
// plus the suite runner that drives identities, congruence families,
// sharpness searches, and table audits together.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfrob/genfun.hpp"
#include "qfrob/report.hpp"

namespace qfrob {

struct IdentityInfo {
  std::string id;
  /// Comparison depth the entry is normally verified at.  Run at N >=
  /// default_N, every entry compares at least default_N coefficients.
  std::int64_t default_N = 300;
};

/// All registered identity checks, in fixed verification order.
const std::vector<IdentityInfo>& identity_registry();
bool is_identity_id(const std::string& id);

/// Re-derives both sides of the named identity at comparison depth N and
/// compares them, exactly or modulo the stated prime power.  Witnesses of
/// a mismatch carry the exponent of q where the sides differ and the
/// coefficient difference (left minus right); entries phrased as a
/// divisibility on one series' progression behave like congruence scans
/// instead (series index, coefficient).  An empty comparison range
/// reports infeasible.  Throws std::invalid_argument for unknown ids or
/// N < 1.
VerificationReport verify_identity(const std::string& id, std::int64_t N,
                                   const BuildOptions& opts = {});

enum class Suite { identities, theorems, bounds, all };

/// Parses "identities", "theorems", "bounds", "all".
std::optional<Suite> suite_from_name(const std::string& name);

/// Runs every entry of a suite at min(N, the entry's default depth):
///   identities — the identity registry, in order;
///   theorems   — the congruence registry, in order;
///   bounds     — the valuation/vanishing table audits (N-independent);
///   all        — identities, then theorems, then sharpness searches for
///                the sharp congruence families, then bounds.
std::vector<VerificationReport> run_suite(Suite suite, std::int64_t N,
                                          const BuildOptions& opts = {});

}  // namespace qfrob
