#pragma once

// Uniform result type for every verification routine in the library
// (identity checks, congruence scans, valuation-bound audits, sharpness
// searches, enumeration cross-checks), plus its serialized forms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfrob/series.hpp"

namespace qfrob {

enum class VerifyStatus { verified, violated, infeasible };

/// Verification routines stop collecting witnesses beyond this many; the
/// violation status itself always reflects the full scanned range.
inline constexpr std::size_t kMaxReportWitnesses = 25;

std::string to_string(VerifyStatus s);

/// One offending (or otherwise interesting) coefficient.  The meaning of `n`
/// depends on the producing check: congruence scans report the argument of
/// the underlying counting function, identity checks report the exponent of
/// q at which the two sides first differ, and table audits encode the cell
/// (i, j) as n = 1000*i + j.  `valuation` is the 3-adic (or generally
/// p-adic) order of the coefficient; std::nullopt encodes +infinity (the
/// coefficient is zero).
struct Witness {
  std::int64_t n = 0;
  Int coefficient = 0;
  std::optional<std::int64_t> valuation;
};

struct VerificationReport {
  std::string id;
  VerifyStatus status = VerifyStatus::verified;
  /// Largest index actually examined (-1 when nothing was checkable).
  std::int64_t n_max = -1;
  /// Series truncation the check ran at.
  std::int64_t N = 0;
  std::vector<Witness> witnesses;
  double elapsed_ms = 0.0;

  bool ok() const { return status != VerifyStatus::violated; }
};

/// JSON form:
///   {"id": ..., "status": ..., "range": {"n_max": ..., "N": ...},
///    "witnesses": [{"n": ..., "coefficient": "<decimal>",
///                   "valuation": <int or "inf">}, ...],
///    "elapsed_ms": ...}
nlohmann::json report_to_json(const VerificationReport& r);

/// One tab-separated row: id, status, n_max, N, semicolon-joined witnesses
/// (n:coefficient:valuation), elapsed_ms.
std::string report_to_tsv(const VerificationReport& r);

/// Human-oriented multi-line rendering; elapsed_ms is emitted on its own
/// line so timing can be filtered out when comparing runs.
std::string report_to_text(const VerificationReport& r);

}  // namespace qfrob
