#pragma once

// Named generating functions and the routes that build them:
//
//   p             1/E1, the partition series
//   cphi1..cphi9  lattice-theta route: theta_lattice(k) / E1^k
//   cphi3_closed  a(q)/E1^3
//   cphi9_closed  E1^3/E3^4 - 240 q E9^3/E3^4 + 324 q E3^8/E1^9
//                   - 1458 q^2 E9^6/(E1^3 E3^4) + 19683 q^4 E9^12/(E1^9 E3^4)
//   cphibar2/3/9  Moebius-inverted colored counts (full color-cycle order)
//   a1..a5        E1^3/E3^4, q E9^3/E3^4, q E3^8/E1^9, q^2 E9^6/(E1^3 E3^4),
//                 q^4 E9^12/(E1^9 E3^4)
//   xi, T, S      E1^3/(q E9^3), q^3 E9^3/E3^3, E3^4/E9^4 + 9 q^3 E3 E27^3/E9^4
//   a_of_q        the cubic theta function (Lambert expansion)
//   F1, F2        the two twelve-weight combinations whose equality encodes
//                 the 9-colored/3-colored coupling
//
// All builds are deterministic and prefix-stable: build(id, N).truncated(M)
// equals build(id, M) bit-for-bit for M <= N.  Results are memoized in
// memory at the largest truncation built, and optionally mirrored to a
// line-oriented coefficient cache on disk.

#include <cstdint>
#include <string>
#include <vector>

#include "qfrob/report.hpp"
#include "qfrob/series.hpp"
#include "qfrob/theta.hpp"

namespace qfrob {

/// All known series ids, in catalog order.
const std::vector<std::string>& series_ids();
bool is_series_id(const std::string& id);

struct BuildOptions {
  std::int64_t lattice_budget = kDefaultLatticeBudget;
  /// Directory for the on-disk coefficient cache; empty disables it.
  std::string cache_dir;
  /// Recompute even on a disk-cache hit and require bit-identical
  /// coefficients; a mismatch throws CacheFormatError.
  bool verify_cache = false;
};

/// Build the named series with all coefficients below N known.
/// Throws std::invalid_argument for unknown ids, BudgetExceededError when a
/// lattice-theta route exceeds its budget.
LaurentSeries build(const std::string& id, std::int64_t N);
LaurentSeries build(const std::string& id, std::int64_t N,
                    const BuildOptions& opts);

/// Moebius function by trial factorization; rejects n <= 0.
int mobius(std::int64_t n);

/// Coefficient n is sum over d | gcd(k, n) of mu(d) * cphi_{k/d}(n/d),
/// with non-integer arguments contributing 0.  Supported k: 2, 3, 9
/// (components routed through cphi2 / cphi3_closed / cphi9_closed / p).
LaurentSeries cphibar_series(std::int64_t k, std::int64_t N);

/// Coefficient-wise comparison of the lattice-theta route against the
/// closed form, k in {3, 9}.  Budget exhaustion reports infeasible.
VerificationReport cross_check_cphi(
    std::int64_t k, std::int64_t N,
    std::int64_t lattice_budget = kDefaultLatticeBudget);

}  // namespace qfrob
