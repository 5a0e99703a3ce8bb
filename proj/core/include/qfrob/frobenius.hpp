#pragma once

// Ground-truth oracle: counts k-colored generalized Frobenius arrays of a
// given weight directly from the combinatorial definition, by backtracking
// over strictly decreasing colored rows.  Used to anchor the generating-
// function routes at small n; never used at scale.

#include <cstdint>
#include <vector>

#include "qfrob/report.hpp"
#include "qfrob/series.hpp"

namespace qfrob {

/// Node-visit allowance for one enumeration call.  Within it, k = 3 counts
/// are practical up to n ~ 14 and k = 9 up to n ~ 8.
inline constexpr std::int64_t kDefaultOracleBudget = 50'000'000;

/// A nonnegative integer carrying one of k colors.
struct ColoredInteger {
  std::int64_t value = 0;
  std::int64_t color = 1;  // in [1, k]
};

/// Strict total order: first by value, then by color.
bool precedes(const ColoredInteger& a, const ColoredInteger& b);

/// Two strictly decreasing (under `precedes`) rows of equal length r.
/// The weight is r plus the value-sums of both rows.
struct FrobeniusArray {
  std::vector<ColoredInteger> top;
  std::vector<ColoredInteger> bottom;
  std::int64_t weight() const;
};

/// Least possible value-sum of a strictly decreasing row of length r with
/// k colors: each value fills at most k slots, so the minimum packs
/// ceil(r/k) consecutive values from 0 up and equals sum_{i<r} floor(i/k).
std::int64_t min_row_value_sum(std::int64_t k, std::int64_t r);

/// Exact number of k-colored generalized Frobenius arrays of weight n.
/// Backtracks over row length r (while r plus twice the least row
/// value-sum still fits in n) and over rows; a partial row is abandoned
/// once its value-sum exceeds what the partner row's least value-sum
/// allows.  Throws BudgetExceededError past `budget` node visits,
/// std::invalid_argument for k < 1 or n < 0.
Int enumerate_cphi(std::int64_t k, std::int64_t n,
                   std::int64_t budget = kDefaultOracleBudget);

/// Test support: the same count with the least-value-sum pruning disabled
/// (row length capped only by the weight itself).  Must agree with
/// enumerate_cphi wherever both are feasible.
Int enumerate_cphi_unpruned(std::int64_t k, std::int64_t n);

/// Test support: counts completed (row, row) pairs one by one instead of
/// convolving per-row tallies; `swap_rows` enumerates the bottom row
/// first.  Must agree with enumerate_cphi (the counted set is symmetric
/// under exchanging the rows).
Int enumerate_cphi_pairs(std::int64_t k, std::int64_t n, bool swap_rows);

/// Compares enumerate_cphi(k, n) against the generating-function route
/// for all n <= n_max (k = 1: the partition series; k = 3, 9: the closed
/// eta-quotient forms; other k <= 9: the lattice-theta route).  Witnesses
/// carry the difference (enumerated minus series).  Budget exhaustion on
/// either side reports infeasible.
VerificationReport oracle_cross_check(
    std::int64_t k, std::int64_t n_max,
    std::int64_t budget = kDefaultOracleBudget);

}  // namespace qfrob
