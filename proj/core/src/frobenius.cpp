#include "qfrob/frobenius.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "qfrob/genfun.hpp"
#include "qfrob/tables.hpp"
#include "qfrob/theta.hpp"

namespace qfrob {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_kn(std::int64_t k, std::int64_t n) {
  if (k < 1)
    throw std::invalid_argument("enumerate_cphi: need k >= 1, got " +
                                std::to_string(k));
  if (n < 0)
    throw std::invalid_argument("enumerate_cphi: need n >= 0, got " +
                                std::to_string(n));
}

/// Tallies strictly decreasing rows by (length, value-sum).  Every prefix
/// of a valid row is itself a valid row, so each backtracking node records
/// one tally.  cap[r] bounds the value-sum still worth recording for rows
/// of length r; extending a row only raises the sum, so a branch is cut as
/// soon as no extension can stay within cap.
struct RowTally {
  std::int64_t k = 1;
  std::int64_t r_max = 0;
  std::vector<std::int64_t> cap;    // cap[r] >= 0 for r <= r_max
  std::vector<std::vector<Int>> d;  // d[r][s], 0 <= s <= cap[r]
  std::int64_t budget = 0;
  std::int64_t visited = 0;

  void run() {
    d.resize(static_cast<std::size_t>(r_max) + 1);
    for (std::int64_t r = 0; r <= r_max; ++r)
      d[r].assign(static_cast<std::size_t>(cap[r]) + 1, Int(0));
    // Sentinel predecessor above every usable value, so the first element
    // ranges over all k colors of every value.
    descend(0, 0, cap[0] + 1, 1);
  }

  void descend(std::int64_t len, std::int64_t sum, std::int64_t prev_value,
               std::int64_t prev_color) {
    if (++visited > budget)
      throw BudgetExceededError("row enumeration exceeded its budget of " +
                                std::to_string(budget) + " nodes");
    d[len][sum] += 1;
    if (len == r_max) return;
    std::int64_t v = std::min(prev_value, cap[len + 1] - sum);
    for (; v >= 0; --v) {
      const std::int64_t color_top = (v == prev_value) ? prev_color - 1 : k;
      for (std::int64_t c = color_top; c >= 1; --c)
        descend(len + 1, sum + v, v, c);
    }
  }
};

/// sum over r of sum_{s1+s2 = n-r} d[r][s1] * d[r][s2].
Int pair_rows(const RowTally& t, std::int64_t n) {
  Int total = 0;
  for (std::int64_t r = 0; r <= t.r_max; ++r) {
    const std::int64_t s_total = n - r;
    const auto& row = t.d[r];
    const std::int64_t s_cap = static_cast<std::int64_t>(row.size()) - 1;
    for (std::int64_t s1 = 0; s1 <= std::min(s_total, s_cap); ++s1) {
      const std::int64_t s2 = s_total - s1;
      if (s2 > s_cap) continue;
      total += row[s1] * row[s2];
    }
  }
  return total;
}

Int count_arrays(std::int64_t k, std::int64_t n, std::int64_t budget,
                 bool prune) {
  require_kn(k, n);
  RowTally t;
  t.k = k;
  t.budget = budget;
  if (prune) {
    // Largest r whose least possible weight r + 2 * min-sum still fits.
    t.r_max = 0;
    while (t.r_max + 1 + 2 * min_row_value_sum(k, t.r_max + 1) <= n)
      ++t.r_max;
  } else {
    t.r_max = n;  // weight >= r always
  }
  t.cap.resize(static_cast<std::size_t>(t.r_max) + 1);
  for (std::int64_t r = 0; r <= t.r_max; ++r)
    t.cap[r] = prune ? n - r - min_row_value_sum(k, r) : n - r;
  t.run();
  return pair_rows(t, n);
}

/// Materializes each candidate pair, rebuilds the two-row array, and
/// counts it only if the weight recomputed from the definition matches.
/// Only meant for small n; the production path never materializes rows.
struct PairCounter {
  std::int64_t k = 1;
  std::int64_t n = 0;
  bool swap_rows = false;
  Int total = 0;
  std::vector<ColoredInteger> first, second;

  void outer(std::int64_t sum, std::int64_t prev_value,
             std::int64_t prev_color) {
    const auto len = static_cast<std::int64_t>(first.size());
    inner(len, n - len - sum, n + 1, 1);
    std::int64_t v = std::min(
        prev_value, n - (len + 1) - sum - min_row_value_sum(k, len + 1));
    for (; v >= 0; --v) {
      const std::int64_t color_top = (v == prev_value) ? prev_color - 1 : k;
      for (std::int64_t c = color_top; c >= 1; --c) {
        first.push_back(ColoredInteger{v, c});
        outer(sum + v, v, c);
        first.pop_back();
      }
    }
  }

  void inner(std::int64_t len_left, std::int64_t sum_left,
             std::int64_t prev_value, std::int64_t prev_color) {
    if (sum_left < 0) return;
    if (len_left == 0) {
      if (sum_left != 0) return;
      const FrobeniusArray arr = swap_rows
                                     ? FrobeniusArray{second, first}
                                     : FrobeniusArray{first, second};
      if (arr.weight() == n) total += 1;
      return;
    }
    std::int64_t v = std::min(prev_value - (prev_color == 1 ? 1 : 0),
                              sum_left - min_row_value_sum(k, len_left - 1));
    for (; v >= 0; --v) {
      const std::int64_t color_top = (v == prev_value) ? prev_color - 1 : k;
      for (std::int64_t c = color_top; c >= 1; --c) {
        second.push_back(ColoredInteger{v, c});
        inner(len_left - 1, sum_left - v, v, c);
        second.pop_back();
      }
    }
  }
};

std::string oracle_route(std::int64_t k) {
  if (k == 1) return "p";
  if (k == 3) return "cphi3_closed";
  if (k == 9) return "cphi9_closed";
  if (k >= 2 && k <= 9) return "cphi" + std::to_string(k);
  throw std::invalid_argument(
      "oracle_cross_check: no generating-function route for k = " +
      std::to_string(k));
}

}  // namespace

bool precedes(const ColoredInteger& a, const ColoredInteger& b) {
  return a.value < b.value || (a.value == b.value && a.color < b.color);
}

std::int64_t FrobeniusArray::weight() const {
  std::int64_t w = static_cast<std::int64_t>(top.size());
  for (const ColoredInteger& e : top) w += e.value;
  for (const ColoredInteger& e : bottom) w += e.value;
  return w;
}

std::int64_t min_row_value_sum(std::int64_t k, std::int64_t r) {
  // sum_{i=0}^{r-1} floor(i/k): full blocks of k equal values, then a tail.
  const std::int64_t blocks = r / k, tail = r % k;
  return k * blocks * (blocks - 1) / 2 + tail * blocks;
}

Int enumerate_cphi(std::int64_t k, std::int64_t n, std::int64_t budget) {
  if (budget < 1)
    throw std::invalid_argument("enumerate_cphi: budget must be positive");
  return count_arrays(k, n, budget, /*prune=*/true);
}

Int enumerate_cphi_unpruned(std::int64_t k, std::int64_t n) {
  return count_arrays(k, n, kDefaultOracleBudget, /*prune=*/false);
}

Int enumerate_cphi_pairs(std::int64_t k, std::int64_t n, bool swap_rows) {
  require_kn(k, n);
  PairCounter pc;
  pc.k = k;
  pc.n = n;
  pc.swap_rows = swap_rows;
  pc.outer(0, n + 1, 1);
  return pc.total;
}

VerificationReport oracle_cross_check(std::int64_t k, std::int64_t n_max,
                                      std::int64_t budget) {
  require_kn(k, n_max);
  const auto t0 = Clock::now();
  VerificationReport r;
  r.id = "oracle-cphi" + std::to_string(k);
  r.N = n_max + 1;
  try {
    const LaurentSeries series = build(oracle_route(k), n_max + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const Int d = enumerate_cphi(k, n, budget) - series.coeff(n);
      if (d != 0) {
        r.status = VerifyStatus::violated;
        if (r.witnesses.size() < kMaxReportWitnesses)
          r.witnesses.push_back(Witness{n, d, padic_order(d, 3)});
      }
    }
    r.n_max = n_max;
  } catch (const BudgetExceededError&) {
    r.status = VerifyStatus::infeasible;
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

}  // namespace qfrob
