#pragma once

// The seven lazily extended integer matrix families:
//
//   m — base rows m_{1,1}=3; m_{2,1}=1, m_{2,2}=81; m_{3,2}=54, m_{3,3}=2187;
//       all other entries of rows 1..3 zero; m_{i,1}=0 for i>=4; and
//       m_{i,j} = m_{i-3,j-1} + 9 m_{i-2,j-1} + 27 m_{i-1,j-1}  (i>=4, j>=2).
//       Entries vanish for i >= 3j and for j > i (checked, see below).
//   a — a_{i,j} = 9 m_{4i+1,i+j} + m_{4i,i+j}
//   b — b_{i,j} = m_{4i-1,i+j} + 9 m_{4i,i+j}
//   x — row 1 = (3, 0, 0, ...); alternating contraction (see below)
//   y — row 1: y_{1,j} = 6 a_{1,j} + 243 a_{2,j}
//   z — row 1 = (21, 10206, 767637, 14348907, 0, ...)
//   w — row 1: w_{1,j} = 6 a_{2,j} + 243 a_{3,j}
//
// For x, y, z, w the rows evolve by the alternating contraction
//   row_{2k,j}   = sum_i row_{2k-1,i} * b_{i,j},
//   row_{2k+1,j} = sum_i row_{2k,i}   * a_{i,j};
// the sums are finite because a_{i,j} = 0 for i >= 3j and b_{i,j} = 0 for
// i > 3j, and every row has finite support.
//
// Also here: the 3-adic order and the audit of the valuation / vanishing
// bounds asserted for these tables.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfrob/report.hpp"
#include "qfrob/series.hpp"

namespace qfrob {

enum class TableFamily { m, a, b, x, y, z, w };

std::optional<TableFamily> table_family_from_name(const std::string& name);
std::string to_string(TableFamily f);

/// Exact entry (1-based indices), computing and caching its whole
/// dependency cone.  Throws std::invalid_argument for i < 1 or j < 1.
Int table_entry(TableFamily f, std::int64_t i, std::int64_t j);

/// Entries (i, 1..j_count) of one row.
std::vector<Int> table_row(TableFamily f, std::int64_t i, std::int64_t j_count);

/// The upper-left rows x cols block, row-major.
std::vector<std::vector<Int>> table_block(TableFamily f, std::int64_t rows,
                                          std::int64_t cols);

/// Largest column index that can carry a nonzero entry in row i.
/// (m: i; a: 3i+1; b: 3i; x/y/z/w: seed support 1/7/4/10 growing by
/// s -> 3s over a b-contraction and s -> 3s+1 over an a-contraction.)
std::int64_t table_row_support(TableFamily f, std::int64_t i);

/// p-adic order of v; std::nullopt encodes +infinity (v == 0).
std::optional<std::int64_t> padic_order(const Int& v, unsigned long p = 3);

/// Names accepted by verify_valuation_bounds, in report order:
/// x-order-bounds, x-column1-refined, ab-order-bounds, yzw-order-bounds,
/// m-vanishing.
const std::vector<std::string>& valuation_audit_ids();

/// Audit one family of asserted 3-adic lower bounds (or, for m-vanishing,
/// the vanishing pattern recomputed without the vanishing shortcut) over
/// i <= i_max, j <= j_max, k <= k_max.  Violations carry witnesses with
/// n = 1000*i + j for cell (i,j); audits spanning several tables
/// (ab-order-bounds: a,b; yzw-order-bounds: y,z,w) use
/// n = t*1000000 + 1000*i + j where t is the table's 1-based position in
/// that list.
VerificationReport verify_valuation_bounds(const std::string& audit_id,
                                           std::int64_t i_max = 24,
                                           std::int64_t j_max = 8,
                                           std::int64_t k_max = 4);

}  // namespace qfrob
