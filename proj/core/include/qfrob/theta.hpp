#pragma once

// The cubic theta function a(q) (Lambert-series construction) and the
// (k-1)-dimensional lattice theta series
//   sum over m in Z^{k-1} of q^{Q(m)},
//   Q(m) = sum_i m_i^2 + sum_{i<j} m_i m_j,
// which together give an eta-quotient-free route to the colored Frobenius
// generating functions.

#include <cstdint>
#include <stdexcept>

#include "qfrob/series.hpp"

namespace qfrob {

/// A lattice enumeration (or combinatorial enumeration) would exceed the
/// configured work budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultLatticeBudget = 100'000'000;

/// a(q) = 1 + 6 sum_{n>=0} (q^{3n+1}/(1-q^{3n+1}) - q^{3n+2}/(1-q^{3n+2})),
/// expanded exactly to N coefficients by geometric expansion of each term.
LaurentSeries borwein_a(std::int64_t N);

/// The quadratic form Q above in dim = k-1 variables.  Positive definite:
/// 2Q(m) = (sum m_i)^2 + sum m_i^2.
Int lattice_form_q(const std::vector<std::int64_t>& m);

/// Theta series of Q truncated at N: coefficient of q^t counts lattice
/// vectors with Q(m) = t < N.  k = 1 gives the constant series 1.
/// Enumeration is recursive, coordinate by coordinate, pruned with the bound
/// 2Q >= (partial sum of squares) + (partial sum)^2 / (remaining dims + 1);
/// the visit order is deterministic.  Throws BudgetExceededError when more
/// than `budget` lattice points would be visited.
LaurentSeries theta_lattice(std::int64_t k, std::int64_t N,
                            std::int64_t budget = kDefaultLatticeBudget);

}  // namespace qfrob
