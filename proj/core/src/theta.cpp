#include "qfrob/theta.hpp"

#include <cmath>
#include <vector>

namespace qfrob {

LaurentSeries borwein_a(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("borwein_a requires N >= 1");
  std::vector<Int> c(static_cast<std::size_t>(N));
  c[0] = 1;
  // q^d/(1-q^d) = q^d + q^{2d} + ... for d = 3n+1 (weight +6) and d = 3n+2
  // (weight -6).
  for (std::int64_t d = 1; d < N; ++d) {
    int w = (d % 3 == 1) ? 6 : (d % 3 == 2) ? -6 : 0;
    if (w == 0) continue;
    for (std::int64_t e = d; e < N; e += d) c[static_cast<std::size_t>(e)] += w;
  }
  return LaurentSeries::from_coeffs(0, N, std::move(c));
}

Int lattice_form_q(const std::vector<std::int64_t>& m) {
  // 2Q = (sum m_i)^2 + sum m_i^2, always even.
  std::int64_t s = 0;
  Int t = 0;
  for (std::int64_t x : m) {
    s += x;
    t += Int(x) * x;
  }
  Int two_q = Int(s) * s + t;
  return two_q / 2;
}

namespace {

struct LatticeEnum {
  std::int64_t two_n;           // enumerate points with 2Q < two_n
  std::int64_t budget;
  std::int64_t visited = 0;
  std::vector<long>* counts;  // counts[t] += 1 for Q = t

  // Recurse over coordinates; `t` = sum of squares so far, `s` = coordinate
  // sum so far, `dims_left` coordinates still to choose.
  void run(std::int64_t t, std::int64_t s, std::int64_t dims_left) {
    if (dims_left == 0) {
      std::int64_t two_q = t + s * s;
      if (two_q < two_n) ++(*counts)[static_cast<std::size_t>(two_q / 2)];
      return;
    }
    // Any completion satisfies 2Q >= t + s^2/(dims_left+1): the remaining
    // coordinates can reduce the square of the running sum by at most that
    // factor while paying for their own squares.
    std::int64_t bound = std::int64_t(std::ceil(std::sqrt(double(two_n)))) + 2;
    for (std::int64_t x = -bound; x <= bound; ++x) {
      std::int64_t t2 = t + x * x;
      if (t2 >= two_n) continue;
      std::int64_t s2 = s + x;
      if (t2 + s2 * s2 / dims_left >= two_n) continue;
      if (++visited > budget)
        throw BudgetExceededError("lattice enumeration budget exceeded");
      run(t2, s2, dims_left - 1);
    }
  }
};

}  // namespace

LaurentSeries theta_lattice(std::int64_t k, std::int64_t N,
                            std::int64_t budget) {
  if (k < 1) throw std::invalid_argument("theta_lattice requires k >= 1");
  if (N < 1) throw std::invalid_argument("theta_lattice requires N >= 1");
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  std::vector<long> counts(static_cast<std::size_t>(N), 0);
  LatticeEnum e{2 * N, budget, 0, &counts};
  e.run(0, 0, k - 1);
  std::vector<Int> c;
  c.reserve(counts.size());
  for (long v : counts) c.emplace_back(v);
  return LaurentSeries::from_coeffs(0, N, std::move(c));
}

}  // namespace qfrob
