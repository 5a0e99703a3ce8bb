// Tests for the Lambert-series expansion of the cubic theta function and
// the lattice-theta enumeration, including their agreement (the
// two-dimensional lattice form is exactly the cubic theta form).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qfrob/theta.hpp"

using namespace qfrob;

TEST_CASE("cubic theta coefficients count divisors by residue class") {
  // coeff(n) = 6 * (#divisors of n that are 1 mod 3 minus #divisors that
  // are 2 mod 3) for n >= 1, and 1 at n = 0.
  const LaurentSeries a = borwein_a(14);
  const std::vector<int> heads = {1, 6, 0, 6, 6, 0, 0, 12, 0, 6, 0, 0, 6, 12};
  REQUIRE(a.trunc() == 14);
  for (std::size_t n = 0; n < heads.size(); ++n)
    CHECK(a.coeff(static_cast<std::int64_t>(n)) == heads[n]);
  CHECK(a.valuation() == 0);
  CHECK_THROWS_AS(borwein_a(0), std::invalid_argument);
}

TEST_CASE("the quadratic form doubles to square-of-sum plus sum-of-squares") {
  CHECK(lattice_form_q({}) == 0);
  CHECK(lattice_form_q({2}) == 4);
  CHECK(lattice_form_q({1, -1}) == 1);   // 1 - 1 + 1
  CHECK(lattice_form_q({1, 1}) == 3);    // 1 + 1 + 1
  CHECK(lattice_form_q({1, 1, 1}) == 6); // 3 squares + 3 cross terms
  CHECK(lattice_form_q({3, -2, 1}) == 9); // 2Q = (3-2+1)^2 + (9+4+1) = 18
}

TEST_CASE("lattice theta in zero and one dimensions has closed forms") {
  // k = 1: zero coordinates, only the empty vector.
  const LaurentSeries t1 = theta_lattice(1, 6);
  for (std::int64_t n = 0; n < 6; ++n) CHECK(t1.coeff(n) == (n == 0 ? 1 : 0));
  // k = 2: one coordinate, Q(m) = m^2.
  const LaurentSeries t2 = theta_lattice(2, 10);
  const std::vector<int> squares = {1, 2, 0, 0, 2, 0, 0, 0, 0, 2};
  for (std::size_t n = 0; n < squares.size(); ++n)
    CHECK(t2.coeff(static_cast<std::int64_t>(n)) == squares[n]);
}

TEST_CASE("the two-dimensional lattice theta equals the cubic theta") {
  const std::int64_t N = 60;
  const LaurentSeries lattice = theta_lattice(3, N);
  const LaurentSeries lambert = borwein_a(N);
  for (std::int64_t n = 0; n < N; ++n)
    CHECK(lattice.coeff(n) == lambert.coeff(n));
}

TEST_CASE("lattice enumeration respects its node budget") {
  CHECK_THROWS_AS(theta_lattice(9, 8, 10), BudgetExceededError);
  // A generous budget succeeds on the same call.
  CHECK_NOTHROW(theta_lattice(9, 8, 100'000'000));
  CHECK_THROWS_AS(theta_lattice(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(theta_lattice(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(theta_lattice(3, 5, 0), std::invalid_argument);
}

TEST_CASE("lattice theta coefficients are nonnegative and start at one") {
  for (std::int64_t k = 1; k <= 6; ++k) {
    const LaurentSeries t = theta_lattice(k, 12);
    CHECK(t.coeff(0) == 1);
    for (std::int64_t n = 0; n < 12; ++n) CHECK(t.coeff(n) >= 0);
  }
}
