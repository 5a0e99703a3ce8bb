// Microbenchmarks for the hot paths: dense series multiplication and
// inversion, Euler products, eta-quotient compilation, lattice-theta
// enumeration, and the combinatorial array counter.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qfrob/frobenius.hpp"
#include "qfrob/series.hpp"
#include "qfrob/theta.hpp"

using namespace qfrob;

namespace {

LaurentSeries dense_series(std::int64_t n, std::uint64_t seed,
                           bool unit_lead) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff_d(-99, 99);
  std::vector<Int> cs;
  cs.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) cs.emplace_back(coeff_d(rng));
  if (unit_lead) cs[0] = 1;
  return LaurentSeries::from_coeffs(0, n, std::move(cs));
}

void BM_SeriesMul(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const LaurentSeries a = dense_series(n, 1, false);
  const LaurentSeries b = dense_series(n, 2, false);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesMul)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_SeriesInvert(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const LaurentSeries a = dense_series(n, 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesInvert)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_EulerProduct(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(euler_product(1, n));
}
BENCHMARK(BM_EulerProduct)->Arg(1024)->Arg(16384);

void BM_PartitionSeries(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const LaurentSeries e1 = euler_product(1, n);
  for (auto _ : state) benchmark::DoNotOptimize(invert(e1));
}
BENCHMARK(BM_PartitionSeries)->Arg(1024)->Arg(4096);

void BM_EtaQuotientCompile(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  // The heaviest single quotient in the catalog routes: E3^8 / E1^9.
  for (auto _ : state)
    benchmark::DoNotOptimize(eta_quotient({{3, 8}, {1, -9}}, 1, 1, n));
}
BENCHMARK(BM_EtaQuotientCompile)->Arg(1000)->Arg(4000);

void BM_ThetaLatticeDim2(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(theta_lattice(3, n));
}
BENCHMARK(BM_ThetaLatticeDim2)->Arg(500)->Arg(2000);

void BM_ThetaLatticeDim8(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(theta_lattice(9, n));
}
BENCHMARK(BM_ThetaLatticeDim8)->Arg(30)->Arg(60);

void BM_EnumerateThreeColored(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cphi(3, n));
}
BENCHMARK(BM_EnumerateThreeColored)->Arg(8)->Arg(12);

void BM_EnumerateNineColored(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cphi(9, n));
}
BENCHMARK(BM_EnumerateNineColored)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
