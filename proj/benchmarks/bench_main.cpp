#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "dcsum/appell.hpp"
#include "dcsum/audit.hpp"
#include "dcsum/sums.hpp"
#include "dcsum/umbral.hpp"

namespace {

void BM_EulerNumbersFresh(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    dcsum::SequenceCache cache;
    benchmark::DoNotOptimize(cache.euler(n));
  }
}
BENCHMARK(BM_EulerNumbersFresh)->Arg(10)->Arg(30)->Arg(60);

void BM_DcSum(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dcsum::dc_sum(5, k - 2, k));
}
BENCHMARK(BM_DcSum)->Arg(15)->Arg(101)->Arg(1001);

void BM_DedekindSum(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dcsum::dedekind_sum(k - 2, k));
}
BENCHMARK(BM_DedekindSum)->Arg(101)->Arg(1001);

void BM_Theorem9Rhs(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dcsum::theorem9_rhs(7, 3, k));
}
BENCHMARK(BM_Theorem9Rhs)->Arg(7)->Arg(31);

void BM_FullSweep(benchmark::State& state) {
  dcsum::audit::ParamGrid grid;
  grid.p = {3, 7};
  grid.odd_only = true;
  grid.coprime_only = true;
  const auto ids = dcsum::audit::registry_ids();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dcsum::audit::sweep(ids, grid, {static_cast<unsigned>(state.range(0))}));
  }
}
BENCHMARK(BM_FullSweep)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
