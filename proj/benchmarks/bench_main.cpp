#include <benchmark/benchmark.h>

#include "zetalab/critical_line.hpp"
#include "zetalab/sieve.hpp"
#include "zetalab/zeta.hpp"

namespace {

void BM_ZetaEval(benchmark::State& state) {
  const zetalab::Complex s(0.5, double(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(zetalab::zeta_eval(s));
}
BENCHMARK(BM_ZetaEval)->Arg(14)->Arg(100)->Arg(1000);

void BM_SieveSegment(benchmark::State& state) {
  const int64_t n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(zetalab::sieve_build(1, n));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SieveSegment)->Arg(100'000)->Arg(1'000'000);

void BM_ZeroScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zetalab::scan_zeros(10.0, 50.0, 0.05, 1e-9));
}
BENCHMARK(BM_ZeroScan);

}  // namespace

BENCHMARK_MAIN();
