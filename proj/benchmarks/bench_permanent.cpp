#include <benchmark/benchmark.h>

#include "reconfrel/flexibility.hpp"

namespace {

using namespace reconfrel;

ResourceMatrix all_ones(int m, int n) {
  ResourceMatrix b;
  b.m = m;
  b.n = n;
  b.row_mask.assign(m, (std::uint64_t{1} << n) - 1);
  return b;
}

void BM_PermanentAllOnes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto b = all_ones(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(b));
}
BENCHMARK(BM_PermanentAllOnes)->DenseRange(8, 16, 2);

void BM_EnumeratePathsFourCore(benchmark::State& state) {
  auto b = all_ones(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_paths(b));
}
BENCHMARK(BM_EnumeratePathsFourCore);

}  // namespace

BENCHMARK_MAIN();
