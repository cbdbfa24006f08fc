#include <benchmark/benchmark.h>

#include "reconfrel/model.hpp"
#include "reconfrel/statespace.hpp"

namespace {

using namespace reconfrel;

SystemModel full_cores(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 1));
  return model_from_matrix(rows);
}

void BM_LevelTableFourCore(benchmark::State& state) {
  auto model = full_cores(4);
  for (auto _ : state) benchmark::DoNotOptimize(level_table(model));
}
BENCHMARK(BM_LevelTableFourCore);

void BM_MonteCarloDualCore(benchmark::State& state) {
  auto model = full_cores(2);
  auto probs = model.uniform_probabilities(Rat(99, 100));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        monte_carlo_reliability(model, probs, state.range(0), 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloDualCore)->Arg(100'000);

}  // namespace
