#include <benchmark/benchmark.h>

#include "reconfrel/boolengine.hpp"
#include "reconfrel/model.hpp"

namespace {

using namespace reconfrel;

void BM_OrthogonalizeFourCore(benchmark::State& state) {
  std::vector<std::vector<int>> rows(4, std::vector<int>(4, 1));
  auto model = model_from_matrix(rows);
  auto dnf = build_operability_dnf(enumerate_paths(model), model);
  for (auto _ : state) benchmark::DoNotOptimize(orthogonalize(dnf));
}
BENCHMARK(BM_OrthogonalizeFourCore);

}  // namespace
