#include <benchmark/benchmark.h>

#include "partpoly/corner.hpp"

namespace {

void BM_MinimalSolutions(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::minimal_solutions(q, q - 1).size());
}
BENCHMARK(BM_MinimalSolutions)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_CornerVertexCount(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::corner_vertex_count(q, q - 1));
}
BENCHMARK(BM_CornerVertexCount)->DenseRange(8, 11, 1)->Unit(benchmark::kMillisecond);

}  // namespace
