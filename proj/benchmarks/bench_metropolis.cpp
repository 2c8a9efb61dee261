#include <benchmark/benchmark.h>

#include "partpoly/metropolis.hpp"

namespace {

// The fast m2 path memoizes per n; a single iteration measures the cold call.
void BM_M2Fast(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::metropolis_count(n, 2));
}
BENCHMARK(BM_M2Fast)->Arg(60)->Arg(80)->Arg(100)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_M2Enumerative(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::metropolis_count_enumerative(n, 2));
}
BENCHMARK(BM_M2Enumerative)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_M3Enumerative(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::metropolis_count_enumerative(n, 3));
}
BENCHMARK(BM_M3Enumerative)->Arg(30)->Arg(36)->Unit(benchmark::kMillisecond);

void BM_VertexUpperBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::vertex_upper_bound(77));
}
BENCHMARK(BM_VertexUpperBound)->Iterations(1)->Unit(benchmark::kMillisecond);

}  // namespace
