#include <benchmark/benchmark.h>

#include "partpoly/vertex_lab.hpp"

namespace {

void BM_KnapsackCount(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::knapsack_count(n));
}
BENCHMARK(BM_KnapsackCount)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_VertexTest(benchmark::State& state) {
  const auto x = partpoly::Partition::parse("7+8+9+12");
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::is_vertex(x).is_vertex);
}
BENCHMARK(BM_VertexTest)->Unit(benchmark::kMicrosecond);

void BM_VertexCount(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::vertex_count(n));
}
BENCHMARK(BM_VertexCount)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);

void BM_XiIndexExact(benchmark::State& state) {
  const auto x = partpoly::Partition::parse("7+8+9+12");
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::xi_index(x, true).k);
}
BENCHMARK(BM_XiIndexExact)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::census(n, partpoly::CensusMode::Full).v);
}
BENCHMARK(BM_Census)->Arg(24)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
