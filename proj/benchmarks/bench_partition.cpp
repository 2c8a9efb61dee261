#include <benchmark/benchmark.h>

#include "partpoly/partition.hpp"
#include "partpoly/sum_structure.hpp"

namespace {

void BM_PartitionCount(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partpoly::partition_count(n));
}
BENCHMARK(BM_PartitionCount)->Arg(60)->Arg(200)->Arg(1000);

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& x : partpoly::enumerate_partitions(n)) count += x.multiset().size();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_AscendingVisitor(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    partpoly::for_each_ascending_partition(n, [&](std::span<const std::uint32_t> parts) { count += parts.size(); });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_AscendingVisitor)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_IsKnapsackAll(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto all = [&] {
    std::vector<partpoly::Partition> out;
    for (const auto& x : partpoly::enumerate_partitions(n)) out.push_back(x);
    return out;
  }();
  for (auto _ : state) {
    std::size_t k = 0;
    for (const auto& x : all) k += partpoly::is_knapsack(x);
    benchmark::DoNotOptimize(k);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * all.size()));
}
BENCHMARK(BM_IsKnapsackAll)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);

}  // namespace
