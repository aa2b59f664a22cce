// Serial reference versus OpenMP kernels.
#include <benchmark/benchmark.h>

#include "spti/enumeration.hpp"
#include "spti/report.hpp"

namespace {

const std::vector<spti::Graph>& undecanes() {
  static const auto graphs = spti::enumerate_alkane_trees(11).graphs;
  return graphs;
}

void BM_ReportSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spti::index_report_serial(undecanes()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(undecanes().size()));
}

void BM_ReportParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spti::index_report(undecanes()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(undecanes().size()));
}

void BM_CyclicSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spti::enumerate_cyclic_chemical_graphs_serial(n));
}

void BM_CyclicParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spti::enumerate_cyclic_chemical_graphs(n));
}

}  // namespace

BENCHMARK(BM_ReportSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReportParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclicSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclicParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
