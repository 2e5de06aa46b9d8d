// Serial reference against OpenMP kernels. Set MCLUSTER_THREADS to cap threads.

#include <benchmark/benchmark.h>

#include "mcluster/complex.hpp"
#include "mcluster/derived.hpp"

using namespace mcluster;

namespace {

RootSystem system_for(int code) {
  static const char* names[] = {"A4", "D5", "E6", "E7"};
  return RootSystem::build(DynkinType::parse(names[code]));
}

Execution mode(int flag) { return flag ? Execution::parallel : Execution::serial; }

void BM_BuildGraph(benchmark::State& state) {
  const auto rs = system_for(static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(1));
  const DerivedCategory derived(rs);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_graph(rs, m, Oracle::categorical, mode(state.range(2)), &derived));
  state.SetLabel(rs.name() + (state.range(2) ? " parallel" : " serial"));
}

void BM_HomTable(benchmark::State& state) {
  const auto rs = system_for(static_cast<int>(state.range(0)));
  std::vector<Representation> reps;
  for (const auto& beta : rs.positive_roots()) reps.push_back(indecomposable_for_root(rs, beta));
  for (auto _ : state) benchmark::DoNotOptimize(compute_hom_table(reps, mode(state.range(1))));
  state.SetLabel(rs.name() + (state.range(1) ? " parallel" : " serial"));
}

void BM_Facets(benchmark::State& state) {
  const auto rs = system_for(static_cast<int>(state.range(0)));
  const auto g = build_graph(rs, static_cast<int>(state.range(1)), Oracle::combinatorial);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_facets(g, mode(state.range(2))));
  state.SetLabel(rs.name() + (state.range(2) ? " parallel" : " serial"));
}

}  // namespace

BENCHMARK(BM_BuildGraph)->ArgsProduct({{0, 1, 2}, {1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomTable)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Facets)->ArgsProduct({{0, 1, 2}, {1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
