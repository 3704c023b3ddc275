// Hot paths over the structured generators. Graphs are built once per
// benchmark; distance memoization inside Graph means later iterations
// measure the algorithm, not BFS.

#include <benchmark/benchmark.h>

#include "treelike/end_flow.hpp"
#include "treelike/generators.hpp"
#include "treelike/halfspace.hpp"
#include "treelike/median.hpp"
#include "treelike/pocset.hpp"
#include "treelike/tree_extract.hpp"

using namespace treelike;

static void BM_median_recognition_grid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = grid_graph(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(check_median(g));
  state.SetComplexityN(n * n);
}
BENCHMARK(BM_median_recognition_grid)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Complexity();

static void BM_median_recognition_hypercube(benchmark::State& state) {
  Graph g = hypercube_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_median(g));
}
BENCHMARK(BM_median_recognition_hypercube)->Arg(4)->Arg(6)->Arg(8);

static void BM_arrangement_build(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MedianGraph m = MedianGraph::assume_median(grid_graph(n, n));
  for (auto _ : state) benchmark::DoNotOptimize(Arrangement::build(m));
}
BENCHMARK(BM_arrangement_build)->Arg(8)->Arg(16)->Arg(24);

static void BM_spanning_tree_extraction(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Arrangement arr = Arrangement::build(MedianGraph::assume_median(grid_graph(n, n)));
  for (auto _ : state) {
    HalfspaceColoring coloring = color_halfspaces(arr);
    benchmark::DoNotOptimize(extract_spanning_tree(arr, coloring));
  }
}
BENCHMARK(BM_spanning_tree_extraction)->Arg(8)->Arg(16);

static void BM_separating_halfspaces_all_pairs(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Arrangement arr = Arrangement::build(MedianGraph::assume_median(grid_graph(n, n)));
  int v = arr.graph().vertex_count();
  for (auto _ : state) {
    long total = 0;
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y) total += static_cast<long>(separating_halfspaces(arr, x, y).size());
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_separating_halfspaces_all_pairs)->Arg(8)->Arg(12);

static void BM_wall_dual_chain(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<Bitset> walls;
  for (int t = 1; t < n; ++t) {
    Bitset w(n);
    for (int i = 0; i < t; ++i) w.set(i);
    walls.push_back(w);
  }
  Walling w = Walling::close(n, walls);
  for (auto _ : state) benchmark::DoNotOptimize(wall_dual(w));
}
BENCHMARK(BM_wall_dual_chain)->Arg(8)->Arg(64)->Arg(256);

static void BM_flow_forest_grid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Arrangement arr = Arrangement::build(MedianGraph::assume_median(grid_graph(n, n)));
  EndTarget u = principal_target(arr, arr.graph().vertex_count() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(flow_forest(arr, u));
}
BENCHMARK(BM_flow_forest_grid)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
