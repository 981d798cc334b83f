#include <benchmark/benchmark.h>

#include "ptlab/counting.hpp"
#include "ptlab/decomposition.hpp"
#include "ptlab/gadgets.hpp"
#include "ptlab/generators.hpp"
#include "ptlab/packing.hpp"
#include "ptlab/recognizers.hpp"
#include "ptlab/testers.hpp"

using namespace ptlab;

static void BM_CountTriangles(benchmark::State& state) {
  RngStream rng(1);
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_triangles(g));
}
BENCHMARK(BM_CountTriangles)->Arg(64)->Arg(256)->Arg(1024);

static void BM_CountInducedP3(benchmark::State& state) {
  RngStream rng(2);
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_induced_p3(g));
}
BENCHMARK(BM_CountInducedP3)->Arg(32)->Arg(64)->Arg(128);

static void BM_IsCograph(benchmark::State& state) {
  RngStream rng(3);
  const Graph g = random_cograph(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_cograph(g).member);
}
BENCHMARK(BM_IsCograph)->Arg(64)->Arg(512);

static void BM_ComparabilityForcing(benchmark::State& state) {
  const Graph g = complete_bipartite(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_comparability(g).member);
}
BENCHMARK(BM_ComparabilityForcing)->Arg(16)->Arg(64);

static void BM_ExactTrianglePacking(benchmark::State& state) {
  RngStream rng(4);
  const Graph g = gnp(12, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_packing(g, PackingMode::Exact).size());
}
BENCHMARK(BM_ExactTrianglePacking);

static void BM_ExactBetaCut(benchmark::State& state) {
  RngStream rng(5);
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_beta_cut(g, 0.2, SearchMode::Exact, rng).found());
}
BENCHMARK(BM_ExactBetaCut)->Arg(10)->Arg(16);

static void BM_RsGraph(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  const ApFreeSet s = ap3_free_set(k, ApMode::Exact);
  for (auto _ : state) benchmark::DoNotOptimize(rs_graph(k, s).order());
}
BENCHMARK(BM_RsGraph)->Arg(20)->Arg(40);

static void BM_UniversalTrial(benchmark::State& state) {
  const GadgetBundle rs = rs_graph(20, ap3_free_set(20, ApMode::Exact));
  TesterConfig c;
  c.budget = static_cast<std::size_t>(state.range(0));
  c.property = Property::Comparability;
  RngStream rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(run_tester(rs.undirected(), c, rng).reject);
}
BENCHMARK(BM_UniversalTrial)->Arg(10)->Arg(30);
BENCHMARK_MAIN();
