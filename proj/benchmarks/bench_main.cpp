#include <benchmark/benchmark.h>

#include <random>

#include "mimick/bounds.hpp"
#include "mimick/mimicking.hpp"
#include "mimick/random_graphs.hpp"
#include "mimick/tree.hpp"

namespace {

mimick::CapGraph sample_graph(std::size_t n, std::size_t k) {
  std::mt19937_64 rng(n * 131 + k);
  mimick::RandomGraphSpec spec;
  spec.vertices = n;
  spec.terminals = k;
  spec.max_cap = 100;
  return mimick::random_connected_graph(rng, spec);
}

void BM_MinTerminalCut(benchmark::State& state) {
  auto g = sample_graph(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(mimick::min_terminal_cut(g, mimick::TerminalSubset(0b011)));
}
BENCHMARK(BM_MinTerminalCut)->Arg(16)->Arg(64)->Arg(256);

void BM_BuildMimickingNetwork(benchmark::State& state) {
  auto g = sample_graph(64, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mimick::build_mimicking_network(g));
}
BENCHMARK(BM_BuildMimickingNetwork)->DenseRange(3, 7);

void BM_TreeToCactus(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto t = mimick::random_tree(rng, static_cast<std::size_t>(state.range(0)), 12, 1, 50);
  for (auto _ : state) benchmark::DoNotOptimize(mimick::y_delta_reduce(mimick::ternarize(t)));
}
BENCHMARK(BM_TreeToCactus)->Arg(60)->Arg(600);

void BM_CommonElementAntichains(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mimick::count_common_element_antichains(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CommonElementAntichains)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();
