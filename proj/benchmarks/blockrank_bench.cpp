#include <benchmark/benchmark.h>

#include "blockrank/blocks.hpp"
#include "blockrank/engine.hpp"
#include "blockrank/generators.hpp"
#include "blockrank/linalg.hpp"

using namespace blockrank;

namespace {

WeightedDigraph sample(Family f, std::size_t n, std::uint64_t seed = 7) {
  GenSpec spec;
  spec.family = f;
  spec.n = n;
  spec.seed = seed;
  return gen(spec);
}

void BM_DirectRank(benchmark::State& state) {
  const RationalMatrix a = sample(Family::RandomDigraph, state.range(0)).adjacency_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(rank_of(a));
}
BENCHMARK(BM_DirectRank)->RangeMultiplier(2)->Range(8, 128);

void BM_Decompose(benchmark::State& state) {
  const WeightedDigraph g = sample(Family::BlockGraph, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(16, 1024);

void BM_RecursiveR2(benchmark::State& state) {
  const WeightedDigraph g = sample(Family::R2Extension, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_recursive(g, {.check_oracle = false}));
}
BENCHMARK(BM_RecursiveR2)->RangeMultiplier(2)->Range(8, 64);

void BM_RecursiveBlockGraph(benchmark::State& state) {
  GenSpec spec;
  spec.family = Family::BlockGraph;
  spec.seed = 3;
  spec.block_sizes.assign(state.range(0), 4);
  const WeightedDigraph g = gen(spec);
  for (auto _ : state) benchmark::DoNotOptimize(rank_recursive(g, {.check_oracle = false}));
}
BENCHMARK(BM_RecursiveBlockGraph)->RangeMultiplier(2)->Range(2, 16);

void BM_RecursiveSmall(benchmark::State& state) {
  const WeightedDigraph g = sample(Family::RandomDigraph, 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(rank_recursive(g, {.check_oracle = false}));
}
BENCHMARK(BM_RecursiveSmall);

}  // namespace
BENCHMARK_MAIN();
