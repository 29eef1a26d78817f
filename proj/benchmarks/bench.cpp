// Microbenchmarks for the hot paths: Hochster tables, duals, homology,
// chordality, and the reduction driver. Sizes are chosen so a full run
// stays under a minute on one core.

#include <benchmark/benchmark.h>

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cmreg/betti.hpp"
#include "cmreg/graph.hpp"
#include "cmreg/homology.hpp"
#include "cmreg/ideal.hpp"
#include "cmreg/reduction.hpp"

namespace {

using namespace cmreg;

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return Graph::from_edges(n, edges);
}

Graph random_graph(std::uint64_t seed, int n, int percent) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng() % 100 < static_cast<std::uint64_t>(percent)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

SquarefreeIdeal random_equigenerated(std::uint64_t seed, int n, int degree, int count) {
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> masks;
  while (static_cast<int>(masks.size()) < count) {
    std::uint64_t mask = 0;
    while (std::popcount(mask) < degree) mask |= std::uint64_t{1} << (rng() % n);
    masks.insert(mask);
  }
  return SquarefreeIdeal::from_masks(
      n, std::vector<std::uint64_t>(masks.begin(), masks.end()));
}

void BM_BettiTableCycle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SquarefreeIdeal ideal = edge_ideal(complement(cycle(n)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal, FieldSpec::rationals()));
}
BENCHMARK(BM_BettiTableCycle)->DenseRange(6, 12, 2);

void BM_BettiTableRandom(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SquarefreeIdeal ideal = edge_ideal(complement(random_graph(7, n, 50)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal, FieldSpec::prime(2)));
}
BENCHMARK(BM_BettiTableRandom)->DenseRange(6, 10, 2);

void BM_AlexanderDual(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SquarefreeIdeal ideal = random_equigenerated(11, n, 3, 3 * n);
  for (auto _ : state) benchmark::DoNotOptimize(alexander_dual(ideal));
}
BENCHMARK(BM_AlexanderDual)->DenseRange(10, 18, 4);

void BM_ReducedHomologyCliqueComplex(benchmark::State& state) {
  SimplicialComplex complex = clique_complex(random_graph(13, 10, 40));
  for (auto _ : state)
    benchmark::DoNotOptimize(reduced_homology(complex, FieldSpec::rationals()));
}
BENCHMARK(BM_ReducedHomologyCliqueComplex);

void BM_IsChordal(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(17, n, 30);
  for (auto _ : state) benchmark::DoNotOptimize(is_chordal(g));
}
BENCHMARK(BM_IsChordal)->DenseRange(20, 60, 20);

void BM_RegularityViaReduction(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = cycle(n);
  for (auto _ : state) benchmark::DoNotOptimize(regularity_via_reduction(g));
}
BENCHMARK(BM_RegularityViaReduction)->DenseRange(8, 16, 4);

}  // namespace

BENCHMARK_MAIN();
