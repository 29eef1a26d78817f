#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "cmreg/betti.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/graph.hpp"
#include "cmreg/homology.hpp"
#include "cmreg/ideal.hpp"
#include "support/oracles.hpp"

using namespace cmreg;
using tests::complete_graph;
using tests::cycle_graph;
using tests::koszul_betti;
using tests::path_graph;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SquarefreeIdeal random_ideal(std::mt19937_64& rng, int n, int max_gens) {
  std::vector<std::uint64_t> masks;
  const std::uint64_t pool = (std::uint64_t{1} << n) - 1;
  int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gens));
  for (int i = 0; i < count; ++i) {
    std::uint64_t mask = rng() & pool;
    if (mask != 0) masks.push_back(mask);
  }
  if (masks.empty()) masks.push_back(1);
  return SquarefreeIdeal::from_masks(n, masks);
}

SquarefreeIdeal random_degree2_ideal(std::mt19937_64& rng, int n) {
  std::vector<std::uint64_t> masks;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng() & 1)
        masks.push_back((std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (v - 1)));
  if (masks.empty()) masks.push_back(3);
  return SquarefreeIdeal::from_masks(n, masks);
}

}  // namespace

TEST_CASE("golden table: circuit ideal of the 4-cycle") {
  auto ideal = edge_ideal(complement(cycle_graph(4)));
  auto table = betti_table(ideal, kQ);
  std::map<std::pair<int, int>, long long> expected{{{0, 2}, 2}, {{1, 4}, 1}};
  CHECK(table.entries == expected);
  CHECK(table.regularity() == 3);
  CHECK(table.projective_dimension() == 1);
  CHECK(table.at(0, 2) == 2);
  CHECK(table.at(2, 3) == 0);

  // same table over GF(2)
  CHECK(betti_table(ideal, FieldSpec::prime(2)).entries == expected);

  auto report = invariant_report(ideal, kQ);
  CHECK(report.reg == 3);
  CHECK(report.pd_ideal == 1);
  CHECK(report.depth_quotient == 2);
  CHECK(report.dim_quotient == 2);
  CHECK(report.is_cohen_macaulay);
  CHECK(report.linear == LinearStatus::not_linear);
}

TEST_CASE("golden table: circuit ideal of the 5-cycle") {
  auto ideal = edge_ideal(complement(cycle_graph(5)));
  auto table = betti_table(ideal, kQ);
  std::map<std::pair<int, int>, long long> expected{
      {{0, 2}, 5}, {{1, 3}, 5}, {{2, 5}, 1}};
  CHECK(table.entries == expected);
  CHECK(table.regularity() == 3);
  CHECK(table.projective_dimension() == 2);

  // the complement of the 5-cycle is again a 5-cycle, whose smallest vertex
  // cover has size 3, so dim = 5 - 3 = depth
  auto report = invariant_report(ideal, kQ);
  CHECK(report.depth_quotient == 2);
  CHECK(report.dim_quotient == 2);
  CHECK(report.is_cohen_macaulay);
}

TEST_CASE("golden table: edge ideal of the 4-cycle is linear") {
  auto ideal = edge_ideal(cycle_graph(4));
  auto table = betti_table(ideal, kQ);
  std::map<std::pair<int, int>, long long> expected{
      {{0, 2}, 4}, {{1, 3}, 4}, {{2, 4}, 1}};
  CHECK(table.entries == expected);
  CHECK(table.regularity() == 2);
  CHECK(linear_resolution_status(table) == LinearStatus::linear);
  CHECK(has_linear_resolution(ideal, kQ));

  auto report = invariant_report(ideal, kQ);
  CHECK(report.depth_quotient == 1);
  CHECK(report.dim_quotient == 2);
}

TEST_CASE("golden table: the maximal ideal resolves by the koszul complex") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<int>> supports;
    for (int v = 1; v <= n; ++v) supports.push_back({v});
    auto ideal = SquarefreeIdeal::from_supports(n, supports);
    auto table = betti_table(ideal, kQ);
    for (int i = 0; i < n; ++i) CHECK(table.at(i, i + 1) == binomial(n, i + 1));
    CHECK(table.regularity() == 1);
    CHECK(table.projective_dimension() == n - 1);
  }
}

TEST_CASE("principal ideals have one betti number") {
  auto ideal = SquarefreeIdeal::from_supports(4, {{1, 2}});
  auto table = betti_table(ideal, kQ);
  std::map<std::pair<int, int>, long long> expected{{{0, 2}, 1}};
  CHECK(table.entries == expected);
  CHECK(has_linear_resolution(ideal, kQ));
}

TEST_CASE("betti table preconditions") {
  CHECK_THROWS_AS(betti_table(SquarefreeIdeal::zero(3), kQ), zero_ideal_error);
  CHECK_THROWS_AS(betti_table(SquarefreeIdeal::from_supports(17, {{1}}), kQ),
                  std::invalid_argument);
}

TEST_CASE("hochster tables match the koszul oracle") {
  std::mt19937_64 rng(307);
  const std::vector<FieldSpec> fields{kQ, FieldSpec::prime(2), FieldSpec::prime(3)};
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);  // up to 6 variables
    auto ideal = random_ideal(rng, n, 5);
    const FieldSpec& field = fields[trial % fields.size()];
    CHECK(betti_table(ideal, field).entries == koszul_betti(ideal, field));
  }
}

TEST_CASE("circuit ideals match the koszul oracle too") {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    if (is_complete(g)) continue;
    auto ideal = edge_ideal(complement(g));
    FieldSpec field = (trial % 2) ? FieldSpec::prime(2) : kQ;
    CHECK(betti_table(ideal, field).entries == koszul_betti(ideal, field));
  }
}

TEST_CASE("linear resolution status") {
  auto mixed = SquarefreeIdeal::from_supports(4, {{1}, {2, 3, 4}});
  CHECK(linear_resolution_status(betti_table(mixed, kQ)) == LinearStatus::mixed_degrees);
  CHECK_THROWS_AS(has_linear_resolution(mixed, kQ), mixed_degree_error);

  CHECK(!has_linear_resolution(edge_ideal(complement(cycle_graph(4))), kQ));
  CHECK(has_linear_resolution(edge_ideal(path_graph(3)), kQ));
}

TEST_CASE("eagon-reiner equivalence on curated examples") {
  // non-linear circuit ideal of C_4: dual side must fail Cohen-Macaulayness
  CHECK(check_eagon_reiner(edge_ideal(complement(cycle_graph(4))), kQ));
  // linear side: K_4 minus an edge has principal circuit ideal
  Graph k4_minus = Graph::from_edges(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(check_eagon_reiner(edge_ideal(complement(k4_minus)), kQ));
  // the maximal ideal: 1-linear, dual is principal
  CHECK(check_eagon_reiner(SquarefreeIdeal::from_supports(3, {{1}, {2}, {3}}), kQ));
}

TEST_CASE("terai identity on curated examples") {
  CHECK(check_terai(edge_ideal(complement(cycle_graph(4))), kQ));
  CHECK(check_terai(edge_ideal(complement(cycle_graph(5))), kQ));
  CHECK(check_terai(edge_ideal(cycle_graph(4)), kQ));

  // x1 divides every generator: dim S/I = n-1 breaks the hypothesis
  auto star = SquarefreeIdeal::from_supports(3, {{1, 2}, {1, 3}});
  CHECK_THROWS_AS(check_terai(star, kQ), not_applicable_error);
}

TEST_CASE("regularity equals ambient minus dual depth in degree two") {
  std::mt19937_64 rng(313);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);  // 3..7
    auto ideal = random_degree2_ideal(rng, n);
    int reg = regularity(ideal, kQ);
    int dual_depth = depth_quotient(alexander_dual(ideal), kQ);
    CHECK(reg == n - dual_depth);
  }
}

TEST_CASE("zeroth betti numbers count the generators") {
  std::mt19937_64 rng(317);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto ideal = random_ideal(rng, n, 6);
    auto table = betti_table(ideal, kQ);
    long long found = 0;
    std::map<int, long long> by_degree;
    for (const auto& [key, value] : table.entries)
      if (key.first == 0) {
        found += value;
        by_degree[key.second] += value;
      }
    CHECK(found == ideal.generator_count());
    for (const auto& mask : ideal.generator_masks())
      CHECK(by_degree[std::popcount(mask)] > 0);
  }
}

TEST_CASE("depth never exceeds dimension") {
  std::mt19937_64 rng(331);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto ideal = random_ideal(rng, n, 5);
    auto report = invariant_report(ideal, kQ);
    CHECK(report.depth_quotient <= report.dim_quotient);
    CHECK(report.is_cohen_macaulay == (report.depth_quotient == report.dim_quotient));
  }
}

TEST_CASE("betti monotonicity under induced subgraphs") {
  // dropping a vertex of C_5 leaves P_4
  CHECK(betti_monotonicity_check(cycle_graph(5), VertexSet::of({1, 2, 3, 4}), kQ));
  std::mt19937_64 rng(337);
  int ran = 0;
  while (ran < 60) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    if (is_complete(g)) continue;
    std::uint64_t w = rng() & ((std::uint64_t{1} << n) - 1);
    if (std::popcount(w) < 2) continue;
    if (is_complete(induced_subgraph(g, VertexSet(w)))) continue;
    ++ran;
    CHECK(betti_monotonicity_check(g, VertexSet(w), kQ));
  }
}

TEST_CASE("large prime fields agree with the rationals at small scale") {
  std::mt19937_64 rng(347);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto ideal = random_ideal(rng, n, 5);
    CHECK(betti_table(ideal, kQ).entries ==
          betti_table(ideal, FieldSpec::prime(32003)).entries);
  }
}
