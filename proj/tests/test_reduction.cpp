#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cmreg/betti.hpp"
#include "cmreg/graph.hpp"
#include "cmreg/ideal.hpp"
#include "cmreg/reduction.hpp"
#include "support/oracles.hpp"

using namespace cmreg;
using tests::complete_graph;
using tests::cycle_graph;
using tests::path_graph;
using tests::petersen_graph;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

std::vector<ReductionRule> rules_of(const ReductionTrace& trace) {
  std::vector<ReductionRule> out;
  for (const auto& step : trace.steps) out.push_back(step.rule);
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/** Intersection graphs of random integer intervals. Always chordal. */
Graph random_interval_graph(std::mt19937_64& rng, int n) {
  std::vector<std::pair<long long, long long>> spans;
  for (int i = 0; i < n; ++i) {
    long long l = static_cast<long long>(rng() % 1000);
    spans.emplace_back(l, l + 1 + static_cast<long long>(rng() % 300));
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (spans[u - 1].first <= spans[v - 1].second &&
          spans[v - 1].first <= spans[u - 1].second)
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Two squares glued along the edge {3,4}; the smallest clique separator has
// size two and neither side is complete.
Graph glued_squares() {
  return Graph::from_edges(
      6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}, {5, 6}, {3, 6}});
}

// Triangular prism: no simplicial vertex, 3-regular, no clique separator.
Graph prism() {
  return Graph::from_edges(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6},
                               {1, 4}, {2, 5}, {3, 6}});
}

Graph bowtie() {
  return Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
}

}  // namespace

TEST_CASE("paths collapse to the complete-remainder base") {
  auto outcome = regularity_via_reduction(path_graph(3));
  CHECK(outcome.reg == 2);
  REQUIRE(outcome.trace.steps.size() == 1);
  CHECK(outcome.trace.steps[0].rule == ReductionRule::base_complete_minus_simplicial);
  CHECK(outcome.trace.steps[0].v == 1);
  CHECK(outcome.trace.flags.empty());

  // the claw loses a leaf first
  Graph claw = Graph::from_edges(4, {{1, 4}, {2, 4}, {3, 4}});
  auto claw_outcome = regularity_via_reduction(claw);
  CHECK(claw_outcome.reg == 2);
  CHECK(rules_of(claw_outcome.trace) ==
        std::vector<ReductionRule>{ReductionRule::remove_simplicial,
                                   ReductionRule::base_complete_minus_simplicial});
}

TEST_CASE("long cycles smooth down to the square") {
  auto outcome = regularity_via_reduction(cycle_graph(7), {.verify = true});
  CHECK(outcome.reg == 3);
  CHECK(outcome.consistent);
  REQUIRE(outcome.trace.steps.size() == 4);
  CHECK(outcome.trace.input == emit_graph6(cycle_graph(7)));

  for (int i = 0; i < 3; ++i) {
    const auto& step = outcome.trace.steps[static_cast<std::size_t>(i)];
    CHECK(step.rule == ReductionRule::smooth);
    CHECK(step.w == 1);
    CHECK(step.a == 2);
    CHECK(step.b == 7 - i);
    CHECK(step.before == emit_graph6(cycle_graph(7 - i)));
    CHECK(step.after == emit_graph6(cycle_graph(6 - i)));
    CHECK(step.verified == true);
  }
  const auto& base = outcome.trace.steps[3];
  CHECK(base.rule == ReductionRule::base_cycle);
  CHECK(base.cycle_length == 4);
  CHECK(base.before == emit_graph6(cycle_graph(4)));
  CHECK(base.verified == true);
  CHECK(outcome.trace.flags.empty());
}

TEST_CASE("the square is its own base case") {
  auto outcome = regularity_via_reduction(cycle_graph(4));
  CHECK(outcome.reg == 3);
  CHECK(rules_of(outcome.trace) == std::vector<ReductionRule>{ReductionRule::base_cycle});
}

TEST_CASE("complete graphs do not reduce") {
  CHECK_THROWS_AS(reduce_once(complete_graph(4)), std::invalid_argument);
  auto outcome = regularity_via_reduction(complete_graph(4), {.verify = true});
  CHECK(!outcome.reg.has_value());
  CHECK(outcome.trace.steps.empty());
  CHECK(outcome.consistent);
}

TEST_CASE("chordal graphs reduce by simplicial rules alone") {
  std::mt19937_64 rng(401);
  int ran = 0;
  while (ran < 40) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph g = random_interval_graph(rng, n);
    if (is_complete(g)) continue;
    REQUIRE(is_chordal(g).chordal);
    ++ran;

    auto outcome = regularity_via_reduction(g);
    CHECK(outcome.reg == 2);
    for (const auto& step : outcome.trace.steps) {
      bool simplicial_rule =
          step.rule == ReductionRule::remove_simplicial ||
          step.rule == ReductionRule::base_complete_minus_simplicial;
      CHECK(simplicial_rule);
    }
    auto report = froberg_classify(g, kQ);
    CHECK(report.chordal);
    CHECK(report.linear);
    CHECK(report.consistent);
  }
}

TEST_CASE("chordality versus linearity on named graphs") {
  auto c4 = froberg_classify(cycle_graph(4), kQ);
  CHECK(!c4.chordal);
  CHECK(!c4.linear);
  CHECK(c4.consistent);

  Graph k4_minus = Graph::from_edges(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto diamond = froberg_classify(k4_minus, kQ);
  CHECK(diamond.chordal);
  CHECK(diamond.linear);
  CHECK(diamond.consistent);

  Graph house = Graph::from_edges(
      5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {1, 5}});
  auto h = froberg_classify(house, kQ);
  CHECK(!h.chordal);
  CHECK(!h.linear);
  CHECK(h.consistent);

  CHECK_THROWS_AS(froberg_classify(complete_graph(3), kQ), std::invalid_argument);
}

TEST_CASE("clique separators split the graph") {
  auto outcome = regularity_via_reduction(glued_squares(), {.verify = true});
  CHECK(outcome.reg == 3);
  CHECK(outcome.consistent);
  CHECK(rules_of(outcome.trace) ==
        std::vector<ReductionRule>{ReductionRule::split, ReductionRule::base_cycle,
                                   ReductionRule::base_cycle});
  const auto& split = outcome.trace.steps[0];
  CHECK(split.overlap == 2);
  CHECK(split.split_case == SplitCase::neither_complete);
  CHECK(split.after_p == emit_graph6(cycle_graph(4)));
  CHECK(split.after_q == emit_graph6(cycle_graph(4)));
  CHECK(outcome.trace.flags.empty());
}

TEST_CASE("narrow separators are flagged") {
  // disjoint squares: the empty separator
  Graph two_squares = Graph::from_edges(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4},
                                            {5, 6}, {6, 7}, {7, 8}, {5, 8}});
  auto disconnected = regularity_via_reduction(two_squares);
  CHECK(disconnected.reg == 3);
  CHECK(rules_of(disconnected.trace) ==
        std::vector<ReductionRule>{ReductionRule::split, ReductionRule::base_cycle,
                                   ReductionRule::base_cycle});
  REQUIRE(disconnected.trace.flags.size() == 1);
  CHECK(disconnected.trace.flags[0] == "step0:split-overlap-0");

  // squares sharing one vertex: a cut vertex
  Graph pinched = Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {1, 4},
                                        {4, 5}, {5, 6}, {6, 7}, {4, 7}});
  auto cut = regularity_via_reduction(pinched, {.verify = true});
  CHECK(cut.reg == 3);
  CHECK(cut.consistent);
  CHECK(rules_of(cut.trace) ==
        std::vector<ReductionRule>{ReductionRule::split, ReductionRule::base_cycle,
                                   ReductionRule::base_cycle});
  REQUIRE(cut.trace.flags.size() == 1);
  CHECK(cut.trace.flags[0] == "step0:split-overlap-1");
}

TEST_CASE("the separator cap gates splitting") {
  Graph g = glued_squares();
  CHECK(reduce_once(g, ReduceOptions{.separator_cap = 1}) == std::nullopt);
  auto outcome = regularity_via_reduction(g, {.verify = true, .separator_cap = 1});
  CHECK(outcome.reg == 3);
  CHECK(outcome.consistent);
  CHECK(rules_of(outcome.trace) ==
        std::vector<ReductionRule>{ReductionRule::fallback_oracle});
}

TEST_CASE("irreducible graphs fall back to the table oracle") {
  CHECK(reduce_once(prism()) == std::nullopt);
  auto outcome = regularity_via_reduction(prism(), {.verify = true});
  CHECK(outcome.reg == 3);
  CHECK(outcome.consistent);
  CHECK(rules_of(outcome.trace) ==
        std::vector<ReductionRule>{ReductionRule::fallback_oracle});

  CHECK(reduce_once(petersen_graph()) == std::nullopt);
  auto pet = regularity_via_reduction(petersen_graph());
  CHECK(pet.reg == 3);
  CHECK(rules_of(pet.trace) ==
        std::vector<ReductionRule>{ReductionRule::fallback_oracle});
}

TEST_CASE("step verification accepts recorded steps and rejects tampering") {
  auto outcome = regularity_via_reduction(cycle_graph(7), {.verify = true});
  for (const auto& step : outcome.trace.steps) {
    CHECK(verify_step(step, kQ));
    CHECK(revalidate_step(step));
  }

  ReductionStep bent = outcome.trace.steps[0];  // smooth C7 -> C6
  bent.after = emit_graph6(path_graph(6));
  CHECK(!verify_step(bent, kQ));
  CHECK(!revalidate_step(bent));

  ReductionStep fake_cycle = outcome.trace.steps[3];  // base case on C4
  fake_cycle.before = emit_graph6(path_graph(4));
  CHECK(!verify_step(fake_cycle, kQ));
  CHECK(!revalidate_step(fake_cycle));

  ReductionStep wrong_length = outcome.trace.steps[3];
  wrong_length.cycle_length = 5;
  CHECK(!revalidate_step(wrong_length));
}

TEST_CASE("synthetic decomposition steps revalidate from their records") {
  // both-complete base over the bowtie, written out by hand
  Graph bow = bowtie();
  ReductionStep both;
  both.rule = ReductionRule::base_decomposable_both_complete;
  both.before = emit_graph6(bow);
  both.p_vertices = {1, 2, 3};
  both.q_vertices = {1, 4, 5};
  both.after_p = emit_graph6(induced_subgraph(bow, VertexSet::of({1, 2, 3})));
  both.after_q = emit_graph6(induced_subgraph(bow, VertexSet::of({1, 4, 5})));
  both.overlap = 1;
  CHECK(revalidate_step(both));
  CHECK(verify_step(both, kQ));

  ReductionStep not_covering = both;
  not_covering.q_vertices = {1, 4};
  CHECK(!revalidate_step(not_covering));

  // one complete part: triangle pinched onto a square at vertex 1
  Graph pinched = Graph::from_edges(6, {{1, 2}, {1, 3}, {2, 3},
                                        {1, 4}, {4, 5}, {5, 6}, {1, 6}});
  ReductionStep half;
  half.rule = ReductionRule::split;
  half.split_case = SplitCase::left_complete;
  half.before = emit_graph6(pinched);
  half.p_vertices = {1, 2, 3};
  half.q_vertices = {1, 4, 5, 6};
  half.after_p = emit_graph6(induced_subgraph(pinched, VertexSet::of({1, 2, 3})));
  half.after_q = emit_graph6(induced_subgraph(pinched, VertexSet::of({1, 4, 5, 6})));
  half.overlap = 1;
  CHECK(revalidate_step(half));
  CHECK(verify_step(half, kQ));

  ReductionStep mislabeled = half;
  mislabeled.split_case = SplitCase::right_complete;
  CHECK(!revalidate_step(mislabeled));
}

TEST_CASE("reduction agrees with the table oracle and ignores labels") {
  std::mt19937_64 rng(409);
  std::vector<int> perm;
  int ran = 0;
  while (ran < 200) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph g = random_graph(rng, n);
    if (is_complete(g)) continue;
    ++ran;

    auto outcome = regularity_via_reduction(g);
    REQUIRE(outcome.reg.has_value());
    CHECK(outcome.reg == regularity(edge_ideal(complement(g)), kQ));
    CHECK(outcome.trace.steps.size() <= 64);

    perm.resize(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto relabeled = regularity_via_reduction(relabel(g, perm));
    CHECK(relabeled.reg == outcome.reg);
  }
}

TEST_CASE("verification mode is self-consistent on random graphs") {
  std::mt19937_64 rng(419);
  int ran = 0;
  while (ran < 30) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph g = random_graph(rng, n);
    if (is_complete(g)) continue;
    ++ran;
    auto outcome = regularity_via_reduction(g, {.verify = true});
    CHECK(outcome.consistent);
    for (const auto& step : outcome.trace.steps) {
      CHECK(step.verified == true);
      CHECK(revalidate_step(step));
    }
  }
}
