#include "cmreg/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmreg/betti.hpp"
#include "cmreg/graph.hpp"
#include "cmreg/ideal.hpp"
#include "cmreg/json_io.hpp"
#include "cmreg/reduction.hpp"

namespace cmreg {

namespace {

using Rng = std::mt19937_64;

int rand_below(Rng& rng, int k) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

/** Uniform nonempty subset of the variables selected by `pool`. */
std::uint64_t random_nonempty_subset(Rng& rng, std::uint64_t pool) {
  for (;;) {
    std::uint64_t mask = rng() & pool;
    if (mask != 0) return mask;
  }
}

/** Uniform k-subset of {1..n} as a bitmask (partial Fisher-Yates). */
std::uint64_t random_k_subset(Rng& rng, int n, int k) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::uint64_t mask = 0;
  for (int i = 0; i < k; ++i) {
    std::swap(labels[i], labels[i + rand_below(rng, n - i)]);
    mask |= std::uint64_t{1} << (labels[i] - 1);
  }
  return mask;
}

Graph random_graph(Rng& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return Graph::from_edges(n, edges);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/** m distinct degree-d generators on n variables. Pre: m <= C(n, d). */
SquarefreeIdeal random_equigenerated(Rng& rng, int n, int d, int m) {
  std::set<std::uint64_t> picked;
  while (static_cast<int>(picked.size()) < m) picked.insert(random_k_subset(rng, n, d));
  return SquarefreeIdeal::from_masks(n, {picked.begin(), picked.end()});
}

/** All labeled graphs on n vertices, as edge-set counters over the pair list. */
class GraphEnumerator {
public:
  explicit GraphEnumerator(int n) : n_(n) {
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs_.emplace_back(u, v);
  }
  std::uint64_t total() const { return std::uint64_t{1} << pairs_.size(); }
  Graph graph(std::uint64_t edge_mask) const {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if ((edge_mask >> i) & 1) edges.push_back(pairs_[i]);
    return Graph::from_edges(n_, edges);
  }

private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

void record_failure(SuiteReport& report, const std::string& witness) {
  ++report.failed;
  if (report.first_counterexample.empty()) report.first_counterexample = witness;
}

/** Minimal transversals of the generator supports by the 2^n filter; the
 *  independent oracle for the incremental dual. */
std::vector<std::uint64_t> brute_force_dual_masks(const SquarefreeIdeal& ideal) {
  const auto& gens = ideal.generator_masks();
  const int n = ideal.ambient_n();
  std::vector<std::uint64_t> hits;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool transversal = true;
    for (std::uint64_t g : gens)
      if ((g & mask) == 0) {
        transversal = false;
        break;
      }
    if (transversal) hits.push_back(mask);
  }
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t mask : hits) {
    bool keep = true;
    for (std::uint64_t other : hits)
      if (other != mask && (other & ~mask) == 0) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(mask);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace

SuiteReport run_froberg_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "froberg";
  Rng rng(options.seed);

  std::vector<FieldSpec> fields{options.field};
  if (options.field.is_rationals()) fields.push_back(FieldSpec::prime(2));
  std::string field_note = "fields:";
  for (const auto& f : fields) field_note += " " + f.name();
  report.notes.push_back(field_note);

  auto check_graph = [&](const Graph& g) {
    ++report.checked;
    if (is_complete(g)) return;  // zero ideal: nothing to classify
    for (const auto& f : fields) {
      FrobergReport fr = froberg_classify(g, f);
      if (!fr.consistent) {
        record_failure(report, emit_graph6(g));
        return;
      }
    }
  };

  const int exhaustive_top = std::min(options.max_n, 6);
  for (int n = 2; n <= exhaustive_top; ++n) {
    GraphEnumerator en(n);
    for (std::uint64_t mask = 0; mask < en.total(); ++mask) check_graph(en.graph(mask));
    report.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(en.total()) +
                           " graphs (exhaustive)");
  }
  for (int n = 7; n <= options.max_n; ++n) {
    for (long long i = 0; i < options.count; ++i) check_graph(random_graph(rng, n));
    report.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(options.count) +
                           " graphs (random)");
  }
  return report;
}

SuiteReport run_cycles_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "cycles";
  const int top = std::min(std::max(options.max_n, 9), 12);
  for (int n = 4; n <= top; ++n) {
    Graph g = cycle_graph(n);
    ++report.checked;
    int oracle = regularity(edge_ideal(complement(g)), options.field);
    ReductionOptions ropts;
    ropts.field = options.field;
    ropts.separator_cap = options.separator_cap;
    ReductionOutcome outcome = regularity_via_reduction(g, ropts);
    if (oracle != 3 || !outcome.reg || *outcome.reg != 3) {
      record_failure(report, emit_graph6(g));
      continue;
    }
    report.notes.push_back("C_" + std::to_string(n) + ": reg 3, " +
                           std::to_string(outcome.trace.steps.size()) + " steps");
  }
  return report;
}

SuiteReport run_reductions_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "reductions";
  Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);

  ReductionOptions ropts;
  ropts.field = options.field;
  ropts.verify = true;
  ropts.separator_cap = options.separator_cap;

  auto check_graph = [&](const Graph& g) {
    ++report.checked;
    if (is_complete(g)) {
      // Complete graphs are outside the calculus: no step, no value.
      bool threw = false;
      try {
        reduce_once(g);
      } catch (const std::invalid_argument&) {
        threw = true;
      }
      ReductionOutcome outcome = regularity_via_reduction(g, ropts);
      if (!threw || outcome.reg || !outcome.trace.steps.empty())
        record_failure(report, emit_graph6(g));
      return;
    }
    ReductionOutcome outcome = regularity_via_reduction(g, ropts);
    bool ok = outcome.consistent && outcome.reg.has_value();
    for (const auto& step : outcome.trace.steps) {
      ok = ok && step.verified.value_or(false);
      ok = ok && revalidate_step(step, options.separator_cap);
    }
    if (!ok) record_failure(report, emit_graph6(g));
  };

  const int exhaustive_top = std::min(options.max_n, 6);
  for (int n = 1; n <= exhaustive_top; ++n) {
    GraphEnumerator en(n);
    for (std::uint64_t mask = 0; mask < en.total(); ++mask) check_graph(en.graph(mask));
    report.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(en.total()) +
                           " graphs (exhaustive)");
  }
  const long long random_target = std::max<long long>(500, options.count);
  for (long long i = 0; i < random_target; ++i) check_graph(random_graph(rng, 7 + static_cast<int>(i % 3)));
  report.notes.push_back("random n in {7,8,9}: " + std::to_string(random_target) + " graphs");
  return report;
}

SuiteReport run_gluing_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "gluing";
  Rng rng(options.seed ^ 0xc2b2ae3d27d4eb4fULL);

  const long long target = std::max<long long>(200, options.count);
  long long small_overlap = 0;
  long long per_overlap[4] = {0, 0, 0, 0};

  for (long long idx = 0; idx < target; ++idx) {
    const int r = static_cast<int>(idx % 4);
    Graph g(1), g1(1), g2(1);
    int n = 0, n1 = 0, n2 = 0;
    for (;;) {
      int nx = 1 + rand_below(rng, 4);
      int ny = 1 + rand_below(rng, 4);
      if (r + nx < 2) nx = 2;
      if (r + ny < 2) ny = 2;
      n1 = r + nx;
      n2 = r + ny;
      n = r + nx + ny;
      std::vector<std::pair<int, int>> edges;
      for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) edges.emplace_back(i, j);  // shared clique
      auto coin_pairs = [&](int lo_block, int hi_block) {
        // pairs inside {1..r} ∪ {lo_block..hi_block} except the clique pairs
        std::vector<int> verts;
        for (int i = 1; i <= r; ++i) verts.push_back(i);
        for (int i = lo_block; i <= hi_block; ++i) verts.push_back(i);
        for (std::size_t a = 0; a < verts.size(); ++a)
          for (std::size_t b = a + 1; b < verts.size(); ++b) {
            if (verts[a] <= r && verts[b] <= r) continue;
            if (rng() & 1) edges.emplace_back(verts[a], verts[b]);
          }
      };
      coin_pairs(r + 1, r + nx);
      coin_pairs(r + nx + 1, n);
      g = Graph::from_edges(n, edges);
      std::uint64_t v1_bits = (std::uint64_t{1} << n1) - 1;
      std::uint64_t v2_bits = ((std::uint64_t{1} << r) - 1) |
                              ((((std::uint64_t{1} << ny) - 1)) << (r + nx));
      g1 = induced_subgraph(g, VertexSet(v1_bits));
      g2 = induced_subgraph(g, VertexSet(v2_bits));
      if (!is_complete(g1) && !is_complete(g2)) break;
    }
    ++report.checked;
    ++per_overlap[r];
    if (r <= 1) ++small_overlap;

    SquarefreeIdeal full = edge_ideal(complement(g));
    SquarefreeIdeal part1 = edge_ideal(complement(g1));
    SquarefreeIdeal part2 = edge_ideal(complement(g2));

    BettiTable table = betti_table(full, options.field);
    int reg_full = table.regularity();
    int reg1 = regularity(part1, options.field);
    int reg2 = regularity(part2, options.field);

    int depth_full = depth_quotient(alexander_dual(full), options.field);
    int depth1 = depth_quotient(alexander_dual(part1), options.field) + (n - n1);
    int depth2 = depth_quotient(alexander_dual(part2), options.field) + (n - n2);

    bool linear_full = linear_resolution_status(table) == LinearStatus::linear;
    bool linear_parts = has_linear_resolution(part1, options.field) &&
                        has_linear_resolution(part2, options.field);

    bool ok = reg_full == std::max(reg1, reg2) &&
              depth_full == std::min(depth1, depth2) && linear_full == linear_parts;
    if (!ok) record_failure(report, emit_graph6(g));
  }
  for (int r = 0; r < 4; ++r)
    report.notes.push_back("overlap " + std::to_string(r) + ": " +
                           std::to_string(per_overlap[r]) + " instances");
  report.notes.push_back("overlap <= 1 (degenerate clique): " + std::to_string(small_overlap));
  return report;
}

SuiteReport run_terai_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "terai";
  Rng rng(options.seed ^ 0x165667b19e3779f9ULL);

  const long long target = std::max<long long>(200, options.count);
  for (long long idx = 0; idx < target; ++idx) {
    SquarefreeIdeal ideal = SquarefreeIdeal::zero(1);
    for (;;) {
      int n = 4 + rand_below(rng, 4);  // 4..7
      int d = 2 + rand_below(rng, n - 2);  // 2..n-1
      int max_m = static_cast<int>(std::min<long long>(8, binomial(n, d)));
      if (max_m < 2) continue;
      int m = 2 + rand_below(rng, max_m - 1);
      ideal = random_equigenerated(rng, n, d, m);
      std::uint64_t common = ~std::uint64_t{0};
      for (std::uint64_t g : ideal.generator_masks()) common &= g;
      if (common == 0) break;  // dim S/I <= n-2 iff no variable hits every generator
    }
    ++report.checked;
    if (!check_terai(ideal, options.field)) record_failure(report, ideal_to_json(ideal));
  }
  return report;
}

SuiteReport run_eagon_reiner_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "eagon-reiner";
  Rng rng(options.seed ^ 0x27d4eb2f165667c5ULL);

  const long long target = std::max<long long>(200, options.count);
  for (long long idx = 0; idx < target; ++idx) {
    int n = 3 + rand_below(rng, 5);  // 3..7
    int d = 2 + rand_below(rng, n - 1);  // 2..n
    int max_m = static_cast<int>(std::min<long long>(8, binomial(n, d)));
    int m = 1 + rand_below(rng, max_m);
    SquarefreeIdeal ideal = random_equigenerated(rng, n, d, m);
    ++report.checked;
    if (!check_eagon_reiner(ideal, options.field)) record_failure(report, ideal_to_json(ideal));
  }
  return report;
}

SuiteReport run_monotonicity_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "monotonicity";
  Rng rng(options.seed ^ 0x85ebca77c2b2ae63ULL);

  const long long target = std::max<long long>(200, options.count);
  for (long long idx = 0; idx < target; ++idx) {
    Graph g(1);
    std::uint64_t w_bits = 0;
    for (;;) {
      int n = 3 + rand_below(rng, 5);  // 3..7
      g = random_graph(rng, n);
      if (is_complete(g)) continue;
      w_bits = rng() & ((std::uint64_t{1} << n) - 1);
      if (std::popcount(w_bits) < 2) continue;
      if (is_complete(induced_subgraph(g, VertexSet(w_bits)))) continue;
      break;
    }
    ++report.checked;
    if (!betti_monotonicity_check(g, VertexSet(w_bits), options.field))
      record_failure(report, emit_graph6(g));
  }
  return report;
}

SuiteReport run_lemmas_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "lemmas";
  Rng rng(options.seed ^ 0x94d049bb133111ebULL);
  const long long per_block = std::max<long long>(100, options.count / 2);

  // Multiplying every generator by the product of a fresh variable block
  // leaves the quotient depth unchanged.
  for (long long idx = 0; idx < per_block; ++idx) {
    int k = 2 + rand_below(rng, 4);  // 2..5 occupied variables
    int t = 1 + rand_below(rng, 3);  // 1..3 fresh variables
    int n = k + t;
    int c = 1 + rand_below(rng, 4);
    std::vector<std::uint64_t> masks;
    for (int i = 0; i < c; ++i)
      masks.push_back(random_nonempty_subset(rng, (std::uint64_t{1} << k) - 1));
    SquarefreeIdeal base = SquarefreeIdeal::from_masks(n, masks);
    std::uint64_t fresh = ((std::uint64_t{1} << t) - 1) << k;
    std::vector<std::uint64_t> scaled;
    for (std::uint64_t gmask : base.generator_masks()) scaled.push_back(gmask | fresh);
    SquarefreeIdeal product = SquarefreeIdeal::from_masks(n, scaled);
    ++report.checked;
    if (depth_quotient(product, options.field) != depth_quotient(base, options.field))
      record_failure(report, ideal_to_json(base));
  }
  report.notes.push_back("fresh-block depth equality: " + std::to_string(per_block));

  // Dual of I + (all x_i y_j) equals I^dual ∩ (X, Y) for the block products;
  // both sides cross-checked against the 2^n transversal filter.
  for (long long idx = 0; idx < per_block; ++idx) {
    int nx = 1 + rand_below(rng, 3);
    int m = 1 + rand_below(rng, 3);
    int r = rand_below(rng, 3);
    int n = nx + m + r;
    std::uint64_t xmask = (std::uint64_t{1} << nx) - 1;
    std::uint64_t ymask = ((std::uint64_t{1} << m) - 1) << nx;
    std::uint64_t zmask = ((std::uint64_t{1} << n) - 1) & ~(xmask | ymask);
    int c = 1 + rand_below(rng, 4);
    std::vector<std::uint64_t> masks;
    for (int i = 0; i < c; ++i) masks.push_back(random_nonempty_subset(rng, xmask | zmask));
    SquarefreeIdeal base = SquarefreeIdeal::from_masks(n, masks);
    std::vector<std::uint64_t> cross;
    for (int i = 1; i <= nx; ++i)
      for (int j = 1; j <= m; ++j)
        cross.push_back((std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (nx + j - 1)));
    SquarefreeIdeal joined = ideal_sum(base, SquarefreeIdeal::from_masks(n, cross));
    SquarefreeIdeal lhs = alexander_dual(joined);
    SquarefreeIdeal rhs = ideal_intersection(alexander_dual(base),
                                             SquarefreeIdeal::from_masks(n, {xmask, ymask}));
    ++report.checked;
    if (!(lhs == rhs) || lhs.generator_masks() != brute_force_dual_masks(joined))
      record_failure(report, ideal_to_json(base));
  }
  report.notes.push_back("bipartite-join dual identity: " + std::to_string(per_block));

  // For an edge {1,2} whose endpoints share no neighbor, the dual quotient
  // depth drops by at most 1 under + (x1,x2) and not at all under ∩ (x1,x2).
  for (long long idx = 0; idx < per_block; ++idx) {
    int n = 3 + rand_below(rng, 5);  // 3..7
    std::vector<std::pair<int, int>> edges{{1, 2}};
    for (int i = 3; i <= n; ++i) {
      switch (rand_below(rng, 3)) {
        case 1: edges.emplace_back(1, i); break;
        case 2: edges.emplace_back(2, i); break;
        default: break;
      }
    }
    for (int u = 3; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    SquarefreeIdeal dual = alexander_dual(edge_ideal(complement(g)));
    SquarefreeIdeal x12 = SquarefreeIdeal::from_masks(n, {std::uint64_t{1}, std::uint64_t{2}});
    int depth0 = depth_quotient(dual, options.field);
    int depth_sum = depth_quotient(ideal_sum(dual, x12), options.field);
    int depth_cap = depth_quotient(ideal_intersection(dual, x12), options.field);
    ++report.checked;
    if (depth_sum < depth0 - 1 || depth_cap < depth0) record_failure(report, emit_graph6(g));
  }
  report.notes.push_back("shared-edge depth bounds: " + std::to_string(per_block));
  return report;
}

std::vector<std::string> suite_names() {
  return {"froberg",      "cycles",       "reductions", "gluing",
          "terai",        "eagon-reiner", "monotonicity", "lemmas"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "froberg") return run_froberg_suite(options);
  if (name == "cycles") return run_cycles_suite(options);
  if (name == "reductions") return run_reductions_suite(options);
  if (name == "gluing") return run_gluing_suite(options);
  if (name == "terai") return run_terai_suite(options);
  if (name == "eagon-reiner") return run_eagon_reiner_suite(options);
  if (name == "monotonicity") return run_monotonicity_suite(options);
  if (name == "lemmas") return run_lemmas_suite(options);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace cmreg
