#include "cmreg/reduction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cmreg/errors.hpp"
#include "cmreg/ideal.hpp"

namespace cmreg {

const char* rule_name(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::remove_simplicial: return "remove-simplicial";
    case ReductionRule::smooth: return "smooth";
    case ReductionRule::split: return "split";
    case ReductionRule::base_complete_minus_simplicial: return "base-complete-minus-simplicial";
    case ReductionRule::base_cycle: return "base-cycle";
    case ReductionRule::base_decomposable_both_complete: return "base-decomposable-both-complete";
    case ReductionRule::fallback_oracle: return "fallback-oracle";
  }
  return "?";
}

namespace {

Graph drop_vertex(const Graph& g, int v) {
  return induced_subgraph(g, VertexSet::full(g.vertex_count()).without(v));
}

int oracle_regularity(const Graph& g, const FieldSpec& field) {
  return regularity(edge_ideal(complement(g)), field);
}

}  // namespace

std::optional<std::pair<std::vector<Graph>, ReductionStep>> reduce_once(
    const Graph& g, const ReduceOptions& options) {
  if (is_complete(g)) {
    throw std::invalid_argument("reduce_once: complete graph (zero complement edge ideal)");
  }
  const int n = g.vertex_count();
  ReductionStep step;
  step.before = emit_graph6(g);

  // Simplicial removal; a removal that leaves a complete graph is terminal.
  int base_v = 0;
  for (int v = 1; v <= n; ++v) {
    if (!is_simplicial(g, v)) continue;
    Graph rest = drop_vertex(g, v);
    if (!is_complete(rest)) {
      step.rule = ReductionRule::remove_simplicial;
      step.v = v;
      step.after = emit_graph6(rest);
      return std::make_pair(std::vector<Graph>{rest}, step);
    }
    if (base_v == 0) base_v = v;
  }
  if (base_v != 0) {
    step.rule = ReductionRule::base_complete_minus_simplicial;
    step.v = base_v;
    return std::make_pair(std::vector<Graph>{}, step);
  }

  if (auto sm = find_smoothable_vertex(g)) {
    Graph smoothed = smooth(g, sm->w);
    step.rule = ReductionRule::smooth;
    step.w = sm->w;
    step.a = sm->a;
    step.b = sm->b;
    step.after = emit_graph6(smoothed);
    return std::make_pair(std::vector<Graph>{smoothed}, step);
  }

  if (auto d = find_decomposition(g, options.separator_cap)) {
    Graph part_p = induced_subgraph(g, d->p);
    Graph part_q = induced_subgraph(g, d->q);
    step.p_vertices = d->p.vertices();
    step.q_vertices = d->q.vertices();
    step.overlap = VertexSet(d->p.bits() & d->q.bits()).size();
    step.after_p = emit_graph6(part_p);
    step.after_q = emit_graph6(part_q);
    bool p_complete = is_complete(part_p);
    bool q_complete = is_complete(part_q);
    if (p_complete && q_complete) {
      step.rule = ReductionRule::base_decomposable_both_complete;
      return std::make_pair(std::vector<Graph>{}, step);
    }
    step.rule = ReductionRule::split;
    if (p_complete) {
      step.split_case = SplitCase::left_complete;
      return std::make_pair(std::vector<Graph>{part_q}, step);
    }
    if (q_complete) {
      step.split_case = SplitCase::right_complete;
      return std::make_pair(std::vector<Graph>{part_p}, step);
    }
    step.split_case = SplitCase::neither_complete;
    return std::make_pair(std::vector<Graph>{part_p, part_q}, step);
  }

  if (auto len = is_cycle_graph(g); len && *len > 3) {
    step.rule = ReductionRule::base_cycle;
    step.cycle_length = *len;
    return std::make_pair(std::vector<Graph>{}, step);
  }

  return std::nullopt;
}

namespace {

/** Recursive driver. Appends steps pre-order and returns the regularity of
 *  the complement edge ideal of g (g is never complete here). */
int reduce_recursive(const Graph& g, const ReductionOptions& options, ReductionTrace& trace) {
  auto next = reduce_once(g, ReduceOptions{options.separator_cap});
  if (!next) {
    ReductionStep step;
    step.rule = ReductionRule::fallback_oracle;
    step.before = emit_graph6(g);
    int reg = oracle_regularity(g, options.field);
    if (options.verify) step.verified = true;  // the oracle is its own witness
    trace.steps.push_back(std::move(step));
    return reg;
  }

  auto& [rest, step] = *next;
  std::size_t step_at = trace.steps.size();
  if ((step.rule == ReductionRule::split ||
       step.rule == ReductionRule::base_decomposable_both_complete) &&
      step.overlap <= 1) {
    trace.flags.push_back("step" + std::to_string(step_at) + ":split-overlap-" +
                          std::to_string(step.overlap));
  }
  trace.steps.push_back(step);

  int reg = 0;
  switch (step.rule) {
    case ReductionRule::base_complete_minus_simplicial:
    case ReductionRule::base_decomposable_both_complete:
      reg = 2;
      break;
    case ReductionRule::base_cycle:
      reg = 3;
      break;
    case ReductionRule::remove_simplicial:
    case ReductionRule::smooth:
      reg = reduce_recursive(rest[0], options, trace);
      break;
    case ReductionRule::split:
      if (step.split_case == SplitCase::neither_complete) {
        int rp = reduce_recursive(rest[0], options, trace);
        int rq = reduce_recursive(rest[1], options, trace);
        reg = std::max(rp, rq);
      } else {
        reg = reduce_recursive(rest[0], options, trace);
      }
      break;
    case ReductionRule::fallback_oracle:
      break;  // handled above
  }

  if (options.verify) {
    trace.steps[step_at].verified = verify_step(trace.steps[step_at], options.field);
  }
  return reg;
}

}  // namespace

ReductionOutcome regularity_via_reduction(const Graph& g, const ReductionOptions& options) {
  ReductionOutcome outcome;
  outcome.trace.input = emit_graph6(g);
  if (is_complete(g)) {
    outcome.reg = std::nullopt;  // zero ideal: regularity undefined
    return outcome;
  }
  outcome.reg = reduce_recursive(g, options, outcome.trace);
  outcome.trace.reg = outcome.reg;
  if (options.verify) {
    bool all_steps = true;
    for (const auto& s : outcome.trace.steps) {
      all_steps = all_steps && s.verified.value_or(false);
    }
    outcome.consistent = all_steps && *outcome.reg == oracle_regularity(g, options.field);
  }
  return outcome;
}

bool verify_step(const ReductionStep& step, const FieldSpec& field) {
  Graph before = parse_graph6(step.before);
  int reg_before = oracle_regularity(before, field);
  switch (step.rule) {
    case ReductionRule::remove_simplicial:
    case ReductionRule::smooth:
      return reg_before == oracle_regularity(parse_graph6(step.after), field);
    case ReductionRule::base_complete_minus_simplicial:
    case ReductionRule::base_decomposable_both_complete:
      return reg_before == 2;
    case ReductionRule::base_cycle:
      return reg_before == 3;
    case ReductionRule::split: {
      int rp = 0, rq = 0;
      if (step.split_case != SplitCase::left_complete) {
        rp = oracle_regularity(parse_graph6(step.after_p), field);
      }
      if (step.split_case != SplitCase::right_complete) {
        rq = oracle_regularity(parse_graph6(step.after_q), field);
      }
      if (step.split_case == SplitCase::left_complete) return reg_before == rq;
      if (step.split_case == SplitCase::right_complete) return reg_before == rp;
      return reg_before == std::max(rp, rq);
    }
    case ReductionRule::fallback_oracle:
      return true;
  }
  return false;
}

bool revalidate_step(const ReductionStep& step, int separator_cap) {
  Graph before = parse_graph6(step.before);
  int n = before.vertex_count();
  switch (step.rule) {
    case ReductionRule::remove_simplicial: {
      if (step.v < 1 || step.v > n || !is_simplicial(before, step.v)) return false;
      Graph rest = drop_vertex(before, step.v);
      return !is_complete(rest) && emit_graph6(rest) == step.after;
    }
    case ReductionRule::base_complete_minus_simplicial: {
      if (step.v < 1 || step.v > n || !is_simplicial(before, step.v)) return false;
      return is_complete(drop_vertex(before, step.v)) && !is_complete(before);
    }
    case ReductionRule::smooth: {
      if (step.w < 1 || step.w > n || before.degree(step.w) != 2) return false;
      std::vector<int> nb = before.neighbors(step.w);
      if (nb[0] != step.a || nb[1] != step.b) return false;
      if (before.has_edge(step.a, step.b)) return false;
      // the smoothed graph must not acquire a second route between a and b
      std::uint64_t common = before.neighbor_bits(step.a) & before.neighbor_bits(step.b);
      if (common & ~(std::uint64_t{1} << (step.w - 1))) return false;
      return emit_graph6(smooth(before, step.w)) == step.after;
    }
    case ReductionRule::split:
    case ReductionRule::base_decomposable_both_complete: {
      VertexSet p = VertexSet::from_vertices(step.p_vertices);
      VertexSet q = VertexSet::from_vertices(step.q_vertices);
      std::uint64_t full = VertexSet::full(n).bits();
      if ((p.bits() | q.bits()) != full) return false;
      if (p.bits() == full || q.bits() == full) return false;
      std::uint64_t sep = p.bits() & q.bits();
      // overlap must be a clique
      for (std::uint64_t m = sep; m; m &= m - 1) {
        int v = std::countr_zero(m) + 1;
        std::uint64_t rest = sep & ~(std::uint64_t{1} << (v - 1));
        if ((before.neighbor_bits(v) & rest) != rest) return false;
      }
      // no edge from P-only to Q-only
      std::uint64_t p_only = p.bits() & ~sep;
      for (std::uint64_t m = p_only; m; m &= m - 1) {
        int v = std::countr_zero(m) + 1;
        if (before.neighbor_bits(v) & (q.bits() & ~sep)) return false;
      }
      Graph part_p = induced_subgraph(before, p);
      Graph part_q = induced_subgraph(before, q);
      if (emit_graph6(part_p) != step.after_p) return false;
      if (emit_graph6(part_q) != step.after_q) return false;
      bool pc = is_complete(part_p), qc = is_complete(part_q);
      if (step.rule == ReductionRule::base_decomposable_both_complete) return pc && qc;
      if (step.split_case == SplitCase::left_complete) return pc && !qc;
      if (step.split_case == SplitCase::right_complete) return qc && !pc;
      return !pc && !qc;
    }
    case ReductionRule::base_cycle:
      return is_cycle_graph(before) == std::optional<int>(step.cycle_length) &&
             step.cycle_length > 3;
    case ReductionRule::fallback_oracle:
      return !reduce_once(before, ReduceOptions{separator_cap}).has_value();
  }
  return false;
}

FrobergReport froberg_classify(const Graph& g, const FieldSpec& field) {
  if (is_complete(g)) {
    throw std::invalid_argument("froberg_classify: complete graph (zero complement edge ideal)");
  }
  FrobergReport report;
  report.chordal = is_chordal(g).chordal;
  report.linear = has_linear_resolution(edge_ideal(complement(g)), field);
  report.consistent = report.chordal == report.linear;
  return report;
}

}  // namespace cmreg
