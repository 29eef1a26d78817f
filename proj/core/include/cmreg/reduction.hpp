#ifndef CMREG_REDUCTION_HPP
#define CMREG_REDUCTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmreg/betti.hpp"
#include "cmreg/graph.hpp"
#include "cmreg/homology.hpp"

namespace cmreg {

enum class ReductionRule {
  remove_simplicial,               // drop a simplicial vertex, regularity kept
  smooth,                          // contract a degree-2 vertex, regularity kept
  split,                           // clique-overlap separation into two parts
  base_complete_minus_simplicial,  // simplicial vertex whose removal leaves a
                                   // complete graph: regularity 2
  base_cycle,                      // cycle of length > 3: regularity 3
  base_decomposable_both_complete, // both parts complete: regularity 2
  fallback_oracle,                 // no rule applies: direct table computation
};

const char* rule_name(ReductionRule rule);

enum class SplitCase {
  neither_complete,  // recurse into both parts, combine by max
  left_complete,     // part P complete: regularity comes from Q
  right_complete,    // part Q complete: regularity comes from P
};

/** One applied step. `before` is always the graph the rule fired on; linear
 *  rules record the successor in `after`, split records both parts. Vertex
 *  labels refer to the before-graph. */
struct ReductionStep {
  ReductionRule rule = ReductionRule::fallback_oracle;
  std::string before;                 // graph6
  std::string after;                  // graph6; empty for split and terminal rules
  std::string after_p, after_q;       // graph6 of the parts (split only)
  int v = 0;                          // remove_simplicial / base_complete_minus_simplicial
  int w = 0, a = 0, b = 0;            // smooth
  std::vector<int> p_vertices, q_vertices;  // split families (before-labels)
  SplitCase split_case = SplitCase::neither_complete;
  int overlap = 0;                    // |P ∩ Q| for the split family
  int cycle_length = 0;               // base_cycle
  std::optional<bool> verified;       // set in verification mode
};

struct ReductionTrace {
  std::string input;  // graph6
  std::vector<ReductionStep> steps;
  std::optional<int> reg;           // absent for complete input (zero ideal)
  std::vector<std::string> flags;   // steps outside the literal hypotheses
};

struct ReduceOptions {
  int separator_cap = 3;
};

/** One rewriting step, tried in a fixed order: simplicial removal, the
 *  complete-remainder base, smoothing, splitting (with completeness cases),
 *  then the long-cycle base. Returns the step plus the graphs still to be
 *  reduced (empty for terminal rules). std::nullopt when nothing applies.
 *  Throws std::invalid_argument on complete input. */
std::optional<std::pair<std::vector<Graph>, ReductionStep>> reduce_once(
    const Graph& g, const ReduceOptions& options = {});

struct ReductionOptions {
  FieldSpec field = FieldSpec::rationals();
  bool verify = false;   // oracle-check every step and the final value
  int separator_cap = 3;
};

struct ReductionOutcome {
  std::optional<int> reg;  // absent only for complete input
  ReductionTrace trace;
  bool consistent = true;  // verification verdict (true when not verifying)
};

/** Drive reduce_once to a base case or to the table oracle, recursing into
 *  split parts, and report the regularity of the complement edge ideal with
 *  the full step trace. Complete graphs yield a null value and empty trace. */
ReductionOutcome regularity_via_reduction(const Graph& g, const ReductionOptions& options = {});

/** Independent oracle check of one recorded step: recompute the regularities
 *  of its recorded graphs and test the rule's claimed relation. */
bool verify_step(const ReductionStep& step, const FieldSpec& field);

/** Re-derive the step's hypothesis and effect from its recorded graphs:
 *  parses `before`, checks the rule preconditions, re-applies the rule, and
 *  compares with the recorded result. Independent of any regularity
 *  computation. */
bool revalidate_step(const ReductionStep& step, int separator_cap = 3);

struct FrobergReport {
  bool chordal = false;
  bool linear = false;
  bool consistent = false;  // chordal == linear
};

/** Chordality vs linearity of the complement edge ideal over the field.
 *  Pre: G not complete. */
FrobergReport froberg_classify(const Graph& g, const FieldSpec& field);

}  // namespace cmreg

#endif
