#ifndef CMREG_VERIFY_HPP
#define CMREG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cmreg/homology.hpp"

namespace cmreg {

/** Knobs shared by the property suites. Exhaustive phases run up to max_n;
 *  randomized phases draw `count` instances from a mt19937_64 stream seeded
 *  with `seed`, so a report is reproducible from (suite, options). */
struct SuiteOptions {
  FieldSpec field = FieldSpec::rationals();
  int max_n = 6;
  long long count = 200;
  std::uint64_t seed = 20240914;
  int separator_cap = 3;
};

struct SuiteReport {
  std::string suite;
  long long checked = 0;
  long long failed = 0;
  /** graph6 or ideal JSON of the first failing instance, empty when clean. */
  std::string first_counterexample;
  std::vector<std::string> notes;

  bool passed() const { return failed == 0 && checked > 0; }
};

/** chordal(G) <=> linear resolution of the complement edge ideal, exhaustive
 *  over all labeled graphs on 2..max_n vertices. Over the rationals the
 *  equivalence is re-checked over GF(2) as well. */
SuiteReport run_froberg_suite(const SuiteOptions& options = {});

/** Cycles C_n for n = 4..max(max_n, 9): oracle and reduction both give
 *  regularity 3. */
SuiteReport run_cycles_suite(const SuiteOptions& options = {});

/** Reduction soundness: every step of every trace passes the oracle check
 *  and the hypothesis recheck, and the final value matches the oracle.
 *  Exhaustive on <= min(max_n, 6) vertices plus `count` (at least 500)
 *  random graphs on 7..9 vertices. */
SuiteReport run_reductions_suite(const SuiteOptions& options = {});

/** Random clique-glued pairs (overlap 0..3): regularity of the union is the
 *  max of the parts, dual depth the min (in the common ambient ring), and
 *  2-linearity holds iff it holds for both parts. */
SuiteReport run_gluing_suite(const SuiteOptions& options = {});

/** dim - depth of the dual quotient equals reg - indeg, on random
 *  equigenerated ideals with dim S/I <= n - 2. */
SuiteReport run_terai_suite(const SuiteOptions& options = {});

/** Linear resolution <=> dual quotient Cohen-Macaulay of dimension n - d,
 *  on random equigenerated ideals. */
SuiteReport run_eagon_reiner_suite(const SuiteOptions& options = {});

/** Entrywise Betti monotonicity under passing to induced subgraphs. */
SuiteReport run_monotonicity_suite(const SuiteOptions& options = {});

/** Three identities behind the reduction calculus: depth is unchanged by
 *  multiplying all generators with a block of fresh variables; the dual of
 *  I + (all x_i y_j) is I^dual ∩ (X, Y) for the block products X, Y; and for
 *  an edge {1,2} whose endpoints share no neighbor, depth of the dual drops
 *  by at most 1 under + (x1, x2) and not at all under ∩ (x1, x2). */
SuiteReport run_lemmas_suite(const SuiteOptions& options = {});

/** Names accepted by run_suite, in display order. */
std::vector<std::string> suite_names();

/** Dispatch by name. Throws std::invalid_argument on an unknown suite. */
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace cmreg

#endif
