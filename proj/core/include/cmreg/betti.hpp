#ifndef CMREG_BETTI_HPP
#define CMREG_BETTI_HPP

#include <map>
#include <utility>

#include "cmreg/graph.hpp"
#include "cmreg/homology.hpp"
#include "cmreg/ideal.hpp"

namespace cmreg {

/** Sparse table of graded Betti numbers beta_{i,j} of an ideal (i counts
 *  resolution steps from the generators, j the internal degree). */
struct BettiTable {
  int ambient_n = 0;
  FieldSpec field = FieldSpec::rationals();
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta, nonzero only

  long long at(int i, int j) const;
  int regularity() const;            // max j - i over nonzero entries
  int projective_dimension() const;  // max i over nonzero entries

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.ambient_n == b.ambient_n && a.field == b.field && a.entries == b.entries;
  }
};

enum class LinearStatus {
  linear,         // equigenerated in degree d, all entries on j = i + d
  not_linear,     // equigenerated, some entry off the line
  mixed_degrees,  // generators of several degrees: question not applicable
};

struct InvariantReport {
  int reg = 0;
  int pd_ideal = 0;
  int depth_quotient = 0;
  int dim_quotient = 0;
  bool is_cohen_macaulay = false;
  LinearStatus linear = LinearStatus::not_linear;
  FieldSpec field = FieldSpec::rationals();
};

/** All graded Betti numbers over the field, by summing reduced homology of
 *  induced restrictions of the Stanley-Reisner complex across subsets W of
 *  the ground set. Restrictions that are cones are skipped (their homology
 *  vanishes), as are |W| < indeg. Throws zero_ideal_error on the zero ideal.
 *  Intended scale is ambient_n <= ~16. */
BettiTable betti_table(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** max(j - i) over the table. */
int regularity(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** max i over the table. */
int projective_dimension(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** depth S/I = ambient_n - (pd(I) + 1), by Auslander-Buchsbaum. */
int depth_quotient(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** Linearity from a computed table (no extra work, never throws). */
LinearStatus linear_resolution_status(const BettiTable& table);

/** True iff the resolution is d-linear for the common generator degree d.
 *  Throws mixed_degree_error when generator degrees are mixed. */
bool has_linear_resolution(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** One table computation feeding every invariant. */
InvariantReport invariant_report(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** Equivalence "linear resolution of I <=> S/I^dual Cohen-Macaulay of
 *  dimension n - d" for an ideal equigenerated in degree d. Returns whether
 *  the two sides agree. Throws mixed_degree_error on mixed degrees. */
bool check_eagon_reiner(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** Identity "dim S/I^dual - depth S/I^dual = reg(I) - indeg(I)", valid when
 *  dim S/I <= ambient_n - 2. Outside that hypothesis throws
 *  not_applicable_error. */
bool check_terai(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** Entrywise beta_{i,j}(I(comp H)) <= beta_{i,j}(I(comp G)) for H = G[W].
 *  Pre: both complement edge ideals nonzero. */
bool betti_monotonicity_check(const Graph& g, VertexSet w, const FieldSpec& field);

}  // namespace cmreg

#endif
