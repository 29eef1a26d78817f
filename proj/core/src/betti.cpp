#include "cmreg/betti.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cmreg/errors.hpp"

namespace cmreg {

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  int best = 0;
  for (const auto& [key, value] : entries) {
    if (value != 0) best = std::max(best, key.second - key.first);
  }
  return best;
}

int BettiTable::projective_dimension() const {
  int best = 0;
  for (const auto& [key, value] : entries) {
    if (value != 0) best = std::max(best, key.first);
  }
  return best;
}

namespace {

/** Faces of the Stanley-Reisner complex as a 2^n table: mask -> contains no
 *  generator. Built by spreading generator masks upward. */
std::vector<bool> nonface_table(const SquarefreeIdeal& ideal) {
  int n = ideal.ambient_n();
  std::vector<bool> nonface(std::size_t{1} << n, false);
  for (std::uint64_t g : ideal.generator_masks()) nonface[g] = true;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (!nonface[m]) continue;
    for (int v = 0; v < n; ++v) nonface[m | (std::uint64_t{1} << v)] = true;
  }
  return nonface;
}

}  // namespace

BettiTable betti_table(const SquarefreeIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero()) throw zero_ideal_error("betti_table of the zero ideal");
  int n = ideal.ambient_n();
  if (n > 16) throw std::invalid_argument("betti_table supports at most 16 variables");

  const std::vector<bool> nonface = nonface_table(ideal);
  const auto& gens = ideal.generator_masks();
  const int indeg = ideal.indeg();

  BettiTable table;
  table.ambient_n = n;
  table.field = field;

  std::vector<std::vector<std::uint64_t>> faces_by_card(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    int j = std::popcount(w);
    if (j < indeg) continue;  // restriction is a full simplex, no homology
    // The restriction is a cone (hence acyclic) unless every vertex of W
    // lies in some generator contained in W.
    std::uint64_t covered = 0;
    for (std::uint64_t g : gens) {
      if ((g & ~w) == 0) covered |= g;
    }
    if (covered != w) continue;

    for (auto& bucket : faces_by_card) bucket.clear();
    for (std::uint64_t s = w;; s = (s - 1) & w) {
      if (!nonface[s]) faces_by_card[static_cast<std::size_t>(std::popcount(s))].push_back(s);
      if (s == 0) break;
    }
    for (auto& bucket : faces_by_card) std::reverse(bucket.begin(), bucket.end());

    HomologyProfile profile = detail::homology_from_faces(faces_by_card, field);
    for (const auto& [k, h] : profile) {
      if (h != 0 && k <= j - 2) table.entries[{j - k - 2, j}] += h;
    }
  }
  return table;
}

int regularity(const SquarefreeIdeal& ideal, const FieldSpec& field) {
  return betti_table(ideal, field).regularity();
}

int projective_dimension(const SquarefreeIdeal& ideal, const FieldSpec& field) {
  return betti_table(ideal, field).projective_dimension();
}

int depth_quotient(const SquarefreeIdeal& ideal, const FieldSpec& field) {
  return ideal.ambient_n() - (projective_dimension(ideal, field) + 1);
}

LinearStatus linear_resolution_status(const BettiTable& table) {
  int first_degree = -1;
  bool mixed = false;
  for (const auto& [key, value] : table.entries) {
    if (key.first != 0 || value == 0) continue;
    if (first_degree < 0) {
      first_degree = key.second;
    } else if (key.second != first_degree) {
      mixed = true;
    }
  }
  if (mixed) return LinearStatus::mixed_degrees;
  for (const auto& [key, value] : table.entries) {
    if (value != 0 && key.second != key.first + first_degree) return LinearStatus::not_linear;
  }
  return LinearStatus::linear;
}

bool has_linear_resolution(const SquarefreeIdeal& ideal, const FieldSpec& field) {
  if (!ideal.is_equigenerated()) {
    throw mixed_degree_error("linear resolution query on mixed generator degrees");
  }
  return linear_resolution_status(betti_table(ideal, field)) == LinearStatus::linear;
}

InvariantReport invariant_report(const SquarefreeIdeal& ideal, const FieldSpec& field) {
  BettiTable table = betti_table(ideal, field);
  InvariantReport report;
  report.field = field;
  report.reg = table.regularity();
  report.pd_ideal = table.projective_dimension();
  report.depth_quotient = ideal.ambient_n() - (report.pd_ideal + 1);
  report.dim_quotient = krull_dim_quotient(ideal);
  report.is_cohen_macaulay = report.depth_quotient == report.dim_quotient;
  report.linear = linear_resolution_status(table);
  return report;
}

bool check_eagon_reiner(const SquarefreeIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero()) throw zero_ideal_error("check_eagon_reiner of the zero ideal");
  if (!ideal.is_equigenerated()) {
    throw mixed_degree_error("check_eagon_reiner needs an equigenerated ideal");
  }
  int q = ideal.indeg();
  bool lhs = has_linear_resolution(ideal, field);
  SquarefreeIdeal dual = alexander_dual(ideal);
  InvariantReport dual_report = invariant_report(dual, field);
  bool rhs = dual_report.is_cohen_macaulay &&
             dual_report.dim_quotient == ideal.ambient_n() - q;
  return lhs == rhs;
}

bool check_terai(const SquarefreeIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero()) throw zero_ideal_error("check_terai of the zero ideal");
  int n = ideal.ambient_n();
  if (krull_dim_quotient(ideal) > n - 2) {
    throw not_applicable_error("check_terai needs dim S/I <= n - 2");
  }
  SquarefreeIdeal dual = alexander_dual(ideal);
  InvariantReport dual_report = invariant_report(dual, field);
  int lhs = dual_report.dim_quotient - dual_report.depth_quotient;
  int rhs = regularity(ideal, field) - ideal.indeg();
  return lhs == rhs;
}

bool betti_monotonicity_check(const Graph& g, VertexSet w, const FieldSpec& field) {
  Graph h = induced_subgraph(g, w);
  SquarefreeIdeal small = edge_ideal(complement(h));
  SquarefreeIdeal big = edge_ideal(complement(g));
  if (small.is_zero() || big.is_zero()) {
    throw zero_ideal_error("betti_monotonicity_check needs nonzero complement edge ideals");
  }
  BettiTable ts = betti_table(small, field);
  BettiTable tb = betti_table(big, field);
  for (const auto& [key, value] : ts.entries) {
    if (value > tb.at(key.first, key.second)) return false;
  }
  return true;
}

}  // namespace cmreg
