#ifndef CMREG_TESTS_ORACLES_HPP
#define CMREG_TESTS_ORACLES_HPP

// Test-side oracles, deliberately built on different machinery than the
// library: Betti numbers come from the squarefree strand of the Koszul
// complex with rational/naive-modular Gaussian elimination, and duals from
// the 2^n transversal filter.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cmreg/graph.hpp"
#include "cmreg/homology.hpp"
#include "cmreg/ideal.hpp"

namespace cmreg::tests {

/** beta_{i,j}(I) over the field, via Koszul homology of S/I (shifted by one
 *  homological step). Intended for ambient_n <= 7. */
std::map<std::pair<int, int>, long long> koszul_betti(const SquarefreeIdeal& ideal,
                                                      const FieldSpec& field);

/** max(j - i) over koszul_betti. */
int koszul_regularity(const SquarefreeIdeal& ideal, const FieldSpec& field);

/** Alexander dual as the minimal members of all 2^n transversals. */
SquarefreeIdeal brute_force_dual(const SquarefreeIdeal& ideal);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

/** Facets of the 6-vertex triangulation of the real projective plane (its
 *  homology tells Q and GF(2) apart). */
std::vector<std::vector<int>> projective_plane_facets();

}  // namespace cmreg::tests

#endif
