#ifndef CMREG_IDEAL_HPP
#define CMREG_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cmreg/graph.hpp"

namespace cmreg {

class SimplicialComplex;

/** Squarefree monomial ideal in K[x_1..x_n], identified with the antichain
 *  of its minimal generator supports. The zero ideal has no generators; the
 *  unit ideal (an empty support) is rejected by every constructor. */
class SquarefreeIdeal {
public:
  /** The zero ideal in n variables. */
  static SquarefreeIdeal zero(int ambient_n);
  /** Build from arbitrary supports; non-minimal supports are dropped.
   *  Throws unit_ideal_error if any support is empty, std::invalid_argument
   *  on indices outside 1..ambient_n. */
  static SquarefreeIdeal from_supports(int ambient_n,
                                       const std::vector<std::vector<int>>& supports);
  /** Same, supports given as bitmasks. */
  static SquarefreeIdeal from_masks(int ambient_n, std::vector<std::uint64_t> masks);

  int ambient_n() const { return ambient_n_; }
  bool is_zero() const { return gens_.empty(); }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  const std::vector<std::uint64_t>& generator_masks() const { return gens_; }
  std::vector<std::vector<int>> generators() const;  // sorted supports

  /** Smallest generator degree. Throws zero_ideal_error on the zero ideal. */
  int indeg() const;
  /** True when every generator has the same degree. */
  bool is_equigenerated() const;

  friend bool operator==(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    return a.ambient_n_ == b.ambient_n_ && a.gens_ == b.gens_;
  }

private:
  SquarefreeIdeal(int ambient_n, std::vector<std::uint64_t> sorted_antichain);
  int ambient_n_;
  std::vector<std::uint64_t> gens_;  // antichain, sorted ascending as integers
};

/** Drop the non-minimal supports. Same error conditions as from_supports. */
SquarefreeIdeal minimalize(int ambient_n, const std::vector<std::vector<int>>& supports);

/** Edge ideal: one degree-2 generator x_u x_v per edge of G. The edgeless
 *  graph gives the zero ideal. */
SquarefreeIdeal edge_ideal(const Graph& g);

/** Alexander dual: generators are the minimal transversals of the generator
 *  supports, built by incremental intersection of the vertex primes.
 *  Throws zero_ideal_error on the zero ideal. */
SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal);

/** Sum of two ideals in the same ambient ring (union of generators,
 *  minimalized). */
SquarefreeIdeal ideal_sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/** Intersection of two ideals in the same ambient ring (pairwise support
 *  unions, minimalized). Intersecting with the zero ideal is zero. */
SquarefreeIdeal ideal_intersection(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/** Krull dimension of S/I: ambient_n minus the smallest dual generator
 *  degree. Throws zero_ideal_error on the zero ideal. */
int krull_dim_quotient(const SquarefreeIdeal& ideal);

/** Stanley-Reisner complex: faces are exactly the subsets of 1..n containing
 *  no generator support. Throws zero_ideal_error on the zero ideal. */
SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal);

}  // namespace cmreg

#endif
