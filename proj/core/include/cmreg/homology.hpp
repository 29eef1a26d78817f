#ifndef CMREG_HOMOLOGY_HPP
#define CMREG_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cmreg/graph.hpp"

namespace cmreg {

/** Coefficient field: the rationals, or a prime field GF(p) with p < 2^31.
 *  Primality is validated at construction. */
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;  // "Q" or "GF(p)"

  friend bool operator==(FieldSpec a, FieldSpec b) { return a.p_ == b.p_; }

private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/** dims[k] = dim_K of reduced homology in degree k, for k = -1 .. dim. */
using HomologyProfile = std::map<int, long long>;

/** Abstract simplicial complex on ground set 1..n, stored by its facets
 *  (an antichain of bitmasks). Two degenerate cases are distinct: the void
 *  complex has no faces at all (no facets), while the empty complex {∅} has
 *  the single facet ∅. */
class SimplicialComplex {
public:
  /** The void complex on n vertices. */
  static SimplicialComplex void_complex(int n);
  /** The complex {∅}. */
  static SimplicialComplex empty_complex(int n);
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_facet_masks(int n, std::vector<std::uint64_t> facets);

  int ground_set_size() const { return n_; }
  bool is_void() const { return facets_.empty(); }
  /** -1 for {∅}; meaningless (throws) for the void complex. */
  int dimension() const;
  const std::vector<std::uint64_t>& facet_masks() const { return facets_; }
  std::vector<std::vector<int>> facets() const;
  bool has_face(std::uint64_t mask) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

private:
  SimplicialComplex(int n, std::vector<std::uint64_t> facets);
  int n_;
  std::vector<std::uint64_t> facets_;  // antichain, sorted
};

/** Complex whose faces are the cliques of G (vertices always included). */
SimplicialComplex clique_complex(const Graph& g);

/** Faces contained in W, relabeled order-preservingly to 1..|W|. Restricting
 *  a nonvoid complex to W = ∅ gives {∅}; the void complex stays void. */
SimplicialComplex restrict(const SimplicialComplex& complex, VertexSet w);

/** Reduced simplicial homology dimensions over K, exactly: ranks of the
 *  boundary maps are computed by fraction-free integer elimination (over Q)
 *  or modular elimination (over GF(p)). Supports ground sets up to 20
 *  vertices; larger inputs throw std::invalid_argument. */
HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& field);

/** Boundary matrix from k-faces to (k-1)-faces with respect to the faces
 *  sorted ascending as bitmasks; entries are 0 or ±1. k = 0 gives the
 *  augmentation row. Exposed for property tests. */
std::vector<std::vector<long long>> boundary_matrix(const SimplicialComplex& complex, int k);

namespace detail {

/** Homology profile from per-cardinality face lists: faces_by_card[c] holds
 *  the card-c faces as sorted bitmasks (c = 0 is the empty face when the
 *  complex is nonvoid). The workhorse behind reduced_homology and the
 *  Hochster scan. */
HomologyProfile homology_from_faces(const std::vector<std::vector<std::uint64_t>>& faces_by_card,
                                    const FieldSpec& field);

}  // namespace detail

}  // namespace cmreg

#endif
