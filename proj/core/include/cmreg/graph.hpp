#ifndef CMREG_GRAPH_HPP
#define CMREG_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmreg {

/** Subset of the vertex labels {1..n}, stored as a bitmask (vertex v is
 *  bit v-1). Supports up to 62 vertices, matching the graph6 short form. */
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static VertexSet of(std::initializer_list<int> vertices);
  static VertexSet from_vertices(const std::vector<int>& vertices);
  static VertexSet full(int n);

  std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::vector<int> vertices() const;  // ascending, 1-based

  VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << (v - 1))); }
  VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1))); }

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

/** Finite simple graph on vertex labels 1..n (n <= 62). Immutable after
 *  construction; adjacency is kept as one bitmask row per vertex. */
class Graph {
public:
  /** Graph with n vertices and no edges. */
  explicit Graph(int n);
  /** Graph with the given edges; duplicate pairs are idempotent.
   *  Throws std::invalid_argument on self-loops or labels outside 1..n. */
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;           // ascending, 1-based
  std::uint64_t neighbor_bits(int v) const { return adj_[v - 1]; }
  std::vector<std::pair<int, int>> edges() const;    // u < v, lexicographic

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_;
  std::vector<std::uint64_t> adj_;
};

/** Decode one graph6 record (short form, n <= 62, no header).
 *  Throws parse_error naming the byte offset on malformed input. */
Graph parse_graph6(std::string_view text);

/** Encode as a graph6 record; parse_graph6(emit_graph6(G)) == G. */
std::string emit_graph6(const Graph& g);

/** Decode the edge-list text format: first line "n", then one "u v" line
 *  per edge (1-based labels). Blank lines are skipped, duplicate edges are
 *  idempotent. Throws parse_error on self-loops, labels out of range, or
 *  non-integer tokens. */
Graph parse_edge_list(std::string_view text);

/** Complement graph on the same labels (an involution). */
Graph complement(const Graph& g);

/** Subgraph induced on W, relabeled order-preservingly to 1..|W|.
 *  Throws std::invalid_argument when W is empty or not within 1..n. */
Graph induced_subgraph(const Graph& g, VertexSet w);

/** True when N(v) induces a clique; isolated and degree-1 vertices count. */
bool is_simplicial(const Graph& g, int v);

/** All vertex degrees equal n-1. K_1 is complete. */
bool is_complete(const Graph& g);

struct ChordalityCertificate {
  bool chordal = false;
  /** When chordal: an ordering where each vertex is simplicial in the graph
   *  induced by itself and its successors. */
  std::vector<int> elimination_order;
  /** Otherwise: vertex labels of an induced cycle of length >= 4. */
  std::vector<int> chordless_cycle;
};

/** Maximum-cardinality-search chordality test with a checkable certificate
 *  either way. */
ChordalityCertificate is_chordal(const Graph& g);

struct SmoothableVertex {
  int w = 0;  // the degree-2 vertex
  int a = 0;  // its neighbors, a < b
  int b = 0;
};

/** First vertex w (ascending) with deg(w) = 2, non-adjacent neighbors a, b,
 *  and no other vertex adjacent to both a and b. */
std::optional<SmoothableVertex> find_smoothable_vertex(const Graph& g);

/** Delete a degree-2 vertex w and join its two neighbors, relabeling the
 *  survivors order-preservingly. Throws std::invalid_argument when deg(w)
 *  is not 2 or the neighbors are already adjacent. */
Graph smooth(const Graph& g, int w);

/** Inverse of smooth: remove edge {a,b} and attach a new vertex (label n+1)
 *  to both a and b. Throws std::invalid_argument when {a,b} is not an edge. */
Graph subdivide_edge(const Graph& g, int a, int b);

struct Decomposition {
  VertexSet p, q;  // proper covering pair; p ∩ q is a clique with no
                   // p-only to q-only edges
};

/** Search for a separation of G into induced parts overlapping in a clique.
 *  Tried in order: empty separator (disconnected), cut vertices, then clique
 *  separators of size 2..separator_cap. Returns the first hit; a miss only
 *  means no step applies at this cap. */
std::optional<Decomposition> find_decomposition(const Graph& g, int separator_cap = 3);

/** Cycle length when G is connected and 2-regular with n >= 3. */
std::optional<int> is_cycle_graph(const Graph& g);

/** Component index (0-based) for each vertex 1..n. */
std::vector<int> component_labels(const Graph& g);

/** Graph with vertex i relabeled to perm[i-1] (perm is a permutation of
 *  1..n). Used by relabeling-invariance tests. */
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace cmreg

#endif
