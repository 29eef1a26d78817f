#include "cmreg/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <queue>
#include <stdexcept>

#include "cmreg/errors.hpp"

namespace cmreg {

namespace {

constexpr int kMaxVertices = 62;

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

void check_label(int n, int v, const char* what) {
  if (v < 1 || v > n) {
    throw std::invalid_argument(std::string(what) + ": vertex label " +
                                std::to_string(v) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  std::uint64_t b = 0;
  for (int v : vertices) b |= bit(v);
  return VertexSet(b);
}

VertexSet VertexSet::from_vertices(const std::vector<int>& vertices) {
  std::uint64_t b = 0;
  for (int v : vertices) b |= bit(v);
  return VertexSet(b);
}

VertexSet VertexSet::full(int n) {
  if (n == 0) return VertexSet(0);
  return VertexSet(~std::uint64_t{0} >> (64 - n));
}

int VertexSet::size() const { return std::popcount(bits_); }

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices) {
    throw std::invalid_argument("graphs larger than 62 vertices are not supported");
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_label(n, u, "from_edges");
    check_label(n, v, "from_edges");
    if (u == v) {
      throw std::invalid_argument("from_edges: self-loop at vertex " + std::to_string(u));
    }
    g.adj_[u - 1] |= bit(v);
    g.adj_[v - 1] |= bit(u);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_label(n_, u, "has_edge");
  check_label(n_, v, "has_edge");
  return (adj_[u - 1] >> (v - 1)) & 1u;
}

int Graph::degree(int v) const {
  check_label(n_, v, "degree");
  return std::popcount(adj_[v - 1]);
}

std::vector<int> Graph::neighbors(int v) const {
  check_label(n_, v, "neighbors");
  return VertexSet(adj_[v - 1]).vertices();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    std::uint64_t later = adj_[u - 1] >> u;  // neighbors above u
    for (std::uint64_t b = later; b; b &= b - 1) {
      out.emplace_back(u, u + 1 + std::countr_zero(b));
    }
  }
  return out;
}

// ------------------------------------------------------------------- graph6

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("graph6: empty input", 0);
  unsigned char first = static_cast<unsigned char>(text[0]);
  if (first == '~') {
    throw parse_error("graph6: long vertex-count form is not supported (n > 62)", 0);
  }
  if (first < 63 || first > 126) {
    throw parse_error("graph6: vertex-count byte outside printable range", 0);
  }
  int n = static_cast<int>(first) - 63;
  if (n == 0) throw parse_error("graph6: vertex count must be positive", 0);

  std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t expect = 1 + (pair_bits + 5) / 6;
  if (text.size() < expect) {
    throw parse_error("graph6: record too short for n=" + std::to_string(n), text.size());
  }
  if (text.size() > expect) {
    throw parse_error("graph6: trailing bytes after record", expect);
  }

  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;  // index into the pair-bit stream
  for (int col = 2; col <= n; ++col) {
    for (int row = 1; row < col; ++row, ++k) {
      std::size_t byte_at = 1 + k / 6;
      unsigned char c = static_cast<unsigned char>(text[byte_at]);
      if (c < 63 || c > 126) {
        throw parse_error("graph6: byte outside printable range", byte_at);
      }
      int value = c - 63;
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(row, col);
    }
  }
  // padding bits beyond the k-th must be zero
  for (std::size_t pad = k; pad < (expect - 1) * 6; ++pad) {
    std::size_t byte_at = 1 + pad / 6;
    unsigned char c = static_cast<unsigned char>(text[byte_at]);
    if (c < 63 || c > 126) {
      throw parse_error("graph6: byte outside printable range", byte_at);
    }
    if (((c - 63) >> (5 - pad % 6)) & 1) {
      throw parse_error("graph6: nonzero padding bit", byte_at);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, filled = 0;
  for (int col = 2; col <= n; ++col) {
    for (int row = 1; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------- edge list

Graph parse_edge_list(std::string_view text) {
  struct Cursor {
    std::string_view s;
    std::size_t at = 0;
    void skip_blanks() {
      while (at < s.size() && (s[at] == ' ' || s[at] == '\t' || s[at] == '\r' || s[at] == '\n')) ++at;
    }
    bool done() {
      skip_blanks();
      return at >= s.size();
    }
    long long integer(const char* what) {
      skip_blanks();
      std::size_t start = at;
      long long value = 0;
      auto [ptr, ec] = std::from_chars(s.data() + at, s.data() + s.size(), value);
      if (ec != std::errc() || (ptr != s.data() + s.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
        throw parse_error(std::string("edge list: expected ") + what, start);
      }
      at = static_cast<std::size_t>(ptr - s.data());
      return value;
    }
  };

  Cursor cur{text};
  if (cur.done()) throw parse_error("edge list: empty input", 0);
  long long n = cur.integer("vertex count");
  if (n < 1) throw parse_error("edge list: vertex count must be positive", 0);
  if (n > kMaxVertices) throw parse_error("edge list: at most 62 vertices supported", 0);

  std::vector<std::pair<int, int>> edges;
  while (!cur.done()) {
    std::size_t line_at = cur.at;
    long long u = cur.integer("vertex label");
    if (cur.done()) throw parse_error("edge list: dangling vertex label", line_at);
    long long v = cur.integer("vertex label");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw parse_error("edge list: vertex label outside 1.." + std::to_string(n), line_at);
    }
    if (u == v) throw parse_error("edge list: self-loop", line_at);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

// --------------------------------------------------------------- operations

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  int n = g.vertex_count();
  if (w.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  if (w.bits() & ~VertexSet::full(n).bits()) {
    throw std::invalid_argument("induced_subgraph: vertex set not within 1..n");
  }
  std::vector<int> keep = w.vertices();  // keep[i] is the old label of new i+1
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j])) {
        edges.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
      }
    }
  }
  return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

namespace {

bool is_clique(const Graph& g, std::uint64_t members) {
  for (std::uint64_t b = members; b; b &= b - 1) {
    int v = std::countr_zero(b) + 1;
    std::uint64_t rest = members & ~bit(v);
    if ((g.neighbor_bits(v) & rest) != rest) return false;
  }
  return true;
}

}  // namespace

bool is_simplicial(const Graph& g, int v) {
  check_label(g.vertex_count(), v, "is_simplicial");
  return is_clique(g, g.neighbor_bits(v));
}

bool is_complete(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) != n - 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------- chordality

namespace {

/** Maximum cardinality search: repeatedly number an unnumbered vertex with
 *  the most numbered neighbors (lowest label on ties). The reverse of the
 *  visit order is a perfect elimination ordering iff the graph is chordal. */
std::vector<int> mcs_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> numbered(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v) {
      if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    order.push_back(best);
    for (int u : g.neighbors(best)) {
      if (!numbered[u]) ++weight[u];
    }
  }
  return order;
}

bool verify_elimination_order(const Graph& g, const std::vector<int>& peo) {
  int n = g.vertex_count();
  std::vector<std::uint64_t> later_mask(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t seen = 0;
  for (int k = n - 1; k >= 0; --k) {
    later_mask[peo[static_cast<std::size_t>(k)]] = seen;
    seen |= bit(peo[static_cast<std::size_t>(k)]);
  }
  for (int v = 1; v <= n; ++v) {
    if (!is_clique(g, g.neighbor_bits(v) & later_mask[v])) return false;
  }
  return true;
}

/** Hunt an induced cycle of length >= 4: for a vertex v with non-adjacent
 *  neighbors a, b, a shortest a-b path avoiding the rest of N[v] closes up
 *  with v into a chordless cycle. Some such triple works in any non-chordal
 *  graph, because any induced long cycle supplies one. */
std::vector<int> find_chordless_cycle(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 1; v <= n; ++v) {
    std::vector<int> nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int a = nb[i], b = nb[j];
        if (g.has_edge(a, b)) continue;
        // BFS from a to b inside (V \ N[v]) ∪ {a, b}
        std::uint64_t allowed =
            (VertexSet::full(n).bits() & ~g.neighbor_bits(v) & ~bit(v)) | bit(a) | bit(b);
        std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
        std::queue<int> q;
        q.push(a);
        parent[a] = a;
        while (!q.empty() && parent[b] == 0) {
          int x = q.front();
          q.pop();
          for (std::uint64_t m = g.neighbor_bits(x) & allowed; m; m &= m - 1) {
            int y = std::countr_zero(m) + 1;
            if (parent[y] == 0) {
              parent[y] = x;
              q.push(y);
            }
          }
        }
        if (parent[b] == 0) continue;
        std::vector<int> path;
        for (int x = b; x != a; x = parent[x]) path.push_back(x);
        path.push_back(a);
        path.push_back(v);  // cycle: v, a, ..., b
        std::reverse(path.begin(), path.end());
        return path;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityCertificate is_chordal(const Graph& g) {
  std::vector<int> order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  ChordalityCertificate cert;
  if (verify_elimination_order(g, order)) {
    cert.chordal = true;
    cert.elimination_order = std::move(order);
    return cert;
  }
  cert.chordal = false;
  cert.chordless_cycle = find_chordless_cycle(g);
  return cert;
}

// ----------------------------------------------------------- smooth / split

std::optional<SmoothableVertex> find_smoothable_vertex(const Graph& g) {
  int n = g.vertex_count();
  for (int w = 1; w <= n; ++w) {
    if (g.degree(w) != 2) continue;
    std::vector<int> nb = g.neighbors(w);
    int a = nb[0], b = nb[1];
    if (g.has_edge(a, b)) continue;
    std::uint64_t common = g.neighbor_bits(a) & g.neighbor_bits(b) & ~bit(w);
    if (common) continue;
    return SmoothableVertex{w, a, b};
  }
  return std::nullopt;
}

Graph smooth(const Graph& g, int w) {
  check_label(g.vertex_count(), w, "smooth");
  if (g.degree(w) != 2) throw std::invalid_argument("smooth: vertex degree is not 2");
  std::vector<int> nb = g.neighbors(w);
  if (g.has_edge(nb[0], nb[1])) {
    throw std::invalid_argument("smooth: the two neighbors are already adjacent");
  }
  std::vector<std::pair<int, int>> edges;
  auto newlabel = [w](int v) { return v < w ? v : v - 1; };
  for (auto [u, v] : g.edges()) {
    if (u == w || v == w) continue;
    edges.emplace_back(newlabel(u), newlabel(v));
  }
  edges.emplace_back(newlabel(nb[0]), newlabel(nb[1]));
  return Graph::from_edges(g.vertex_count() - 1, edges);
}

Graph subdivide_edge(const Graph& g, int a, int b) {
  if (!g.has_edge(a, b)) throw std::invalid_argument("subdivide_edge: not an edge");
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if ((u == a && v == b) || (u == b && v == a)) continue;
    edges.emplace_back(u, v);
  }
  edges.emplace_back(a, n + 1);
  edges.emplace_back(b, n + 1);
  return Graph::from_edges(n + 1, edges);
}

std::vector<int> component_labels(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[s - 1] >= 0) continue;
    comp[s - 1] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (comp[y - 1] < 0) {
          comp[y - 1] = next;
          q.push(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

namespace {

/** Split along separator S (possibly empty) if G - S is disconnected:
 *  P = S plus the component of the smallest remaining vertex, Q = the rest. */
std::optional<Decomposition> split_at(const Graph& g, std::uint64_t sep) {
  int n = g.vertex_count();
  std::uint64_t rest = VertexSet::full(n).bits() & ~sep;
  if (!rest) return std::nullopt;
  int start = std::countr_zero(rest) + 1;
  std::uint64_t comp = bit(start);
  for (;;) {  // closure of `comp` inside `rest`
    std::uint64_t grow = comp;
    for (std::uint64_t m = comp; m; m &= m - 1) {
      grow |= g.neighbor_bits(std::countr_zero(m) + 1) & rest;
    }
    if (grow == comp) break;
    comp = grow;
  }
  if (comp == rest) return std::nullopt;  // G - S connected
  return Decomposition{VertexSet(sep | comp), VertexSet(sep | (rest & ~comp))};
}

}  // namespace

std::optional<Decomposition> find_decomposition(const Graph& g, int separator_cap) {
  int n = g.vertex_count();
  if (auto d = split_at(g, 0)) return d;  // disconnected
  for (int v = 1; v <= n && separator_cap >= 1; ++v) {
    if (auto d = split_at(g, bit(v))) return d;  // cut vertex
  }
  // clique separators of size 2..cap, subsets in lexicographic label order
  for (int size = 2; size <= separator_cap; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    auto search = [&](auto&& self, int depth, int from, std::uint64_t mask) -> std::optional<Decomposition> {
      if (depth == size) {
        if (!is_clique(g, mask)) return std::nullopt;
        return split_at(g, mask);
      }
      for (int v = from; v <= n; ++v) {
        if (auto d = self(self, depth + 1, v + 1, mask | bit(v))) return d;
      }
      return std::nullopt;
    };
    if (auto d = search(search, 0, 1, 0)) return d;
  }
  return std::nullopt;
}

std::optional<int> is_cycle_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3) return std::nullopt;
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  const std::vector<int> comp = component_labels(g);
  for (int c : comp) {
    if (c != 0) return std::nullopt;
  }
  return n;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(perm[static_cast<std::size_t>(u) - 1], perm[static_cast<std::size_t>(v) - 1]);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace cmreg
