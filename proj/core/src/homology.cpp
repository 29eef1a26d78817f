#include "cmreg/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rank.hpp"

namespace cmreg {

namespace {

constexpr int kHomologyVertexCap = 20;

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> antichain_max(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < masks.size() && maximal; ++j) {
      if (i != j && (masks[i] & ~masks[j]) == 0) maximal = false;
    }
    if (maximal) out.push_back(masks[i]);
  }
  return out;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31)) {
    throw std::invalid_argument("prime field characteristic must be < 2^31");
  }
  if (!is_prime_u32(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

SimplicialComplex::SimplicialComplex(int n, std::vector<std::uint64_t> facets)
    : n_(n), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  if (n < 0 || n > 62) throw std::invalid_argument("ground set size outside 0..62");
  return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
  if (n < 0 || n > 62) throw std::invalid_argument("ground set size outside 0..62");
  return SimplicialComplex(n, {0});
}

SimplicialComplex SimplicialComplex::from_facet_masks(int n, std::vector<std::uint64_t> facets) {
  if (n < 0 || n > 62) throw std::invalid_argument("ground set size outside 0..62");
  std::uint64_t full = VertexSet::full(n).bits();
  for (std::uint64_t f : facets) {
    if (f & ~full) throw std::invalid_argument("facet outside the ground set");
  }
  return SimplicialComplex(n, antichain_max(std::move(facets)));
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 const std::vector<std::vector<int>>& facets) {
  std::vector<std::uint64_t> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) masks.push_back(VertexSet::from_vertices(f).bits());
  return from_facet_masks(n, std::move(masks));
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) throw std::logic_error("dimension of the void complex");
  int top = 0;
  for (std::uint64_t f : facets_) top = std::max(top, std::popcount(f));
  return top - 1;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  out.reserve(facets_.size());
  for (std::uint64_t f : facets_) out.push_back(VertexSet(f).vertices());
  return out;
}

bool SimplicialComplex::has_face(std::uint64_t mask) const {
  for (std::uint64_t f : facets_) {
    if ((mask & ~f) == 0) return true;
  }
  return false;
}

SimplicialComplex clique_complex(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint64_t> out;
  // Bron-Kerbosch with a pivot; every maximal clique is a facet.
  auto expand = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    int pivot = std::countr_zero(p ? p : x) + 1;
    std::uint64_t candidates = p & ~g.neighbor_bits(pivot);
    for (std::uint64_t m = candidates; m; m &= m - 1) {
      int v = std::countr_zero(m) + 1;
      std::uint64_t vb = std::uint64_t{1} << (v - 1);
      self(self, r | vb, p & g.neighbor_bits(v), x & g.neighbor_bits(v));
      p &= ~vb;
      x |= vb;
    }
  };
  expand(expand, 0, VertexSet::full(n).bits(), 0);
  return SimplicialComplex::from_facet_masks(n, std::move(out));
}

SimplicialComplex restrict(const SimplicialComplex& complex, VertexSet w) {
  if (w.bits() & ~VertexSet::full(complex.ground_set_size()).bits()) {
    throw std::invalid_argument("restrict: vertex set not within the ground set");
  }
  if (complex.is_void()) return SimplicialComplex::void_complex(w.size());
  // Relabel order-preservingly: old vertex keep[i] becomes i+1.
  std::vector<int> keep = w.vertices();
  std::vector<std::uint64_t> restricted;
  for (std::uint64_t f : complex.facet_masks()) {
    std::uint64_t inside = f & w.bits();
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if ((inside >> (keep[i] - 1)) & 1u) packed |= std::uint64_t{1} << i;
    }
    restricted.push_back(packed);
  }
  return SimplicialComplex::from_facet_masks(w.size(), std::move(restricted));
}

namespace detail {

HomologyProfile homology_from_faces(const std::vector<std::vector<std::uint64_t>>& faces_by_card,
                                    const FieldSpec& field) {
  HomologyProfile profile;
  int top = static_cast<int>(faces_by_card.size());
  while (top > 0 && faces_by_card[static_cast<std::size_t>(top) - 1].empty()) --top;
  if (top == 0) return profile;  // void complex: no homology in any degree

  // ranks[c] = rank of the boundary map from card-c faces to card-(c-1) faces
  std::vector<int> ranks(static_cast<std::size_t>(top) + 1, 0);
  for (int c = 1; c < top; ++c) {
    const auto& rows = faces_by_card[static_cast<std::size_t>(c) - 1];
    const auto& cols = faces_by_card[static_cast<std::size_t>(c)];
    IntMatrix m;
    m.rows = static_cast<int>(rows.size());
    m.cols = static_cast<int>(cols.size());
    m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (int j = 0; j < m.cols; ++j) {
      std::uint64_t face = cols[static_cast<std::size_t>(j)];
      int sign = 1;
      for (std::uint64_t b = face; b; b &= b - 1) {
        std::uint64_t sub = face & ~(b & ~(b - 1));
        auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        m.at(static_cast<int>(it - rows.begin()), j) = sign;
        sign = -sign;
      }
    }
    ranks[static_cast<std::size_t>(c)] = rank_over(m, field);
  }

  for (int c = 0; c < top; ++c) {
    long long faces = static_cast<long long>(faces_by_card[static_cast<std::size_t>(c)].size());
    long long h = faces - ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c) + 1];
    profile[c - 1] = h;
  }
  return profile;
}

}  // namespace detail

namespace {

std::vector<std::vector<std::uint64_t>> enumerate_faces(const SimplicialComplex& complex) {
  int n = complex.ground_set_size();
  if (n > kHomologyVertexCap) {
    throw std::invalid_argument("reduced_homology supports at most 20 vertices");
  }
  std::vector<std::vector<std::uint64_t>> faces_by_card;
  if (complex.is_void()) return faces_by_card;
  faces_by_card.resize(static_cast<std::size_t>(complex.dimension()) + 2);
  // Mark every subset of every facet, then bucket by cardinality.
  std::vector<bool> face(std::size_t{1} << n, false);
  for (std::uint64_t f : complex.facet_masks()) {
    for (std::uint64_t s = f;; s = (s - 1) & f) {
      face[s] = true;
      if (s == 0) break;
    }
  }
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (face[s]) faces_by_card[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  }
  return faces_by_card;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& field) {
  return detail::homology_from_faces(enumerate_faces(complex), field);
}

std::vector<std::vector<long long>> boundary_matrix(const SimplicialComplex& complex, int k) {
  auto faces_by_card = enumerate_faces(complex);
  std::vector<std::vector<long long>> out;
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= faces_by_card.size()) return out;
  const auto& rows = faces_by_card[static_cast<std::size_t>(k)];
  const auto& cols = faces_by_card[static_cast<std::size_t>(k) + 1];
  out.assign(rows.size(), std::vector<long long>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::uint64_t face = cols[j];
    int sign = 1;
    for (std::uint64_t b = face; b; b &= b - 1) {
      std::uint64_t sub = face & ~(b & ~(b - 1));
      auto it = std::lower_bound(rows.begin(), rows.end(), sub);
      out[static_cast<std::size_t>(it - rows.begin())][j] = sign;
      sign = -sign;
    }
  }
  return out;
}

}  // namespace cmreg
