#include "cmreg/ideal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cmreg/errors.hpp"
#include "cmreg/homology.hpp"

namespace cmreg {

namespace {

/** Keep the inclusion-minimal masks, sorted ascending. */
std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < masks.size() && minimal; ++j) {
      if (i != j && (masks[j] & ~masks[i]) == 0) {
        // masks[j] ⊆ masks[i]; equal masks were deduplicated above
        minimal = false;
      }
    }
    if (minimal) out.push_back(masks[i]);
  }
  return out;
}

}  // namespace

SquarefreeIdeal::SquarefreeIdeal(int ambient_n, std::vector<std::uint64_t> sorted_antichain)
    : ambient_n_(ambient_n), gens_(std::move(sorted_antichain)) {}

SquarefreeIdeal SquarefreeIdeal::zero(int ambient_n) {
  if (ambient_n < 1) throw std::invalid_argument("ideal needs at least one variable");
  return SquarefreeIdeal(ambient_n, {});
}

SquarefreeIdeal SquarefreeIdeal::from_masks(int ambient_n, std::vector<std::uint64_t> masks) {
  if (ambient_n < 1) throw std::invalid_argument("ideal needs at least one variable");
  if (ambient_n > 62) throw std::invalid_argument("at most 62 variables supported");
  std::uint64_t full = VertexSet::full(ambient_n).bits();
  for (std::uint64_t m : masks) {
    if (m == 0) throw unit_ideal_error("unit ideal (empty generator support) rejected");
    if (m & ~full) {
      throw std::invalid_argument("generator support outside 1.." + std::to_string(ambient_n));
    }
  }
  return SquarefreeIdeal(ambient_n, minimal_masks(std::move(masks)));
}

SquarefreeIdeal SquarefreeIdeal::from_supports(int ambient_n,
                                               const std::vector<std::vector<int>>& supports) {
  std::vector<std::uint64_t> masks;
  masks.reserve(supports.size());
  for (const auto& s : supports) {
    if (s.empty()) throw unit_ideal_error("unit ideal (empty generator support) rejected");
    std::uint64_t m = 0;
    for (int v : s) {
      if (v < 1 || v > ambient_n) {
        throw std::invalid_argument("generator index outside 1.." + std::to_string(ambient_n));
      }
      m |= std::uint64_t{1} << (v - 1);
    }
    masks.push_back(m);
  }
  return from_masks(ambient_n, std::move(masks));
}

std::vector<std::vector<int>> SquarefreeIdeal::generators() const {
  std::vector<std::vector<int>> out;
  out.reserve(gens_.size());
  for (std::uint64_t m : gens_) out.push_back(VertexSet(m).vertices());
  return out;
}

int SquarefreeIdeal::indeg() const {
  if (gens_.empty()) throw zero_ideal_error("indeg of the zero ideal");
  int best = 64;
  for (std::uint64_t m : gens_) best = std::min(best, std::popcount(m));
  return best;
}

bool SquarefreeIdeal::is_equigenerated() const {
  for (std::uint64_t m : gens_) {
    if (std::popcount(m) != std::popcount(gens_.front())) return false;
  }
  return true;
}

SquarefreeIdeal minimalize(int ambient_n, const std::vector<std::vector<int>>& supports) {
  return SquarefreeIdeal::from_supports(ambient_n, supports);
}

SquarefreeIdeal edge_ideal(const Graph& g) {
  std::vector<std::uint64_t> masks;
  for (auto [u, v] : g.edges()) {
    masks.push_back((std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (v - 1)));
  }
  return SquarefreeIdeal::from_masks(g.vertex_count(), std::move(masks));
}

SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw zero_ideal_error("alexander_dual of the zero ideal");
  const auto& gens = ideal.generator_masks();
  // Incremental prime intersection: transversals of the first k generators,
  // kept minimal after each extension.
  std::vector<std::uint64_t> trans;
  for (std::uint64_t v = gens.front(); v; v &= v - 1) {
    trans.push_back(v & ~(v - 1));  // lowest set bit as a singleton
  }
  for (std::size_t k = 1; k < gens.size(); ++k) {
    std::uint64_t g = gens[k];
    std::vector<std::uint64_t> next;
    for (std::uint64_t t : trans) {
      if (t & g) {
        next.push_back(t);
        continue;
      }
      for (std::uint64_t v = g; v; v &= v - 1) {
        next.push_back(t | (v & ~(v - 1)));
      }
    }
    trans = minimal_masks(std::move(next));
  }
  return SquarefreeIdeal::from_masks(ideal.ambient_n(), std::move(trans));
}

SquarefreeIdeal ideal_sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.ambient_n() != b.ambient_n()) {
    throw std::invalid_argument("ideal_sum: ambient mismatch");
  }
  std::vector<std::uint64_t> masks = a.generator_masks();
  masks.insert(masks.end(), b.generator_masks().begin(), b.generator_masks().end());
  return SquarefreeIdeal::from_masks(a.ambient_n(), std::move(masks));
}

SquarefreeIdeal ideal_intersection(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.ambient_n() != b.ambient_n()) {
    throw std::invalid_argument("ideal_intersection: ambient mismatch");
  }
  if (a.is_zero() || b.is_zero()) return SquarefreeIdeal::zero(a.ambient_n());
  std::vector<std::uint64_t> masks;
  for (std::uint64_t x : a.generator_masks()) {
    for (std::uint64_t y : b.generator_masks()) {
      masks.push_back(x | y);
    }
  }
  return SquarefreeIdeal::from_masks(a.ambient_n(), std::move(masks));
}

int krull_dim_quotient(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw zero_ideal_error("krull_dim_quotient of the zero ideal");
  return ideal.ambient_n() - alexander_dual(ideal).indeg();
}

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw zero_ideal_error("stanley_reisner_complex of the zero ideal");
  // Facets are the complements of the minimal transversals.
  SquarefreeIdeal dual = alexander_dual(ideal);
  std::uint64_t full = VertexSet::full(ideal.ambient_n()).bits();
  std::vector<std::uint64_t> facets;
  for (std::uint64_t t : dual.generator_masks()) facets.push_back(full & ~t);
  return SimplicialComplex::from_facet_masks(ideal.ambient_n(), std::move(facets));
}

}  // namespace cmreg
