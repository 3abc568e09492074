#include "macx/cubical_model.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "macx/error.hpp"

namespace macx {

namespace {

std::size_t face_index(const std::vector<VertexSet>& faces, VertexSet f) {
  return static_cast<std::size_t>(std::lower_bound(faces.begin(), faces.end(), f) - faces.begin());
}

/// Inserts `bit` at position k of a packed sign word.
constexpr std::uint64_t insert_bit(std::uint64_t word, int k, bool bit) {
  const std::uint64_t low = word & ((std::uint64_t{1} << k) - 1);
  return low | ((word >> k) << (k + 1)) | (bit ? std::uint64_t{1} << k : 0);
}

}  // namespace

std::vector<std::pair<CubicalCell, int>> boundary(const CubicalCell& c) {
  std::vector<std::pair<CubicalCell, int>> out;
  out.reserve(static_cast<std::size_t>(2 * c.dimension()));
  int sign = 1;  // (-1)^{number of free coordinates below i}
  for (int i : c.free.vertices()) {
    const VertexSet free = c.free.without(i);
    out.push_back({CubicalCell{free, c.positive.with(i)}, sign});
    out.push_back({CubicalCell{free, c.positive}, -sign});
    sign = -sign;
  }
  return out;
}

std::uint64_t CubicalComplex::cell_count(const SimplicialComplex& K) {
  const int m = K.vertex_count();
  std::uint64_t total = 0;
  const FaceList& faces = K.faces();
  for (int p = -1; p <= faces.max_dim(); ++p) {
    const std::uint64_t per_face = std::uint64_t{1} << (m - (p + 1));
    const std::uint64_t n = faces.of_dim(p).size();
    if (n != 0 && per_face > (std::numeric_limits<std::uint64_t>::max() - total) / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total += n * per_face;
  }
  return total;
}

CubicalComplex CubicalComplex::build(const SimplicialComplex& K, std::uint64_t budget) {
  const int m = K.vertex_count();
  // The ∅ face alone carries 2^m vertices of the cube.
  if (m >= 63 || (std::uint64_t{1} << m) > budget) {
    throw Error(ErrorCode::CellBudgetExceeded,
                "at least 2^" + std::to_string(m) + " cells needed, budget " + std::to_string(budget));
  }
  const std::uint64_t needed = cell_count(K);
  if (needed > budget) {
    throw Error(ErrorCode::CellBudgetExceeded,
                std::to_string(needed) + " cells needed, budget " + std::to_string(budget));
  }
  return CubicalComplex(K);
}

std::size_t CubicalComplex::cells_in_dimension(int p) const {
  if (p < 0 || p > top_dimension()) return 0;
  return K_.faces().of_dim(p - 1).size() << (vertex_count() - p);
}

std::size_t CubicalComplex::total_cells() const {
  std::size_t n = 0;
  for (int p = 0; p <= top_dimension(); ++p) n += cells_in_dimension(p);
  return n;
}

CubicalCell CubicalComplex::cell(int p, std::size_t index) const {
  const int pinned = vertex_count() - p;
  const VertexSet free = K_.faces().of_dim(p - 1).at(index >> pinned);
  const std::uint64_t signs = index & ((std::uint64_t{1} << pinned) - 1);
  return {free, VertexSet(expand_bits(signs, free.complement(vertex_count()).bits()))};
}

std::size_t CubicalComplex::index_of(const CubicalCell& c) const {
  const int p = c.dimension();
  const int pinned = vertex_count() - p;
  const std::size_t f = face_index(K_.faces().of_dim(p - 1), c.free);
  return (f << pinned) | compress_bits(c.positive.bits(), c.free.complement(vertex_count()).bits());
}

std::vector<std::pair<CubicalCell, int>> CubicalComplex::boundary(const CubicalCell& c) const {
  return macx::boundary(c);
}

ChainComplex CubicalComplex::chain_complex() const {
  const int m = vertex_count();
  const int top = top_dimension();
  const FaceList& faces = K_.faces();
  ChainComplex cc;
  cc.bottom_degree = 0;
  for (int p = 0; p <= top; ++p) cc.sizes.push_back(cells_in_dimension(p));

  for (int p = 1; p <= top; ++p) {
    const auto& free_sets = faces.of_dim(p - 1);
    const auto& lower = faces.of_dim(p - 2);
    const int pinned = m - p;
    const std::uint64_t signs_per_face = std::uint64_t{1} << pinned;
    BoundaryMatrix d(static_cast<Eigen::Index>(cc.sizes[static_cast<std::size_t>(p - 1)]),
                     static_cast<Eigen::Index>(cc.sizes[static_cast<std::size_t>(p)]));
    d.reserve(Eigen::VectorXi::Constant(d.cols(), 2 * p));

    struct Facet {
      std::uint64_t base;  // first index of the facet's cells in dimension p-1
      int slot;            // position of the released coordinate among the pinned ones
      int sign;
    };
    std::vector<Facet> facets;
    for (std::size_t f = 0; f < free_sets.size(); ++f) {
      const VertexSet omega = free_sets[f];
      const VertexSet pinned_set = omega.complement(m);
      facets.clear();
      int sign = 1;
      for (int i : omega.vertices()) {
        const std::uint64_t g = face_index(lower, omega.without(i));
        facets.push_back({g << (pinned + 1), pinned_set.count_below(i), sign});
        sign = -sign;
      }
      for (std::uint64_t e = 0; e < signs_per_face; ++e) {
        const auto col = static_cast<Eigen::Index>((f << pinned) | e);
        for (const Facet& facet : facets) {
          d.insert(static_cast<Eigen::Index>(facet.base | insert_bit(e, facet.slot, true)), col) = facet.sign;
          d.insert(static_cast<Eigen::Index>(facet.base | insert_bit(e, facet.slot, false)), col) = -facet.sign;
        }
      }
    }
    d.makeCompressed();
    cc.boundaries.push_back(std::move(d));
  }
  return cc;
}

BettiTable betti_rzk(const SimplicialComplex& K, std::uint64_t budget) {
  return betti(CubicalComplex::build(K, budget).chain_complex());
}

std::size_t hrk_rzk(const SimplicialComplex& K, std::uint64_t budget) {
  return betti_rzk(K, budget).hrk();
}

}  // namespace macx
