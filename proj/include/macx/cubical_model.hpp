#ifndef MACX_CUBICAL_MODEL_HPP
#define MACX_CUBICAL_MODEL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "macx/chain_complex.hpp"
#include "macx/simplicial_complex.hpp"

namespace macx {

/// Default limit on the number of cells of a cubical model.
inline constexpr std::uint64_t kDefaultCellBudget = std::uint64_t{1} << 24;

/**
 * Cell of the real moment-angle complex inside [-1, 1]^m: the coordinates
 * in `free` range over the interval, every other coordinate i is pinned to
 * +1 if i is in `positive` and to -1 otherwise.
 */
struct CubicalCell {
  VertexSet free;
  VertexSet positive;  ///< subset of the complement of `free`

  int dimension() const { return free.size(); }
  bool operator==(const CubicalCell&) const = default;
};

/**
 * The cubical complex (I^1, S^0)^K: one cell (ω, ε) per face ω of K and
 * sign vector ε on [m] \ ω.
 *
 * Cells of dimension p are indexed face-major (faces of size p in
 * ascending order) and then by ε read as a binary number over the pinned
 * coordinates, so indices are reproducible across runs.
 */
class CubicalComplex {
 public:
  static CubicalComplex build(const SimplicialComplex& K, std::uint64_t budget = kDefaultCellBudget);

  /// Σ_{ω ∈ K} 2^{m - |ω|}, saturating at UINT64_MAX.
  static std::uint64_t cell_count(const SimplicialComplex& K);

  const SimplicialComplex& source() const { return K_; }
  int vertex_count() const { return K_.vertex_count(); }
  int top_dimension() const { return dim(K_) + 1; }
  std::size_t cells_in_dimension(int p) const;
  std::size_t total_cells() const;

  CubicalCell cell(int p, std::size_t index) const;
  std::size_t index_of(const CubicalCell& c) const;

  /// Signed faces of `c`, Leibniz rule over ascending free coordinates.
  std::vector<std::pair<CubicalCell, int>> boundary(const CubicalCell& c) const;

  ChainComplex chain_complex() const;

 private:
  explicit CubicalComplex(SimplicialComplex K) : K_(std::move(K)) {}

  SimplicialComplex K_;
};

std::vector<std::pair<CubicalCell, int>> boundary(const CubicalCell& c);

/// Betti numbers of the real moment-angle complex of K over Q.
BettiTable betti_rzk(const SimplicialComplex& K, std::uint64_t budget = kDefaultCellBudget);
std::size_t hrk_rzk(const SimplicialComplex& K, std::uint64_t budget = kDefaultCellBudget);

}  // namespace macx

#endif  // MACX_CUBICAL_MODEL_HPP
