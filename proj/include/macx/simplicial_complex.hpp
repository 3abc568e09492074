#ifndef MACX_SIMPLICIAL_COMPLEX_HPP
#define MACX_SIMPLICIAL_COMPLEX_HPP

#include <memory>
#include <span>
#include <vector>

#include "macx/vertex_set.hpp"

namespace macx {

/// All faces of a complex grouped by dimension. by_dim[p + 1] holds the
/// p-dimensional faces in ascending numeric order; by_dim[0] is {∅}.
struct FaceList {
  std::vector<std::vector<VertexSet>> by_dim;

  int max_dim() const { return static_cast<int>(by_dim.size()) - 2; }
  const std::vector<VertexSet>& of_dim(int p) const { return by_dim.at(static_cast<std::size_t>(p + 1)); }
  std::size_t total() const;
};

namespace detail {
struct ComplexCache;
}

/**
 * Finite simplicial complex on the vertex set [m], stored by its maximal
 * faces.
 *
 * Values are canonical: maximal faces form an antichain sorted by
 * (cardinality, bits), every vertex of [m] is a face, and the empty complex
 * (m = 0) has the single maximal face ∅. Two complexes are equal iff their
 * representations are identical. Derived data (face list, minimal
 * non-faces) is computed lazily and shared between copies.
 */
class SimplicialComplex {
 public:
  /// The empty complex on zero vertices.
  SimplicialComplex();

  /// Validating constructor from 1-indexed vertex lists.
  static SimplicialComplex from_maximal_faces(int m, const std::vector<std::vector<int>>& faces);
  /// Validating constructor from vertex sets; redundant faces are dropped.
  static SimplicialComplex from_faces(int m, std::span<const VertexSet> faces);

  static SimplicialComplex simplex(int m);
  static SimplicialComplex simplex_boundary(int m);
  static SimplicialComplex discrete(int m);

  int vertex_count() const { return m_; }
  const std::vector<VertexSet>& maximal_faces() const { return maximal_; }
  VertexSet vertex_set() const { return VertexSet::full(m_); }

  /// Cached; safe to call concurrently.
  const FaceList& faces() const&;
  const FaceList& faces() const&& = delete;
  /// Cached; safe to call concurrently.
  const std::vector<VertexSet>& minimal_non_faces() const&;
  const std::vector<VertexSet>& minimal_non_faces() const&& = delete;

  bool operator==(const SimplicialComplex& other) const {
    return m_ == other.m_ && maximal_ == other.maximal_;
  }

 private:
  SimplicialComplex(int m, std::vector<VertexSet> maximal);

  int m_ = 0;
  std::vector<VertexSet> maximal_;
  std::shared_ptr<detail::ComplexCache> cache_;
};

bool is_face(const SimplicialComplex& K, VertexSet sigma);
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& K);
const FaceList& enumerate_faces(const SimplicialComplex& K);
const FaceList& enumerate_faces(const SimplicialComplex&& K) = delete;

int dim(const SimplicialComplex& K);
int mdim(const SimplicialComplex& K);

/// K1 * K2 on m1 + m2 vertices; K2's vertices are shifted by m1.
SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2);

struct Link {
  SimplicialComplex complex;
  int vertex_count = 0;  ///< k: size of the link's vertex support
  VertexSet support;     ///< support in the labels of the original complex
};

/// lk_K(v), re-indexed order-preservingly onto [k].
Link link(const SimplicialComplex& K, int v);

/// Full subcomplex K_ω re-indexed order-preservingly onto [|ω|].
SimplicialComplex restriction(const SimplicialComplex& K, VertexSet omega);

/// Relabels vertex v as perm[v - 1]; perm must be a permutation of [m].
SimplicialComplex relabel(const SimplicialComplex& K, std::span<const int> perm);
VertexSet relabel(VertexSet s, std::span<const int> perm);

}  // namespace macx

#endif  // MACX_SIMPLICIAL_COMPLEX_HPP
