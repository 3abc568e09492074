#ifndef MACX_DOUBLING_HPP
#define MACX_DOUBLING_HPP

#include <vector>

#include "macx/simplicial_complex.hpp"

namespace macx {

/**
 * Vertex bookkeeping for the double L(K): the pair (v_i, v_i') of [m]
 * lands on positions (2i-1, 2i) of [2m].
 */
struct DoublingMap {
  int source_m = 0;

  int target_m() const { return 2 * source_m; }
  static constexpr int unprimed(int i) { return 2 * i - 1; }
  static constexpr int primed(int i) { return 2 * i; }
  /// Source vertex whose pair contains target vertex t.
  static constexpr int source_of(int t) { return (t + 1) / 2; }

  /// d(σ) = ∪_{i ∈ σ} {2i-1, 2i}.
  static VertexSet double_set(VertexSet sigma);
  /// {i : both 2i-1 and 2i lie in τ}.
  static VertexSet full_pairs(VertexSet tau);
};

/**
 * The double L(K) on 2m vertices. Its minimal non-faces are exactly the
 * doubled minimal non-faces of K; maximal faces are grown depth-first from
 * that membership test.
 */
SimplicialComplex double_complex(const SimplicialComplex& K);

/// Same complex as double_complex, by scanning every subset of [2m].
/// Only for 2m <= 20; used to cross-check the depth-first construction.
SimplicialComplex double_complex_by_scan(const SimplicialComplex& K);

/// Permutation π of [2(m1+m2)] (π[t-1] is the image of t) such that
/// relabel(join(L(K1), L(K2)), π) == L(join(K1, K2)).
std::vector<int> doubling_permutation(int m1, int m2);

}  // namespace macx

#endif  // MACX_DOUBLING_HPP
