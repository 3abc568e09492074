#ifndef MACX_CHAIN_COMPLEX_HPP
#define MACX_CHAIN_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "macx/exact_rank.hpp"
#include "macx/simplicial_complex.hpp"

namespace macx {

/**
 * Finite chain complex C_{d0} <- C_{d0+1} <- ... with integer boundaries.
 *
 * sizes[k] is the rank of C_{d0+k}; boundaries[k] is D_{d0+k+1}, a
 * sizes[k] x sizes[k+1] matrix.
 */
struct ChainComplex {
  int bottom_degree = 0;
  std::vector<std::size_t> sizes;
  std::vector<BoundaryMatrix> boundaries;

  int top_degree() const { return bottom_degree + static_cast<int>(sizes.size()) - 1; }
  std::size_t size(int p) const;
  /// D_p : C_p -> C_{p-1}; p in (bottom_degree, top_degree].
  const BoundaryMatrix& boundary(int p) const;

  /// Throws InvalidParameter when matrix shapes do not chain.
  void validate() const;
  /// Throws CompositionNonzero when some D_{p-1} D_p != 0.
  void check_composition() const;
};

/// Degree -> rank over Q. Zero ranks are not stored.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<const int, std::size_t>> entries);

  void set(int degree, std::size_t rank);
  void add(int degree, std::size_t rank);
  std::size_t at(int degree) const;
  /// Sum of all ranks.
  std::size_t hrk() const;
  const std::map<int, std::size_t>& entries() const& { return ranks_; }
  const std::map<int, std::size_t>& entries() const&& = delete;

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<int, std::size_t> ranks_;
};

/// Degree-wise convolution: (a * b)_p = sum_{i+j = p - shift} a_i b_j.
BettiTable convolve(const BettiTable& a, const BettiTable& b, int shift = 0);

struct BettiOptions {
  bool check_composition = false;
};

/// b_p = c_p - rank D_p - rank D_{p+1}, all ranks exact over Q.
BettiTable betti(const ChainComplex& cc, BettiOptions options = {});

/// Simplicial chains of K with faces ordered as in enumerate_faces; the
/// augmented version starts at degree -1 with C_{-1} spanned by ∅.
ChainComplex simplicial_chain_complex(const SimplicialComplex& K, bool augmented);

/// Reduced Betti numbers of K over Q, degrees -1..dim K.
BettiTable reduced_betti(const SimplicialComplex& K);

}  // namespace macx

#endif  // MACX_CHAIN_COMPLEX_HPP
