#ifndef MACX_HOCHSTER_HPP
#define MACX_HOCHSTER_HPP

#include <map>
#include <utility>

#include "macx/chain_complex.hpp"
#include "macx/simplicial_complex.hpp"

namespace macx {

/// Largest m for which all 2^m full subcomplexes are enumerated.
inline constexpr int kMaxHochsterVertices = 20;

/**
 * Decomposition of H*(Z_K; Q) into reduced cohomology of full
 * subcomplexes: (ω, p) -> rank of H̃^p(K_ω). Only nonzero ranks are kept.
 */
struct HochsterTable {
  std::map<std::pair<VertexSet, int>, std::size_t> entries;

  std::size_t hrk() const;
  /// A class (ω, p) sits in total degree p + |ω| + 1.
  BettiTable graded() const;

  bool operator==(const HochsterTable&) const = default;
};

HochsterTable hochster_table(const SimplicialComplex& K, unsigned workers = 0);

/// Total rank of H*(Z_K; Q).
std::size_t hrk_zk(const SimplicialComplex& K);
/// Graded Betti numbers of Z_K over Q.
BettiTable betti_zk(const SimplicialComplex& K);

}  // namespace macx

#endif  // MACX_HOCHSTER_HPP
