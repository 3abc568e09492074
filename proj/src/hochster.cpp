#include "macx/hochster.hpp"

#include <string>
#include <vector>

#include "macx/error.hpp"
#include "macx/parallel.hpp"

namespace macx {

std::size_t HochsterTable::hrk() const {
  std::size_t total = 0;
  for (const auto& [key, rank] : entries) total += rank;
  return total;
}

BettiTable HochsterTable::graded() const {
  BettiTable out;
  for (const auto& [key, rank] : entries) out.add(key.second + key.first.size() + 1, rank);
  return out;
}

HochsterTable hochster_table(const SimplicialComplex& K, unsigned workers) {
  const int m = K.vertex_count();
  if (m > kMaxHochsterVertices) {
    throw Error(ErrorCode::MTooLargeForEnumeration,
                "full-subcomplex enumeration needs m <= " + std::to_string(kMaxHochsterVertices) +
                    ", got " + std::to_string(m));
  }
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<BettiTable> per_subset(subsets);
  parallel_for(
      subsets, [&](std::size_t bits) { per_subset[bits] = reduced_betti(restriction(K, VertexSet(bits))); },
      workers);

  HochsterTable table;
  for (std::size_t bits = 0; bits < subsets; ++bits) {
    for (const auto& [p, rank] : per_subset[bits].entries()) table.entries[{VertexSet(bits), p}] = rank;
  }
  return table;
}

std::size_t hrk_zk(const SimplicialComplex& K) { return hochster_table(K).hrk(); }

BettiTable betti_zk(const SimplicialComplex& K) { return hochster_table(K).graded(); }

}  // namespace macx
