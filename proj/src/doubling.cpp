#include "macx/doubling.hpp"

#include <algorithm>
#include <string>

#include "macx/error.hpp"

namespace macx {

namespace {

void check_double_size(int m) {
  if (2 * m > kMaxVertices) {
    throw Error(ErrorCode::MTooLarge,
                "double of a complex on " + std::to_string(m) + " vertices exceeds " +
                    std::to_string(kMaxVertices) + " vertices");
  }
}

/// τ is a face of L(K) iff it contains no doubled minimal non-face.
class DoubledMembership {
 public:
  explicit DoubledMembership(const SimplicialComplex& K) {
    for (VertexSet sigma : K.minimal_non_faces()) doubled_.push_back(DoublingMap::double_set(sigma));
  }

  bool is_face(VertexSet tau) const {
    return std::none_of(doubled_.begin(), doubled_.end(),
                        [tau](VertexSet d) { return d.is_subset_of(tau); });
  }

  /// Could some face τ' ⊇ τ drawn from τ ∪ `later` still block v?
  bool blockable(VertexSet tau, int v, VertexSet later) const {
    const VertexSet reach = tau | later;
    return std::any_of(doubled_.begin(), doubled_.end(), [&](VertexSet d) {
      return d.contains(v) && d.without(v).is_subset_of(reach);
    });
  }

 private:
  std::vector<VertexSet> doubled_;
};

void grow(const DoubledMembership& oracle, int n, int v, VertexSet tau,
          std::vector<VertexSet>& out) {
  if (v > n) {
    for (int u = 1; u <= n; ++u) {
      if (!tau.contains(u) && oracle.is_face(tau.with(u))) return;
    }
    out.push_back(tau);
    return;
  }
  const VertexSet later(VertexSet::full(n).bits() & ~VertexSet::full(v).bits());
  if (oracle.is_face(tau.with(v))) grow(oracle, n, v + 1, tau.with(v), out);
  // Leaving v out only pays off if v ends up blocked.
  if (oracle.blockable(tau, v, later)) grow(oracle, n, v + 1, tau, out);
}

}  // namespace

VertexSet DoublingMap::double_set(VertexSet sigma) {
  VertexSet out;
  for (int i : sigma.vertices()) out = out.with(unprimed(i)).with(primed(i));
  return out;
}

VertexSet DoublingMap::full_pairs(VertexSet tau) {
  VertexSet out;
  for (int t : tau.vertices()) {
    const int i = source_of(t);
    if (tau.contains(unprimed(i)) && tau.contains(primed(i))) out = out.with(i);
  }
  return out;
}

SimplicialComplex double_complex(const SimplicialComplex& K) {
  const int m = K.vertex_count();
  check_double_size(m);
  const DoubledMembership oracle(K);
  std::vector<VertexSet> maximal;
  grow(oracle, 2 * m, 1, VertexSet{}, maximal);
  return SimplicialComplex::from_faces(2 * m, maximal);
}

SimplicialComplex double_complex_by_scan(const SimplicialComplex& K) {
  const int m = K.vertex_count();
  if (2 * m > 20) {
    throw Error(ErrorCode::MTooLargeForEnumeration,
                "subset scan of the double needs 2m <= 20, got 2m = " + std::to_string(2 * m));
  }
  const DoubledMembership oracle(K);
  std::vector<VertexSet> faces;
  const std::uint64_t limit = std::uint64_t{1} << (2 * m);
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (oracle.is_face(VertexSet(bits))) faces.push_back(VertexSet(bits));
  }
  return SimplicialComplex::from_faces(2 * m, faces);
}

std::vector<int> doubling_permutation(int m1, int m2) {
  check_double_size(m1 + m2);
  // Target vertex t of L(K1) * L(K2): t <= 2*m1 is (2i-1 or 2i) for i <= m1,
  // otherwise it is vertex t - 2*m1 of L(K2), i.e. the pair of i = m1 + j.
  // In L(K1 * K2) the same pair sits at (2(m1+j)-1, 2(m1+j)).
  std::vector<int> perm(static_cast<std::size_t>(2 * (m1 + m2)));
  for (int t = 1; t <= 2 * (m1 + m2); ++t) {
    int source;
    bool is_primed;
    if (t <= 2 * m1) {
      source = DoublingMap::source_of(t);
      is_primed = t == DoublingMap::primed(source);
    } else {
      const int local = t - 2 * m1;
      source = m1 + DoublingMap::source_of(local);
      is_primed = local == DoublingMap::primed(DoublingMap::source_of(local));
    }
    perm[static_cast<std::size_t>(t - 1)] =
        is_primed ? DoublingMap::primed(source) : DoublingMap::unprimed(source);
  }
  return perm;
}

}  // namespace macx
