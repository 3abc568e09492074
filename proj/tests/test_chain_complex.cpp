#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "macx/chain_complex.hpp"
#include "macx/cubical_model.hpp"
#include "macx/error.hpp"
#include "macx/trc_verifier.hpp"
#include "oracles.hpp"

using macx::BettiTable;
using macx::ChainComplex;
using macx::SimplicialComplex;

namespace {

SimplicialComplex rp2() {
  return SimplicialComplex::from_maximal_faces(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                   {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

BettiTable from_map(const std::map<int, std::size_t>& m) {
  BettiTable t;
  for (const auto& [p, r] : m) t.set(p, r);
  return t;
}

/// Applies random basis permutations to every chain group.
ChainComplex permuted(const ChainComplex& cc, std::mt19937_64& rng) {
  std::vector<Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int>> perms;
  for (std::size_t n : cc.sizes) {
    Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int> p(static_cast<int>(n));
    p.setIdentity();
    std::shuffle(p.indices().data(), p.indices().data() + n, rng);
    perms.push_back(p);
  }
  ChainComplex out = cc;
  for (std::size_t k = 0; k < cc.boundaries.size(); ++k) {
    macx::BoundaryMatrix d = perms[k] * cc.boundaries[k] * perms[k + 1].transpose();
    out.boundaries[k] = d;
  }
  return out;
}

long long euler_from_sizes(const ChainComplex& cc) {
  long long chi = 0;
  for (int p = cc.bottom_degree; p <= cc.top_degree(); ++p)
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(cc.size(p));
  return chi;
}

long long euler_from_betti(const BettiTable& t) {
  long long chi = 0;
  for (const auto& [p, r] : t.entries()) chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
  return chi;
}

}  // namespace

TEST_CASE("BettiTable bookkeeping") {
  BettiTable t{{0, 1}, {3, 0}, {5, 2}};
  CHECK(t.entries().size() == 2);
  CHECK(t.at(3) == 0);
  CHECK(t.hrk() == 3);
  t.add(0, 2);
  CHECK(t.at(0) == 3);
  CHECK(macx::convolve(BettiTable{{0, 1}, {1, 1}}, BettiTable{{0, 1}, {1, 1}}) == BettiTable{{0, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("betti of hand-built chain complexes") {
  ChainComplex point;
  point.sizes = {1};
  CHECK(macx::betti(point) == BettiTable{{0, 1}});

  // Triangle boundary, unaugmented: 3 vertices, 3 edges.
  const auto triangle = SimplicialComplex::simplex_boundary(3);
  const auto cc = macx::simplicial_chain_complex(triangle, false);
  CHECK(cc.sizes == std::vector<std::size_t>{3, 3});
  const std::size_t parts = oracle::components(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(macx::betti(cc) == BettiTable{{0, parts}, {1, 3 - 3 + parts}});
  CHECK(macx::betti(cc) == BettiTable{{0, 1}, {1, 1}});

  // Hollow square as a cubical complex.
  const auto square = macx::CubicalComplex::build(SimplicialComplex::simplex_boundary(2)).chain_complex();
  CHECK(square.sizes == std::vector<std::size_t>{4, 4});
  CHECK(macx::betti(square) == BettiTable{{0, 1}, {1, 1}});
}

TEST_CASE("malformed chain complexes are rejected") {
  ChainComplex bad;
  bad.sizes = {1, 1, 1};
  macx::BoundaryMatrix d1(1, 1), d2(1, 1);
  d1.insert(0, 0) = 1;
  d2.insert(0, 0) = 1;
  bad.boundaries = {d1, d2};
  CHECK_NOTHROW(bad.validate());
  try {
    macx::betti(bad, {.check_composition = true});
    FAIL("expected CompositionNonzero");
  } catch (const macx::Error& e) {
    CHECK(e.code() == macx::ErrorCode::CompositionNonzero);
  }

  ChainComplex wrong_shape;
  wrong_shape.sizes = {2, 1};
  wrong_shape.boundaries = {macx::BoundaryMatrix(3, 1)};
  try {
    wrong_shape.validate();
    FAIL("expected InvalidParameter");
  } catch (const macx::Error& e) {
    CHECK(e.code() == macx::ErrorCode::InvalidParameter);
  }
}

TEST_CASE("reduced_betti") {
  CHECK(macx::reduced_betti(SimplicialComplex()) == BettiTable{{-1, 1}});
  CHECK(macx::reduced_betti(SimplicialComplex::simplex(1)) == BettiTable{});
  CHECK(macx::reduced_betti(SimplicialComplex::simplex_boundary(3)) == BettiTable{{1, 1}});
  CHECK(macx::reduced_betti(SimplicialComplex::discrete(3)) == BettiTable{{0, 2}});
  CHECK(macx::reduced_betti(SimplicialComplex::simplex_boundary(5)) == BettiTable{{3, 1}});
}

TEST_CASE("six-vertex projective plane is rationally acyclic") {
  const auto K = rp2();
  // Input sanity: 10 triangles, 15 edges, each edge on exactly two triangles.
  const auto faces = oracle::scan_faces(K);
  std::size_t edges = 0;
  for (auto f : faces) {
    if (std::popcount(f) != 2) continue;
    ++edges;
    int cofaces = 0;
    for (macx::VertexSet t : K.maximal_faces()) cofaces += (f & ~t.bits()) == 0;
    CHECK(cofaces == 2);
  }
  CHECK(edges == 15);
  CHECK(oracle::reduced_betti(K).empty());
  CHECK(macx::reduced_betti(K) == BettiTable{});
  CHECK(macx::betti(macx::simplicial_chain_complex(K, true), {.check_composition = true}) == BettiTable{});
}

TEST_CASE("reduced_betti agrees with the dense fraction oracle") {
  for (int m = 1; m <= 7; ++m)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto K = macx::random_complex(m, 0.1 + 0.05 * static_cast<double>(seed), seed + 500);
      CHECK(macx::reduced_betti(K) == from_map(oracle::reduced_betti(K)));
    }
  for (int m = 0; m <= 4; ++m)
    for (const auto& K : macx::enumerate_complexes(m)) CHECK(macx::reduced_betti(K) == from_map(oracle::reduced_betti(K)));
}

TEST_CASE("property: Euler characteristic identities") {
  for (int m = 1; m <= 9; ++m)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto K = macx::random_complex(m, 0.2, seed * 13 + 1);
      const auto cc = macx::simplicial_chain_complex(K, true);
      const auto b = macx::betti(cc, {.check_composition = true});
      CHECK(euler_from_betti(b) == euler_from_sizes(cc));
      // χ(K) counts nonempty faces; the augmented sum is χ(K) - 1.
      const auto plain = macx::simplicial_chain_complex(K, false);
      CHECK(euler_from_betti(b) == -1 + euler_from_sizes(plain));
    }
}

TEST_CASE("property: betti is invariant under basis reordering") {
  std::mt19937_64 rng(5);
  for (int m = 3; m <= 8; ++m) {
    const auto K = macx::random_complex(m, 0.25, static_cast<std::uint64_t>(m) * 3);
    const auto cc = macx::simplicial_chain_complex(K, true);
    const auto expected = macx::betti(cc);
    for (int trial = 0; trial < 3; ++trial) {
      const auto shuffled = permuted(cc, rng);
      CHECK_NOTHROW(shuffled.check_composition());
      CHECK(macx::betti(shuffled) == expected);
    }
  }
  const auto cube = macx::CubicalComplex::build(macx::random_complex(6, 0.2, 1)).chain_complex();
  CHECK(macx::betti(permuted(cube, rng)) == macx::betti(cube));
}

TEST_CASE("property: reduced Betti numbers of a join convolve with a shift") {
  std::vector<SimplicialComplex> pool;
  for (int m = 0; m <= 3; ++m)
    for (const auto& K : macx::enumerate_complexes(m)) pool.push_back(K);
  pool.push_back(SimplicialComplex::simplex_boundary(4));
  pool.push_back(SimplicialComplex::from_maximal_faces(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (a.vertex_count() + b.vertex_count() > 8) continue;
      CHECK(macx::reduced_betti(macx::join(a, b)) ==
            macx::convolve(macx::reduced_betti(a), macx::reduced_betti(b), 1));
    }
}
