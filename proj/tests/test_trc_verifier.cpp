#include <bit>
#include <set>

#include "doctest.h"
#include "macx/complex_json.hpp"
#include "macx/cubical_model.hpp"
#include "macx/error.hpp"
#include "macx/trc_verifier.hpp"
#include "oracles.hpp"

using macx::SimplicialComplex;

namespace {

SimplicialComplex cycle4() { return SimplicialComplex::from_maximal_faces(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

/// Face sets (as bit masks of all faces) of every complex on [m] with all
/// singletons, found by testing each family of subsets of size >= 2 for
/// downward closure.
std::set<std::set<std::uint64_t>> brute_force_families(int m) {
  std::vector<std::uint64_t> big;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s)
    if (std::popcount(s) >= 2) big.push_back(s);
  std::set<std::set<std::uint64_t>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << big.size()); ++pick) {
    std::set<std::uint64_t> faces{0};
    for (int v = 0; v < m; ++v) faces.insert(std::uint64_t{1} << v);
    for (std::size_t i = 0; i < big.size(); ++i)
      if (pick >> i & 1) faces.insert(big[i]);
    bool closed = true;
    for (auto f : faces)
      for (int v = 0; v < m && closed; ++v)
        if ((f >> v & 1) && !faces.count(f & ~(std::uint64_t{1} << v))) closed = false;
    if (closed) out.insert(faces);
  }
  return out;
}

}  // namespace

TEST_CASE("toral rank bound examples") {
  CHECK(macx::trk_upper_bound(SimplicialComplex::simplex_boundary(2)) == 1);
  CHECK(macx::trk_upper_bound(cycle4()) == 2);
  CHECK(macx::trk_upper_bound(SimplicialComplex::discrete(3)) == 2);
  for (int m = 1; m <= 5; ++m) CHECK(macx::trk_upper_bound(SimplicialComplex::simplex(m)) == 0);
  CHECK(macx::trk_upper_bound(SimplicialComplex()) == 0);
}

TEST_CASE("theorem check examples") {
  const auto s0 = macx::check_theorem(SimplicialComplex::simplex_boundary(2));
  CHECK(s0.hrk == 2);
  CHECK(s0.bound == 2);
  CHECK(s0.tight);

  const auto square = macx::check_theorem(cycle4());
  CHECK(square.hrk == 4);
  CHECK(square.bound == 4);
  CHECK(square.tight);

  for (int m = 1; m <= 5; ++m) {
    const auto full = macx::check_theorem(SimplicialComplex::simplex(m));
    CHECK(full.hrk == 1);
    CHECK(full.bound == 1);
    CHECK(full.tight);
  }

  const auto points = macx::check_theorem(SimplicialComplex::discrete(3));
  CHECK(points.hrk == 6);
  CHECK(points.bound == 4);
  CHECK(points.ok);
  CHECK_FALSE(points.tight);
}

TEST_CASE("slice check examples") {
  const auto slice = macx::slice_check(cycle4(), 1);
  CHECK(slice.link_vertices == 2);
  CHECK(slice.lhs == 4);
  CHECK(slice.rhs == 4);
  CHECK(slice.tight);

  // A cone point: the link is the base, k = m - 1.
  const auto cone = SimplicialComplex::from_maximal_faces(3, {{1, 3}, {2, 3}});
  const auto apex = macx::slice_check(cone, 3);
  CHECK(apex.link_vertices == 2);
  CHECK(apex.rhs == 2);
  CHECK(apex.lhs == macx::hrk_rzk(cone));
}

TEST_CASE("check_trc on the square") {
  const auto r = macx::check_trc(cycle4(), "square");
  CHECK(r.id == "square");
  CHECK(r.m == 4);
  CHECK(r.dim == 1);
  CHECK(r.mdim == 1);
  CHECK(r.trk_bound == 2);
  CHECK(r.hrk_zk == 4);
  CHECK(r.hrk_rzk == 4);
  CHECK(r.hrk_rzk_double == 4);
  CHECK(r.trc_bound == 4);
  CHECK(r.theorem_tight);
  CHECK(r.slice_tight);
  CHECK(r.zk_betti == macx::BettiTable{{0, 1}, {3, 2}, {6, 1}});
  CHECK(r.flags.all());
}

TEST_CASE("exhaustive enumeration") {
  CHECK(macx::enumerate_complexes(0).size() == 1);
  CHECK(macx::enumerate_complexes(1).size() == 1);
  CHECK(macx::enumerate_complexes(2).size() == 2);
  CHECK(macx::enumerate_complexes(3).size() == 9);
  for (int m = 1; m <= 4; ++m) {
    const auto expected = brute_force_families(m);
    std::set<std::set<std::uint64_t>> seen;
    std::size_t visits = 0;
    macx::for_each_complex(m, [&](const SimplicialComplex& K) {
      ++visits;
      seen.insert(oracle::scan_faces(K));
    });
    CHECK(visits == expected.size());
    CHECK(seen == expected);
  }
  CHECK(brute_force_families(4).size() == 114);
  CHECK_THROWS_AS(macx::enumerate_complexes(5), macx::Error);
  CHECK_THROWS_AS(macx::enumerate_complexes(-1), macx::Error);
}

TEST_CASE("random complexes") {
  SUBCASE("density limits") {
    for (int m = 1; m <= 8; ++m) {
      CHECK(macx::random_complex(m, 1e-12, 3) == SimplicialComplex::discrete(m));
      CHECK(macx::random_complex(m, 1 - 1e-12, 3) == SimplicialComplex::simplex(m));
    }
  }
  SUBCASE("regression snapshots") {
    CHECK(macx::complex_to_json(macx::random_complex(5, 0.3, 42)).dump() ==
          R"({"m":5,"maximal_faces":[[1,2,3,4,5]]})");
    CHECK(macx::complex_to_json(macx::random_complex(6, 0.3, 42)).dump() ==
          R"({"m":6,"maximal_faces":[[1,3,4,6],[2,3,4,6],[1,2,3,4,5],[1,2,4,5,6]]})");
    CHECK(macx::complex_to_json(macx::random_complex(8, 0.05, 7)).dump() ==
          R"({"m":8,"maximal_faces":[[2,6,8],[1,3,4,5],[2,4,5,8],[3,5,7,8],[2,3,4,5,6],[2,3,4,5,7],[1,3,4,6,7],[1,2,3,5,6,7]]})");
  }
  SUBCASE("same seed, same complex") {
    CHECK(macx::random_complex(7, 0.2, 11) == macx::random_complex(7, 0.2, 11));
  }
  SUBCASE("parameter errors") {
    for (auto [m, density] : {std::pair{0, 0.3}, {17, 0.3}, {5, 0.0}, {5, 1.0}, {5, -0.5}}) {
      try {
        macx::random_complex(m, density, 1);
        FAIL("expected InvalidParameter");
      } catch (const macx::Error& e) {
        CHECK(e.code() == macx::ErrorCode::InvalidParameter);
      }
    }
  }
}

TEST_CASE("corpus reports") {
  macx::CorpusOptions options;
  options.max_m = 3;
  options.random_count = 4;
  options.random_ms = {5};
  options.density = 0.1;
  options.workers = 1;
  const auto serial = macx::corpus_to_json(macx::run_corpus(options)).dump();
  options.workers = 3;
  const auto threaded = macx::corpus_to_json(macx::run_corpus(options)).dump();
  CHECK(serial == threaded);

  const auto j = nlohmann::json::parse(serial);
  CHECK(j["complexes"] == 1 + 2 + 9 + 4);
  CHECK(j["all_ok"] == true);
  CHECK(j["reports"][0]["id"] == "enum-m1-0000");
  CHECK(j["reports"][12]["id"] == "random-m5-s42");
  CHECK(j["parameters"]["random_m"] == nlohmann::json::array({5}));
}

TEST_CASE("property: hrk(Z_K) is at least 2^trk over the enumerated corpus") {
  for (int m = 1; m <= 4; ++m)
    for (const auto& K : macx::enumerate_complexes(m)) {
      const auto r = macx::check_trc(K, "k");
      CHECK(r.hrk_zk >= (std::uint64_t{1} << macx::trk_upper_bound(K)));
      CHECK(r.flags.all());
    }
}
