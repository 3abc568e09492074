#ifndef MACX_TRC_VERIFIER_HPP
#define MACX_TRC_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "macx/chain_complex.hpp"
#include "macx/simplicial_complex.hpp"

namespace macx {

inline constexpr const char* kToolVersion = "1.0.0";
/// Exhaustive enumeration of complexes stops here.
inline constexpr int kMaxEnumerationVertices = 4;
inline constexpr int kMaxRandomVertices = 16;

/// Upper bound m - 1 - dim K on the rank of a coordinate subtorus acting
/// almost freely on Z_K. The bound is attained, so it is reported as the
/// toral rank.
int trk_upper_bound(const SimplicialComplex& K);

struct TheoremCheck {
  std::size_t hrk = 0;      ///< hrk of the real moment-angle complex
  std::uint64_t bound = 0;  ///< 2^{m - mdim K - 1}
  bool ok = false;
  bool tight = false;
};

/// hrk(RZ_K) >= 2^{m - mdim K - 1}.
TheoremCheck check_theorem(const SimplicialComplex& K);

struct SliceCheck {
  int vertex = 0;
  int link_vertices = 0;  ///< k
  std::size_t lhs = 0;    ///< hrk(RZ_K)
  std::uint64_t rhs = 0;  ///< 2^{m-k-1} * hrk(RZ_{lk v})
  bool ok = false;
  bool tight = false;
};

/// Compares hrk(RZ_K) with the hrk of its slice through vertex v, a
/// disjoint union of 2^{m-k-1} copies of RZ_{lk v}.
SliceCheck slice_check(const SimplicialComplex& K, int v);

struct TrcFlags {
  bool theorem_ok = false;
  bool trc_ok = false;
  bool cross_check_ok = false;
  bool doubling_ok = false;
  bool slice_ok = false;

  bool all() const { return theorem_ok && trc_ok && cross_check_ok && doubling_ok && slice_ok; }
};

struct TrcReport {
  std::string id;
  SimplicialComplex complex;
  int m = 0;
  int dim = -1;
  int mdim = -1;
  int trk_bound = 0;
  std::size_t hrk_zk = 0;
  std::size_t hrk_rzk = 0;
  std::size_t hrk_rzk_double = 0;
  std::uint64_t theorem_bound = 0;
  std::uint64_t trc_bound = 0;
  bool theorem_tight = false;
  bool slice_tight = false;
  BettiTable zk_betti;
  TrcFlags flags;
};

/**
 * Runs the whole toral-rank chain on one complex:
 *   * graded Hochster Betti numbers of K against the cubical Betti numbers
 *     of L(K) (cross_check_ok);
 *   * dim/mdim of L(K) against m + dim K, m + mdim K (doubling_ok);
 *   * hrk(RZ_K) >= 2^{m - mdim - 1} (theorem_ok);
 *   * hrk(Z_K) >= 2^{m - 1 - dim} (trc_ok);
 *   * slice_check at every vertex (slice_ok).
 */
TrcReport check_trc(const SimplicialComplex& K, std::string id);

/// Every complex on [m] containing all singletons, each exactly once, in
/// a fixed order. m <= kMaxEnumerationVertices.
void for_each_complex(int m, const std::function<void(const SimplicialComplex&)>& visit);
std::vector<SimplicialComplex> enumerate_complexes(int m);

/// Seeded random complex: every subset of size >= 2 (ascending bit order)
/// is kept with probability `density`, then closed downward.
SimplicialComplex random_complex(int m, double density, std::uint64_t seed);

struct CorpusOptions {
  int max_m = kMaxEnumerationVertices;
  int random_count = 0;
  std::vector<int> random_ms;
  double density = 0.3;
  std::uint64_t seed = 42;
  unsigned workers = 0;
};

struct CorpusEntry {
  std::string id;
  SimplicialComplex complex;
};

/// Exhaustive complexes for m = 1..max_m, then random_count seeded
/// complexes (seeds seed, seed+1, ...) for each m in random_ms.
std::vector<CorpusEntry> build_corpus(const CorpusOptions& options);

struct CorpusReport {
  CorpusOptions options;
  std::vector<TrcReport> reports;

  bool all_ok() const;
};

CorpusReport run_corpus(const CorpusOptions& options);

nlohmann::json report_to_json(const TrcReport& report);
nlohmann::json corpus_to_json(const CorpusReport& report);
/// Wrapper used by `macx verify` for a single complex.
nlohmann::json verification_to_json(const TrcReport& report);

}  // namespace macx

#endif  // MACX_TRC_VERIFIER_HPP
