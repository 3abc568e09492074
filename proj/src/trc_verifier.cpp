#include "macx/trc_verifier.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "macx/complex_json.hpp"
#include "macx/cubical_model.hpp"
#include "macx/doubling.hpp"
#include "macx/error.hpp"
#include "macx/hochster.hpp"
#include "macx/parallel.hpp"

namespace macx {

namespace {

std::uint64_t power_of_two(int exponent) { return std::uint64_t{1} << exponent; }

std::string padded(std::size_t n, int width) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%0*zu", width, n);
  return buffer;
}

}  // namespace

int trk_upper_bound(const SimplicialComplex& K) { return K.vertex_count() - 1 - dim(K); }

TheoremCheck check_theorem(const SimplicialComplex& K) {
  TheoremCheck check;
  check.hrk = hrk_rzk(K);
  check.bound = power_of_two(K.vertex_count() - mdim(K) - 1);
  check.ok = check.hrk >= check.bound;
  check.tight = check.hrk == check.bound;
  return check;
}

SliceCheck slice_check(const SimplicialComplex& K, int v) {
  const Link lk = link(K, v);
  SliceCheck check;
  check.vertex = v;
  check.link_vertices = lk.vertex_count;
  check.lhs = hrk_rzk(K);
  check.rhs = power_of_two(K.vertex_count() - lk.vertex_count - 1) * hrk_rzk(lk.complex);
  check.ok = check.lhs >= check.rhs;
  check.tight = check.lhs == check.rhs;
  return check;
}

TrcReport check_trc(const SimplicialComplex& K, std::string id) {
  TrcReport r;
  r.id = std::move(id);
  r.complex = K;
  r.m = K.vertex_count();
  r.dim = dim(K);
  r.mdim = mdim(K);
  r.trk_bound = trk_upper_bound(K);

  const HochsterTable table = hochster_table(K, /*workers=*/1);
  r.zk_betti = table.graded();
  r.hrk_zk = table.hrk();

  const SimplicialComplex doubled = double_complex(K);
  const BettiTable doubled_betti = betti_rzk(doubled);
  r.hrk_rzk_double = doubled_betti.hrk();

  const TheoremCheck theorem = check_theorem(K);
  r.hrk_rzk = theorem.hrk;
  r.theorem_bound = theorem.bound;
  r.theorem_tight = theorem.tight;
  r.trc_bound = power_of_two(r.trk_bound);

  r.flags.theorem_ok = theorem.ok;
  r.flags.trc_ok = r.hrk_zk >= r.trc_bound;
  r.flags.cross_check_ok = r.zk_betti == doubled_betti && r.hrk_zk == r.hrk_rzk_double;
  r.flags.doubling_ok = dim(doubled) == r.m + r.dim && mdim(doubled) == r.m + r.mdim;
  r.flags.slice_ok = true;
  for (int v = 1; v <= r.m; ++v) {
    const SliceCheck slice = slice_check(K, v);
    r.flags.slice_ok = r.flags.slice_ok && slice.ok;
    r.slice_tight = r.slice_tight || slice.tight;
  }
  return r;
}

void for_each_complex(int m, const std::function<void(const SimplicialComplex&)>& visit) {
  if (m < 0 || m > kMaxEnumerationVertices) {
    throw Error(ErrorCode::MTooLargeForEnumeration,
                "exhaustive enumeration needs 0 <= m <= " + std::to_string(kMaxEnumerationVertices));
  }
  std::vector<VertexSet> candidates;
  for (std::uint64_t bits = 0; bits < power_of_two(m); ++bits) {
    if (VertexSet(bits).size() >= 2) candidates.push_back(VertexSet(bits));
  }
  std::sort(candidates.begin(), candidates.end(), ByCardinality{});

  // Faces chosen so far, indexed by bits; singletons and ∅ are always in.
  std::vector<char> chosen(power_of_two(m), 0);
  chosen[0] = 1;
  for (int v = 1; v <= m; ++v) chosen[VertexSet::singleton(v).bits()] = 1;

  // Candidates come in order of cardinality, so a set can be added exactly
  // when all of its facets are already present.
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == candidates.size()) {
      std::vector<VertexSet> faces;
      for (std::uint64_t bits = 0; bits < chosen.size(); ++bits)
        if (chosen[bits]) faces.push_back(VertexSet(bits));
      visit(SimplicialComplex::from_faces(m, faces));
      return;
    }
    const VertexSet c = candidates[i];
    search(i + 1);
    const auto vs = c.vertices();
    const bool closed = std::all_of(vs.begin(), vs.end(), [&](int v) { return chosen[c.without(v).bits()]; });
    if (closed) {
      chosen[c.bits()] = 1;
      search(i + 1);
      chosen[c.bits()] = 0;
    }
  };
  search(0);
}

std::vector<SimplicialComplex> enumerate_complexes(int m) {
  std::vector<SimplicialComplex> out;
  for_each_complex(m, [&](const SimplicialComplex& K) { out.push_back(K); });
  return out;
}

SimplicialComplex random_complex(int m, double density, std::uint64_t seed) {
  if (m < 1 || m > kMaxRandomVertices) {
    throw Error(ErrorCode::InvalidParameter,
                "random complexes need 1 <= m <= " + std::to_string(kMaxRandomVertices));
  }
  if (!(density > 0.0 && density < 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "density must lie strictly between 0 and 1");
  }
  // Raw engine output only: distribution objects are implementation-defined.
  std::mt19937_64 engine(seed);
  std::vector<VertexSet> faces;
  for (int v = 1; v <= m; ++v) faces.push_back(VertexSet::singleton(v));
  for (std::uint64_t bits = 0; bits < power_of_two(m); ++bits) {
    if (VertexSet(bits).size() < 2) continue;
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    if (u < density) faces.push_back(VertexSet(bits));
  }
  return SimplicialComplex::from_faces(m, faces);
}

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> corpus;
  for (int m = 1; m <= options.max_m; ++m) {
    std::size_t n = 0;
    for_each_complex(m, [&](const SimplicialComplex& K) {
      corpus.push_back({"enum-m" + std::to_string(m) + "-" + padded(n++, 4), K});
    });
  }
  for (int m : options.random_ms) {
    for (int i = 0; i < options.random_count; ++i) {
      const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
      corpus.push_back({"random-m" + std::to_string(m) + "-s" + std::to_string(seed),
                        random_complex(m, options.density, seed)});
    }
  }
  return corpus;
}

bool CorpusReport::all_ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const TrcReport& r) { return r.flags.all(); });
}

CorpusReport run_corpus(const CorpusOptions& options) {
  const std::vector<CorpusEntry> corpus = build_corpus(options);
  CorpusReport out;
  out.options = options;
  out.reports.resize(corpus.size());
  parallel_for(
      corpus.size(), [&](std::size_t i) { out.reports[i] = check_trc(corpus[i].complex, corpus[i].id); },
      options.workers);
  return out;
}

nlohmann::json report_to_json(const TrcReport& r) {
  return {
      {"id", r.id},
      {"complex", complex_to_json(r.complex)},
      {"m", r.m},
      {"dim", r.dim},
      {"mdim", r.mdim},
      {"trk_bound", r.trk_bound},
      {"hrk_zk", r.hrk_zk},
      {"hrk_rzk", r.hrk_rzk},
      {"hrk_rzk_double", r.hrk_rzk_double},
      {"theorem_bound", r.theorem_bound},
      {"trc_bound", r.trc_bound},
      {"theorem_tight", r.theorem_tight},
      {"slice_tight", r.slice_tight},
      {"zk_betti", betti_to_json(r.zk_betti)},
      {"flags",
       {{"theorem_ok", r.flags.theorem_ok},
        {"trc_ok", r.flags.trc_ok},
        {"cross_check_ok", r.flags.cross_check_ok},
        {"doubling_ok", r.flags.doubling_ok},
        {"slice_ok", r.flags.slice_ok}}},
  };
}

nlohmann::json corpus_to_json(const CorpusReport& report) {
  nlohmann::json reports = nlohmann::json::array();
  for (const TrcReport& r : report.reports) reports.push_back(report_to_json(r));
  const CorpusOptions& o = report.options;
  return {
      {"tool", "macx"},
      {"version", kToolVersion},
      {"parameters",
       {{"max_m", o.max_m},
        {"random", o.random_count},
        {"random_m", o.random_ms},
        {"density", o.density},
        {"seed", o.seed}}},
      {"complexes", report.reports.size()},
      {"all_ok", report.all_ok()},
      {"reports", std::move(reports)},
  };
}

nlohmann::json verification_to_json(const TrcReport& report) {
  return {
      {"tool", "macx"},
      {"version", kToolVersion},
      {"complexes", 1},
      {"all_ok", report.flags.all()},
      {"reports", nlohmann::json::array({report_to_json(report)})},
  };
}

}  // namespace macx
