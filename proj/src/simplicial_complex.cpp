#include "macx/simplicial_complex.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "macx/error.hpp"

namespace macx {

namespace detail {
struct ComplexCache {
  std::once_flag faces_once;
  FaceList faces;
  std::once_flag non_faces_once;
  std::vector<VertexSet> non_faces;
};
}  // namespace detail

namespace {

void check_vertex_count(int m) {
  if (m < 0 || m > kMaxVertices) {
    throw Error(ErrorCode::MTooLarge, "vertex count " + std::to_string(m) + " outside 0.." +
                                          std::to_string(kMaxVertices));
  }
}

void check_in_range(VertexSet s, int m, const char* what) {
  if (!s.is_subset_of(VertexSet::full(m))) {
    throw Error(ErrorCode::VertexOutOfRange,
                std::string(what) + " has vertex " + std::to_string(s.max_vertex()) +
                    " outside [" + std::to_string(m) + "]");
  }
}

/// Drops every face contained in another one and sorts canonically.
std::vector<VertexSet> to_antichain(std::vector<VertexSet> faces) {
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : faces) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [f](VertexSet g) { return f.is_subset_of(g); });
    if (!redundant) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), ByCardinality{});
  return kept;
}

}  // namespace

std::size_t FaceList::total() const {
  std::size_t n = 0;
  for (const auto& d : by_dim) n += d.size();
  return n;
}

SimplicialComplex::SimplicialComplex()
    : m_(0), maximal_{VertexSet{}}, cache_(std::make_shared<detail::ComplexCache>()) {}

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> maximal)
    : m_(m), maximal_(std::move(maximal)), cache_(std::make_shared<detail::ComplexCache>()) {}

SimplicialComplex SimplicialComplex::from_faces(int m, std::span<const VertexSet> faces) {
  check_vertex_count(m);
  VertexSet covered;
  for (VertexSet f : faces) {
    check_in_range(f, m, "face");
    covered = covered | f;
  }
  if (covered != VertexSet::full(m)) {
    int ghost = 0;
    for (int v = 1; v <= m; ++v) {
      if (!covered.contains(v)) {
        ghost = v;
        break;
      }
    }
    throw Error(ErrorCode::GhostVertex, "vertex " + std::to_string(ghost) + " lies in no face");
  }
  if (m == 0) return SimplicialComplex();
  return SimplicialComplex(m, to_antichain({faces.begin(), faces.end()}));
}

SimplicialComplex SimplicialComplex::from_maximal_faces(int m,
                                                        const std::vector<std::vector<int>>& faces) {
  check_vertex_count(m);
  std::vector<VertexSet> sets;
  sets.reserve(faces.size());
  for (const auto& face : faces) {
    VertexSet s;
    for (int v : face) {
      if (v < 1 || v > m) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside [" + std::to_string(m) + "]");
      }
      s = s.with(v);
    }
    sets.push_back(s);
  }
  return from_faces(m, sets);
}

SimplicialComplex SimplicialComplex::simplex(int m) {
  const VertexSet all = VertexSet::full(m);
  return from_faces(m, std::span(&all, 1));
}

SimplicialComplex SimplicialComplex::simplex_boundary(int m) {
  check_vertex_count(m);
  std::vector<VertexSet> faces;
  for (int v = 1; v <= m; ++v) faces.push_back(VertexSet::full(m).without(v));
  return from_faces(m, faces);
}

SimplicialComplex SimplicialComplex::discrete(int m) {
  check_vertex_count(m);
  std::vector<VertexSet> faces;
  for (int v = 1; v <= m; ++v) faces.push_back(VertexSet::singleton(v));
  return from_faces(m, faces);
}

const FaceList& SimplicialComplex::faces() const& {
  std::call_once(cache_->faces_once, [this] {
    std::vector<std::uint64_t> all;
    for (VertexSet f : maximal_) {
      const std::uint64_t top = f.bits();
      for (std::uint64_t s = top;; s = (s - 1) & top) {
        all.push_back(s);
        if (s == 0) break;
      }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    const int top_dim = dim(*this);
    FaceList list;
    list.by_dim.resize(static_cast<std::size_t>(top_dim + 2));
    for (std::uint64_t bits : all) {
      VertexSet s(bits);
      list.by_dim[static_cast<std::size_t>(s.size())].push_back(s);
    }
    cache_->faces = std::move(list);
  });
  return cache_->faces;
}

const std::vector<VertexSet>& SimplicialComplex::minimal_non_faces() const& {
  std::call_once(cache_->non_faces_once, [this] {
    // σ is a non-face iff it meets [m] \ F for every maximal face F, so the
    // minimal non-faces are the minimal transversals of those complements.
    // Built one complement at a time, pruning supersets after each step.
    std::vector<std::uint64_t> transversals{0};
    const std::uint64_t all = VertexSet::full(m_).bits();
    for (VertexSet f : maximal_) {
      const std::uint64_t outside = all & ~f.bits();
      if (outside == 0) {
        transversals.clear();  // K is a full simplex
        break;
      }
      std::vector<std::uint64_t> next;
      for (std::uint64_t t : transversals) {
        if (t & outside) {
          next.push_back(t);
          continue;
        }
        for (std::uint64_t rest = outside; rest != 0; rest &= rest - 1) next.push_back(t | (rest & -rest));
      }
      std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
        return ByCardinality{}(VertexSet(a), VertexSet(b));
      });
      next.erase(std::unique(next.begin(), next.end()), next.end());
      transversals.clear();
      for (std::uint64_t t : next) {
        const bool redundant = std::any_of(transversals.begin(), transversals.end(),
                                           [t](std::uint64_t kept) { return (kept & ~t) == 0; });
        if (!redundant) transversals.push_back(t);
      }
    }
    std::vector<VertexSet> found;
    found.reserve(transversals.size());
    for (std::uint64_t t : transversals) found.emplace_back(t);
    cache_->non_faces = std::move(found);
  });
  return cache_->non_faces;
}

bool is_face(const SimplicialComplex& K, VertexSet sigma) {
  check_in_range(sigma, K.vertex_count(), "simplex");
  const auto& faces = K.maximal_faces();
  return std::any_of(faces.begin(), faces.end(),
                     [sigma](VertexSet f) { return sigma.is_subset_of(f); });
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& K) { return K.minimal_non_faces(); }

const FaceList& enumerate_faces(const SimplicialComplex& K) { return K.faces(); }

int dim(const SimplicialComplex& K) { return K.maximal_faces().back().size() - 1; }

int mdim(const SimplicialComplex& K) { return K.maximal_faces().front().size() - 1; }

SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2) {
  const int m1 = K1.vertex_count();
  const int m = m1 + K2.vertex_count();
  check_vertex_count(m);
  std::vector<VertexSet> faces;
  faces.reserve(K1.maximal_faces().size() * K2.maximal_faces().size());
  for (VertexSet f1 : K1.maximal_faces())
    for (VertexSet f2 : K2.maximal_faces()) faces.push_back(f1 | VertexSet(f2.bits() << m1));
  return SimplicialComplex::from_faces(m, faces);
}

Link link(const SimplicialComplex& K, int v) {
  if (v < 1 || v > K.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [" +
                                                 std::to_string(K.vertex_count()) + "]");
  }
  std::vector<VertexSet> star;
  VertexSet support;
  for (VertexSet f : K.maximal_faces()) {
    if (!f.contains(v)) continue;
    star.push_back(f.without(v));
    support = support | f.without(v);
  }
  for (VertexSet& f : star) f = compress(f, support);
  Link out{SimplicialComplex::from_faces(support.size(), star), support.size(), support};
  return out;
}

SimplicialComplex restriction(const SimplicialComplex& K, VertexSet omega) {
  check_in_range(omega, K.vertex_count(), "restriction set");
  std::vector<VertexSet> faces;
  faces.reserve(K.maximal_faces().size());
  for (VertexSet f : K.maximal_faces()) faces.push_back(compress(f & omega, omega));
  return SimplicialComplex::from_faces(omega.size(), faces);
}

VertexSet relabel(VertexSet s, std::span<const int> perm) {
  VertexSet out;
  for (int v : s.vertices()) out = out.with(perm[static_cast<std::size_t>(v - 1)]);
  return out;
}

SimplicialComplex relabel(const SimplicialComplex& K, std::span<const int> perm) {
  const int m = K.vertex_count();
  if (static_cast<int>(perm.size()) != m) {
    throw Error(ErrorCode::InvalidParameter, "permutation length does not match vertex count");
  }
  VertexSet image;
  for (int v : perm) {
    if (v < 1 || v > m || image.contains(v)) {
      throw Error(ErrorCode::InvalidParameter, "not a permutation of [" + std::to_string(m) + "]");
    }
    image = image.with(v);
  }
  std::vector<VertexSet> faces;
  for (VertexSet f : K.maximal_faces()) faces.push_back(relabel(f, perm));
  return SimplicialComplex::from_faces(m, faces);
}

}  // namespace macx
