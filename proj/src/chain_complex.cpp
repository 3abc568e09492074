#include "macx/chain_complex.hpp"

#include <algorithm>
#include <string>

#include "macx/error.hpp"

namespace macx {

std::size_t ChainComplex::size(int p) const {
  if (p < bottom_degree || p > top_degree()) return 0;
  return sizes[static_cast<std::size_t>(p - bottom_degree)];
}

const BoundaryMatrix& ChainComplex::boundary(int p) const {
  return boundaries.at(static_cast<std::size_t>(p - bottom_degree - 1));
}

void ChainComplex::validate() const {
  const std::size_t expected = sizes.empty() ? 0 : sizes.size() - 1;
  if (boundaries.size() != expected) {
    throw Error(ErrorCode::InvalidParameter, "chain complex needs one boundary per adjacent degree pair");
  }
  for (int p = bottom_degree + 1; p <= top_degree(); ++p) {
    const BoundaryMatrix& d = boundary(p);
    if (static_cast<std::size_t>(d.cols()) != size(p) ||
        static_cast<std::size_t>(d.rows()) != size(p - 1)) {
      throw Error(ErrorCode::InvalidParameter,
                  "boundary D_" + std::to_string(p) + " has shape " + std::to_string(d.rows()) + "x" +
                      std::to_string(d.cols()));
    }
  }
}

void ChainComplex::check_composition() const {
  validate();
  for (int p = bottom_degree + 2; p <= top_degree(); ++p) {
    const Eigen::SparseMatrix<long long> lower = boundary(p - 1).cast<long long>();
    const Eigen::SparseMatrix<long long> upper = boundary(p).cast<long long>();
    Eigen::SparseMatrix<long long> product = lower * upper;
    product.prune(0LL);
    if (product.nonZeros() != 0) {
      throw Error(ErrorCode::CompositionNonzero,
                  "D_" + std::to_string(p - 1) + " * D_" + std::to_string(p) + " has " +
                      std::to_string(product.nonZeros()) + " nonzero entries");
    }
  }
}

BettiTable::BettiTable(std::initializer_list<std::pair<const int, std::size_t>> entries) {
  for (const auto& [p, r] : entries) set(p, r);
}

void BettiTable::set(int degree, std::size_t rank) {
  if (rank == 0) {
    ranks_.erase(degree);
  } else {
    ranks_[degree] = rank;
  }
}

void BettiTable::add(int degree, std::size_t rank) {
  if (rank != 0) ranks_[degree] += rank;
}

std::size_t BettiTable::at(int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

std::size_t BettiTable::hrk() const {
  std::size_t total = 0;
  for (const auto& [p, r] : ranks_) total += r;
  return total;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b, int shift) {
  BettiTable out;
  for (const auto& [i, ri] : a.entries())
    for (const auto& [j, rj] : b.entries()) out.add(i + j + shift, ri * rj);
  return out;
}

BettiTable betti(const ChainComplex& cc, BettiOptions options) {
  cc.validate();
  if (options.check_composition) cc.check_composition();
  const int d0 = cc.bottom_degree;
  const int top = cc.top_degree();
  BettiTable table;
  if (cc.sizes.empty()) return table;

  // rank_of[p - d0] = rank D_p; D_{d0} and D_{top+1} vanish.
  std::vector<std::size_t> rank_of(cc.sizes.size() + 1, 0);
  // Columns of D_p that are lows of the reduced D_{p+1} reduce to zero,
  // so they are skipped ("clearing").
  std::vector<char> cleared;
  for (int p = top; p > d0; --p) {
    const BoundaryMatrix& d = cc.boundary(p);
    if (cleared.size() != static_cast<std::size_t>(d.cols())) cleared.assign(static_cast<std::size_t>(d.cols()), 0);
    std::vector<char> next(static_cast<std::size_t>(d.rows()), 0);
    if (d.rows() < kDenseRankCutoff && d.cols() < kDenseRankCutoff) {
      rank_of[static_cast<std::size_t>(p - d0)] = static_cast<std::size_t>(rank_exact(d));
    } else {
      ReductionResult reduced = reduce_columns_exact(d, cleared);
      rank_of[static_cast<std::size_t>(p - d0)] = reduced.rank;
      for (std::int32_t row : reduced.pivot_rows) next[static_cast<std::size_t>(row)] = 1;
    }
    cleared = std::move(next);
  }
  for (int p = d0; p <= top; ++p) {
    const std::size_t k = static_cast<std::size_t>(p - d0);
    const std::size_t b = cc.sizes[k] - rank_of[k] - rank_of[k + 1];
    table.set(p, b);
  }
  return table;
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& K, bool augmented) {
  const FaceList& faces = K.faces();
  const int first = augmented ? -1 : 0;
  const int top = faces.max_dim();
  ChainComplex cc;
  cc.bottom_degree = first;
  for (int p = first; p <= top; ++p) cc.sizes.push_back(faces.of_dim(p).size());
  if (cc.sizes.empty()) return cc;
  for (int p = first + 1; p <= top; ++p) {
    const auto& cells = faces.of_dim(p);
    const auto& lower = faces.of_dim(p - 1);
    BoundaryMatrix d(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(cells.size()));
    d.reserve(Eigen::VectorXi::Constant(d.cols(), p + 1));
    for (std::size_t j = 0; j < cells.size(); ++j) {
      int sign = 1;
      for (int v : cells[j].vertices()) {
        const VertexSet facet = cells[j].without(v);
        const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
        d.insert(it - lower.begin(), static_cast<Eigen::Index>(j)) = sign;
        sign = -sign;
      }
    }
    d.makeCompressed();
    cc.boundaries.push_back(std::move(d));
  }
  return cc;
}

BettiTable reduced_betti(const SimplicialComplex& K) {
  return betti(simplicial_chain_complex(K, /*augmented=*/true));
}

}  // namespace macx
