#ifndef MACX_EXACT_RANK_HPP
#define MACX_EXACT_RANK_HPP

// Exact rank over Q of integer matrices.
//
// Two eliminations, both division-free up to exact divisions:
//   * bareiss_rank: dense fraction-free echelon reduction with partial
//     pivoting on magnitude (intermediate entries are minors of the input).
//   * ColumnReducer: sparse left-to-right column reduction keyed on the
//     lowest nonzero row, with primitive (content-free) columns.
// Each runs first on checked int64 arithmetic and is repeated on
// arbitrary-precision integers if any operation would overflow.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace macx {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision sparse integer matrix.
using IntMatrix = Eigen::SparseMatrix<BigInt, Eigen::ColMajor>;
/// Boundary operators: entries are small, so a plain int suffices.
using BoundaryMatrix = Eigen::SparseMatrix<int, Eigen::ColMajor>;

namespace arith {

/// Overflow-aware integer kernels. The int64 versions return false when
/// the exact result does not fit; the BigInt versions never fail.
inline bool mul_sub(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y,
                    std::int64_t& out) {
  std::int64_t ax, by;
  if (__builtin_mul_overflow(a, x, &ax) || __builtin_mul_overflow(b, y, &by) ||
      __builtin_sub_overflow(ax, by, &out)) {
    return false;
  }
  return out != std::numeric_limits<std::int64_t>::min();
}
inline bool mul_sub(const BigInt& a, const BigInt& x, const BigInt& b, const BigInt& y, BigInt& out) {
  out = a * x - b * y;
  return true;
}

inline std::int64_t abs(std::int64_t v) { return v < 0 ? -v : v; }
inline BigInt abs(const BigInt& v) { return boost::multiprecision::abs(v); }

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <typename Target, typename Source>
bool convert(const Source& s, Target& t) {
  if constexpr (std::is_same_v<Target, BigInt>) {
    t = BigInt(s);
    return true;
  } else if constexpr (std::is_same_v<Source, BigInt>) {
    if (s > std::numeric_limits<Target>::max() || s <= std::numeric_limits<Target>::min()) return false;
    t = s.template convert_to<Target>();
    return true;
  } else {
    if (s > std::numeric_limits<Target>::max() || s <= std::numeric_limits<Target>::min()) return false;
    t = static_cast<Target>(s);
    return true;
  }
}

}  // namespace arith

/// Rank of a dense matrix by fraction-free Gaussian elimination, carried
/// out in Scalar. Returns nullopt if an int64 intermediate would overflow.
template <typename Scalar, typename Derived>
std::optional<Eigen::Index> bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index rows = input.rows();
  const Eigen::Index cols = input.cols();
  Matrix a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      if (!arith::convert(input(i, j), a(i, j))) return std::nullopt;

  Scalar previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index best = rank;
    for (Eigen::Index i = rank + 1; i < rows; ++i)
      if (arith::abs(a(i, c)) > arith::abs(a(best, c))) best = i;
    if (a(best, c) == Scalar(0)) continue;
    a.row(rank).swap(a.row(best));
    const Scalar pivot = a(rank, c);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const Scalar factor = a(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Scalar t;
        if (!arith::mul_sub(pivot, a(i, j), factor, a(rank, j), t)) return std::nullopt;
        a(i, j) = t / previous;  // exact: every entry is a minor of the input
      }
      a(i, c) = Scalar(0);
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

/**
 * Sparse column reduction over Q with integer (primitive) columns.
 *
 * Columns are fed left to right. Each is reduced against the stored
 * columns owning its lowest row until it vanishes or has a fresh low row,
 * which it then owns. The number of owned rows is the rank of the columns
 * fed so far, and the owned rows are exactly the "lows" of a reduced basis.
 */
template <typename Scalar>
class ColumnReducer {
 public:
  using Entry = std::pair<std::int32_t, Scalar>;
  using Column = std::vector<Entry>;

  explicit ColumnReducer(Eigen::Index rows) : owner_(static_cast<std::size_t>(rows), -1) {}

  /// Reduces `column` (sorted by row). Returns false on int64 overflow.
  bool add(Column column) {
    while (!column.empty()) {
      const std::int32_t low = column.back().first;
      const std::int32_t owner = owner_[static_cast<std::size_t>(low)];
      if (owner < 0) {
        owner_[static_cast<std::size_t>(low)] = static_cast<std::int32_t>(stored_.size());
        stored_.push_back(std::move(column));
        pivot_rows_.push_back(low);
        return true;
      }
      if (!eliminate(column, stored_[static_cast<std::size_t>(owner)])) return false;
    }
    return true;
  }

  std::size_t rank() const { return stored_.size(); }
  const std::vector<std::int32_t>& pivot_rows() const { return pivot_rows_; }

 private:
  // column <- a*column - b*pivot, with the shared low entry cancelling.
  bool eliminate(Column& column, const Column& pivot) {
    Scalar a = pivot.back().second;
    Scalar b = column.back().second;
    const Scalar g = arith::gcd(a, b);
    a /= g;
    b /= g;
    scratch_.clear();
    scratch_.reserve(column.size() + pivot.size());
    auto ci = column.begin();
    auto pi = pivot.begin();
    const Scalar zero(0);
    while (ci != column.end() || pi != pivot.end()) {
      std::int32_t row;
      const Scalar* x = &zero;
      const Scalar* y = &zero;
      if (pi == pivot.end() || (ci != column.end() && ci->first < pi->first)) {
        row = ci->first;
        x = &ci->second;
        ++ci;
      } else if (ci == column.end() || pi->first < ci->first) {
        row = pi->first;
        y = &pi->second;
        ++pi;
      } else {
        row = ci->first;
        x = &ci->second;
        y = &pi->second;
        ++ci;
        ++pi;
      }
      Scalar value;
      if (!arith::mul_sub(a, *x, b, *y, value)) return false;
      if (value != zero) scratch_.emplace_back(row, std::move(value));
    }
    make_primitive(scratch_);
    column.swap(scratch_);
    return true;
  }

  static void make_primitive(Column& column) {
    if (column.empty()) return;
    Scalar content = arith::abs(column.front().second);
    for (const auto& e : column) {
      if (content == Scalar(1)) return;
      content = arith::gcd(content, e.second);
    }
    if (content == Scalar(1)) return;
    for (auto& e : column) e.second /= content;
  }

  std::vector<std::int32_t> owner_;
  std::vector<Column> stored_;
  std::vector<std::int32_t> pivot_rows_;
  Column scratch_;
};

/// Outcome of reducing the columns of a sparse matrix.
struct ReductionResult {
  std::size_t rank = 0;
  std::vector<std::int32_t> pivot_rows;
};

/// Reduces the columns of `m` not flagged in `skip` (skip may be empty)
/// using Scalar arithmetic; nullopt on int64 overflow.
template <typename Scalar, typename SparseMatrixT>
std::optional<ReductionResult> reduce_columns(const SparseMatrixT& m, std::span<const char> skip = {}) {
  ColumnReducer<Scalar> reducer(m.rows());
  typename ColumnReducer<Scalar>::Column column;
  for (Eigen::Index j = 0; j < m.outerSize(); ++j) {
    if (!skip.empty() && skip[static_cast<std::size_t>(j)]) continue;
    column.clear();
    for (typename SparseMatrixT::InnerIterator it(m, j); it; ++it) {
      if (it.value() == 0) continue;
      Scalar v;
      if (!arith::convert(it.value(), v)) return std::nullopt;
      column.emplace_back(static_cast<std::int32_t>(it.row()), std::move(v));
    }
    if (!reducer.add(std::move(column))) return std::nullopt;
    column = {};
  }
  return ReductionResult{reducer.rank(), reducer.pivot_rows()};
}

/// Exact column reduction: int64 first, arbitrary precision on overflow.
template <typename SparseMatrixT>
ReductionResult reduce_columns_exact(const SparseMatrixT& m, std::span<const char> skip = {}) {
  static_assert(!SparseMatrixT::IsRowMajor, "column reduction expects column-major storage");
  if (auto fast = reduce_columns<std::int64_t>(m, skip)) return *std::move(fast);
  return *reduce_columns<BigInt>(m, skip);
}

/// Rank over Q of a dense integer matrix.
template <typename Derived>
Eigen::Index rank_exact(const Eigen::MatrixBase<Derived>& m) {
  if (auto fast = bareiss_rank<std::int64_t>(m)) return *fast;
  return *bareiss_rank<BigInt>(m);
}

/// Below this size in both dimensions sparse input is eliminated densely.
inline constexpr Eigen::Index kDenseRankCutoff = 64;

/// Rank over Q of a sparse integer matrix.
template <typename Scalar, int Options, typename StorageIndex>
Eigen::Index rank_exact(const Eigen::SparseMatrix<Scalar, Options, StorageIndex>& m) {
  if (m.rows() < kDenseRankCutoff && m.cols() < kDenseRankCutoff) {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense = m.toDense();
    return rank_exact(dense);
  }
  if constexpr (Options & Eigen::RowMajor) {
    const Eigen::SparseMatrix<Scalar, Eigen::ColMajor, StorageIndex> col_major = m;
    return static_cast<Eigen::Index>(reduce_columns_exact(col_major).rank);
  } else {
    return static_cast<Eigen::Index>(reduce_columns_exact(m).rank);
  }
}

}  // namespace macx

#endif  // MACX_EXACT_RANK_HPP
