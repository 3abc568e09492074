#include <random>

#include "doctest.h"
#include "macx/exact_rank.hpp"
#include "oracles.hpp"

using macx::BigInt;

namespace {

oracle::DenseInt random_sign_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int zero_weight) {
  oracle::DenseInt m(rows, std::vector<long long>(cols));
  std::uniform_int_distribution<int> pick(0, zero_weight + 1);
  for (auto& row : m)
    for (auto& x : row) {
      const int r = pick(rng);
      x = r == 0 ? -1 : (r == 1 ? 1 : 0);
    }
  return m;
}

Eigen::MatrixXi to_eigen(const oracle::DenseInt& m) {
  Eigen::MatrixXi out(static_cast<Eigen::Index>(m.size()), m.empty() ? 0 : static_cast<Eigen::Index>(m[0].size()));
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = static_cast<int>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
  CHECK(macx::rank_exact(Eigen::MatrixXi::Identity(3, 3)) == 3);
  CHECK(macx::rank_exact(Eigen::MatrixXi::Zero(4, 5)) == 0);
  CHECK(macx::rank_exact(Eigen::MatrixXi(0, 0)) == 0);

  // D_1 of the triangle boundary: vertices x edges {12, 13, 23}.
  const oracle::DenseInt d1{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
  CHECK(oracle::minor_scan_rank(d1) == 2);
  CHECK(macx::rank_exact(to_eigen(d1)) == 2);
  const Eigen::SparseMatrix<int> sparse = to_eigen(d1).sparseView();
  CHECK(macx::rank_exact(sparse) == 2);
  CHECK(macx::reduce_columns_exact(sparse).rank == 2);
}

TEST_CASE("int64 overflow falls back to arbitrary precision") {
  // Hilbert-like integer matrix with huge entries and full rank; the
  // Bareiss intermediates exceed 64 bits.
  const int n = 6;
  Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic> big(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) big(i, j) = boost::multiprecision::pow(BigInt(3), 40 + (i + 1) * (j + 1));
  CHECK_FALSE(macx::bareiss_rank<std::int64_t>(big).has_value());
  CHECK(macx::rank_exact(big) == n);

  // Duplicate a row: rank drops by one.
  big.row(5) = big.row(2);
  CHECK(macx::rank_exact(big) == n - 1);

  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> wide(3, 3);
  wide << 3037000499LL, 3037000493LL, 1, 3037000493LL, 3037000499LL, 1, 1, 1, 1;
  CHECK_FALSE(macx::bareiss_rank<std::int64_t>(wide).has_value());
  CHECK(macx::rank_exact(wide) == 3);
}

TEST_CASE("sparse reduction over arbitrary-precision input") {
  macx::IntMatrix m(70, 70);
  for (int i = 0; i < 70; ++i) {
    m.insert(i, i) = boost::multiprecision::pow(BigInt(2), 70);
    if (i + 1 < 70) m.insert(i + 1, i) = 1;
  }
  CHECK(macx::rank_exact(m) == 70);
}

TEST_CASE("property: exact rank matches fraction elimination on random sign matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_sign_matrix(rng, dim(rng), dim(rng), trial % 5);
    const std::size_t expected = oracle::fraction_rank(m);
    const Eigen::MatrixXi dense = to_eigen(m);
    REQUIRE(static_cast<std::size_t>(macx::rank_exact(dense)) == expected);
    const Eigen::SparseMatrix<int> sparse = dense.sparseView();
    REQUIRE(macx::reduce_columns_exact(sparse).rank == expected);
    REQUIRE(macx::reduce_columns<BigInt>(sparse)->rank == expected);
  }
}

TEST_CASE("property: sparse path on larger low-rank products") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = to_eigen(random_sign_matrix(rng, 90, 12, 1));
    const auto b = to_eigen(random_sign_matrix(rng, 12, 80, 1));
    const Eigen::MatrixXi product = a * b;
    oracle::DenseInt copy(90, std::vector<long long>(80));
    for (int i = 0; i < 90; ++i)
      for (int j = 0; j < 80; ++j) copy[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = product(i, j);
    const Eigen::SparseMatrix<int> sparse = product.sparseView();
    CHECK(static_cast<std::size_t>(macx::rank_exact(sparse)) == oracle::fraction_rank(copy));
  }
}
