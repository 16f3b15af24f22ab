#include <gtest/gtest.h>

#include <random>

#include "bianchi/linalg.hpp"
#include "bianchi/sampling.hpp"

namespace la = bianchi::linalg;
using bianchi::Integer;
using bianchi::Rational;

namespace {

// Textbook Gauss-Jordan over the rationals, used as an oracle.
std::size_t naive_rank(la::DenseMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c).is_zero()) continue;
      Rational f = m(r, c) / m(rank, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

la::DenseMatrix random_low_rank(bianchi::sampling::Engine& rng, std::size_t rows, std::size_t cols,
                                std::size_t r) {
  la::DenseMatrix u(rows, r), v(r, cols), out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < r; ++k) u(i, k) = bianchi::sampling::random_entry(rng);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < cols; ++j) v(k, j) = bianchi::sampling::random_entry(rng);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < r; ++k) out(i, j) += u(i, k) * v(k, j);
  return out;
}

}  // namespace

TEST(Linalg, RankAgainstNaive) {
  bianchi::sampling::Engine rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9, r = rng() % 5;
    auto m = random_low_rank(rng, rows, cols, r);
    EXPECT_EQ(la::rank(m), naive_rank(m));
  }
}

TEST(Linalg, KernelIsKernel) {
  bianchi::sampling::Engine rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 9, r = rng() % 4;
    auto m = random_low_rank(rng, rows, cols, r);
    auto ker = la::kernel_basis(m);
    EXPECT_EQ(ker.size() + la::rank(m), cols);
    for (const auto& v : ker)
      for (std::size_t i = 0; i < rows; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
        EXPECT_TRUE(acc.is_zero());
      }
    if (!ker.empty()) {
      EXPECT_EQ(naive_rank(la::DenseMatrix::from_rows(ker, cols)), ker.size());
    }
  }
}

TEST(Linalg, ImageAndSpan) {
  bianchi::sampling::Engine rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_low_rank(rng, 9, 9, rng() % 9);
    auto img = la::image_basis(m);
    EXPECT_EQ(img.size(), la::rank(m));
    for (std::size_t c = 0; c < 9; ++c) {
      la::RowVector col(9);
      for (std::size_t r = 0; r < 9; ++r) col[r] = m(r, c);
      EXPECT_TRUE(la::in_span(img, col, 9));
    }
  }
}

TEST(Linalg, DeterministicRref) {
  la::DenseMatrix m = la::DenseMatrix::from_rows({{2, 4, 6}, {1, 2, 4}}, 3);
  auto e = la::reduced_echelon(m);
  ASSERT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(e.rref.row(0), (la::RowVector{1, 2, 0}));
  EXPECT_EQ(e.rref.row(1), (la::RowVector{0, 0, 1}));
  auto ker = la::kernel_basis(m);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0], (la::RowVector{1, Rational(Integer(-1), Integer(2)), 0}));
}

TEST(Linalg, ComplementBasis) {
  std::vector<la::RowVector> base{{1, 0, 0}};
  std::vector<la::RowVector> pool{{1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  auto comp = la::complement_basis(base, pool, 3);
  ASSERT_EQ(comp.size(), 1u);
  EXPECT_FALSE(la::in_span(base, comp[0], 3));
}
