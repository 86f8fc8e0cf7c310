#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lattisym/linalg.hpp"
#include "support/oracles.hpp"

using lattisym::FieldElement;
using lattisym::Matrix;
using lattisym::Rational;
using F = FieldElement;

namespace {

F cofactor_determinant(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  F det(0);
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<F> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const F term = m(0, c) * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

Matrix<F> low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return oracle::random_exact_matrix(rng, rows, r, 3) * oracle::random_exact_matrix(rng, r, cols, 3);
}

}  // namespace

TEST(Rref, ExactReducedForm) {
  const Matrix<F> m{{F(1), F(2), F(3)}, {F(2), F(4), F(7)}, {F(1), F(2), F(4)}};
  const auto r = lattisym::rref(m);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
  const Matrix<F> expected{{F(1), F(2), F(0)}, {F(0), F(0), F(1)}, {F(0), F(0), F(0)}};
  EXPECT_EQ(r.reduced, expected);
}

TEST(Nullspace, KernelVectorsAreAnnihilatedAndIndependent) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    const std::size_t rows = 2 + rng() % 5, cols = 3 + rng() % 5, r = 1 + rng() % std::min(rows, cols);
    const Matrix<F> m = low_rank(rng, rows, cols, r);
    const auto ker = lattisym::nullspace(m);
    EXPECT_EQ(ker.size() + lattisym::rank(m), cols);
    for (const auto& v : ker) EXPECT_TRUE((m * v).is_zero());
  }
}

TEST(Nullspace, NumericMatchesExact) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 100; ++k) {
    const Matrix<F> m = low_rank(rng, 5, 7, 1 + rng() % 4);
    const auto exact = lattisym::nullspace(m);
    const auto numeric = lattisym::nullspace(lattisym::to_numeric(m));
    ASSERT_EQ(exact.size(), numeric.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
      EXPECT_TRUE(lattisym::approx_equal(lattisym::to_numeric(exact[i]), numeric[i], 1e-9));
  }
}

TEST(Inverse, ExactAndNumeric) {
  std::mt19937_64 rng(23);
  int tested = 0;
  for (int k = 0; k < 150; ++k) {
    const Matrix<F> m = oracle::random_exact_matrix(rng, 4, 4);
    if (lattisym::determinant(m).is_zero()) {
      EXPECT_THROW(lattisym::inverse(m), lattisym::SingularMatrix);
      continue;
    }
    EXPECT_EQ(m * lattisym::inverse(m), Matrix<F>::identity(4));
    const auto n = lattisym::to_numeric(m);
    EXPECT_TRUE(lattisym::approx_equal(n * lattisym::inverse(n), Matrix<double>::identity(4), 1e-9));
    ++tested;
  }
  EXPECT_GE(tested, 100);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng() % 5;
    Matrix<F> m = oracle::random_exact_matrix(rng, n, n);
    m(0, 0) += F::sqrt3();
    EXPECT_EQ(lattisym::determinant(m), cofactor_determinant(m));
    EXPECT_NEAR(lattisym::determinant(lattisym::to_numeric(m)), cofactor_determinant(m).to_double(),
                1e-8 * (1 + std::abs(cofactor_determinant(m).to_double())));
  }
}

TEST(RowReducer, FinalStateIndependentOfInsertionOrder) {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 100; ++k) {
    const std::size_t cols = 4 + rng() % 5;
    const Matrix<F> m = low_rank(rng, 8, cols, 1 + rng() % (cols - 1));
    std::vector<std::size_t> order(m.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    lattisym::RowReducer<F> a(cols), b(cols);
    for (std::size_t i : order) a.insert({m.row(i).begin(), m.row(i).end()});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) b.insert({m.row(i).begin(), m.row(i).end()});
    EXPECT_EQ(a.as_matrix(), b.as_matrix());
    EXPECT_EQ(a.kernel_basis(), b.kernel_basis());
    const auto full = lattisym::rref(m);
    EXPECT_EQ(a.pivots(), full.pivots);
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < cols; ++j) EXPECT_EQ(a.as_matrix()(i, j), full.reduced(i, j));
  }
}

TEST(RowReducer, KernelMatchesNullspace) {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 100; ++k) {
    const Matrix<F> m = low_rank(rng, 6, 7, 1 + rng() % 5);
    lattisym::RowReducer<F> red(7);
    for (std::size_t i = 0; i < m.rows(); ++i) red.insert({m.row(i).begin(), m.row(i).end()});
    const auto ker = lattisym::nullspace(m);
    const auto basis = red.kernel_basis();
    ASSERT_EQ(ker.size(), basis.size());
    for (std::size_t i = 0; i < ker.size(); ++i)
      for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(ker[i](j, 0), basis[i][j]);
  }
}

TEST(RowReducer, RejectsDependentRows) {
  lattisym::RowReducer<F> red(3);
  EXPECT_TRUE(red.insert({F(1), F(2), F(0)}));
  EXPECT_FALSE(red.insert({F(2), F(4), F(0)}));
  EXPECT_TRUE(red.insert({F(0), F(0), F::sqrt2()}));
  EXPECT_EQ(red.rank(), 2u);
  EXPECT_EQ(red.free_columns(), std::vector<std::size_t>{1});
}

TEST(TrailingCanonicalForm, KernelRowsGiveTheFreeVariableBasis) {
  std::mt19937_64 rng(27);
  for (int k = 0; k < 100; ++k) {
    const Matrix<F> m = low_rank(rng, 4, 7, 1 + rng() % 3);
    const auto ker = lattisym::nullspace(m);
    // Scramble the kernel basis by a random invertible combination.
    Matrix<F> rows(ker.size(), 7);
    Matrix<F> mix = oracle::random_exact_matrix(rng, ker.size(), ker.size());
    while (lattisym::determinant(mix).is_zero()) mix = oracle::random_exact_matrix(rng, ker.size(), ker.size());
    for (std::size_t i = 0; i < ker.size(); ++i)
      for (std::size_t j = 0; j < ker.size(); ++j)
        for (std::size_t c = 0; c < 7; ++c) rows(i, c) += mix(i, j) * ker[j](c, 0);
    const auto canon = lattisym::trailing_canonical_form(rows);
    ASSERT_EQ(canon.reduced.rows(), ker.size());
    for (std::size_t i = 0; i < ker.size(); ++i)
      for (std::size_t c = 0; c < 7; ++c) EXPECT_EQ(canon.reduced(i, c), ker[i](c, 0));
  }
}
