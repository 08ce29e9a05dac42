#include <gtest/gtest.h>

#include <sstream>

#include "hgl/echelon.hpp"
#include "hgl/linalg.hpp"
#include "hgl/sparse_matrix.hpp"
#include "support.hpp"

using namespace hgl;

namespace {

using Q = Rational;

SparseRationalMatrix random_sparse(std::mt19937_64& rng, std::size_t r, std::size_t c, unsigned density) {
  SparseRationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 100 < density) m.add(i, j, Q(static_cast<long>(rng() % 7) - 3) / Q(1 + rng() % 2));
  return m;
}

oracle::Dense dense(const SparseRationalMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) d[r][c] = v;
  return d;
}

}  // namespace

TEST(Sparse, NoExplicitZeros) {
  SparseRationalMatrix m(2, 2);
  m.add(0, 0, 3);
  m.add(0, 0, -3);
  m.add(1, 1, 0);
  EXPECT_EQ(m.nonzeros(), 0u);
  EXPECT_THROW(m.set_column(0, SparseVector{{0, Q(0)}}), std::invalid_argument);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(SparseRationalMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
  EXPECT_EQ(rank(SparseRationalMatrix::from_dense({{1, 2}, {2, 4}})), 1u);
}

TEST(Rank, MatchesDenseOracleAndTranspose) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_sparse(rng, 1 + rng() % 8, 1 + rng() % 8, 20 + rng() % 60);
    const auto r = rank(m);
    EXPECT_EQ(r, oracle::dense_rank(dense(m)));
    EXPECT_EQ(r, rank(m.transpose()));
  }
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(SparseRationalMatrix::from_dense({{1, 0}, {0, 1}})).empty());
  const auto k = kernel_basis(SparseRationalMatrix::from_dense({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
  EXPECT_EQ(kernel_basis(SparseRationalMatrix(3, 4)).size(), 4u);
}

TEST(Kernel, VectorsAreIndependentSolutions) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 150; ++t) {
    const auto m = random_sparse(rng, 1 + rng() % 7, 1 + rng() % 9, 40);
    const auto k = kernel_basis(m);
    EXPECT_EQ(k.size(), m.cols() - rank(m));
    for (const auto& v : k)
      for (const auto& x : m.multiply(v)) EXPECT_EQ(x, 0);
    if (!k.empty()) EXPECT_EQ(oracle::dense_rank(k), k.size());
  }
}

TEST(Span, ExamplesAndAugmentationAgreement) {
  const auto m = SparseRationalMatrix::from_dense({{1}, {0}});
  EXPECT_FALSE(in_span(m, {0, 1}).member);
  const auto a = SparseRationalMatrix::from_dense({{1, 2}, {3, 4}, {0, 0}});
  const auto r = in_span(a, {1, 3, 0});
  ASSERT_TRUE(r.member);
  EXPECT_EQ(a.multiply(r.witness), (std::vector<Q>{1, 3, 0}));

  std::mt19937_64 rng(44);
  for (int t = 0; t < 150; ++t) {
    const auto m2 = random_sparse(rng, 2 + rng() % 6, 1 + rng() % 5, 40);
    std::vector<Q> v(m2.rows());
    for (auto& x : v) x = Q(static_cast<long>(rng() % 5) - 2);
    if (rng() % 2) v = m2.multiply(std::vector<Q>(m2.cols(), Q(1)));
    const auto res = in_span(m2, v);
    auto aug = dense(m2);
    for (std::size_t i = 0; i < v.size(); ++i) aug[i].push_back(v[i]);
    EXPECT_EQ(res.member, oracle::dense_rank(aug) == rank(m2));
    if (res.member) EXPECT_EQ(m2.multiply(res.witness), v);
  }
}

TEST(Affine, Examples) {
  const auto id = SparseRationalMatrix::from_dense({{1, 0}, {0, 1}});
  const auto r1 = solve_affine(id, {Q(3), Q(-1, 2)});
  ASSERT_TRUE(r1.feasible());
  EXPECT_EQ(*r1.solution, (std::vector<Q>{3, Q(-1, 2)}));

  const auto col = SparseRationalMatrix::from_dense({{1}, {1}});
  const auto r2 = solve_affine(col, {0, 1});
  ASSERT_FALSE(r2.feasible());
  EXPECT_TRUE(verify_certificate(col, r2.certificate, {0, 1}));
  EXPECT_EQ(r2.certificate[0], -r2.certificate[1]);

  const auto r3 = solve_affine(SparseRationalMatrix::from_dense({{2, 0}}), {1});
  ASSERT_TRUE(r3.feasible());
  EXPECT_EQ(*r3.solution, (std::vector<Q>{Q(1, 2), 0}));
}

TEST(Affine, CertificatesAndSolutionsVerify) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_sparse(rng, 2 + rng() % 7, 1 + rng() % 6, 35);
    std::vector<Q> b(m.rows());
    for (auto& x : b) x = Q(static_cast<long>(rng() % 5) - 2);
    const auto res = solve_affine(m, b);
    if (res.feasible()) {
      EXPECT_TRUE(verify_solution(m, *res.solution, b));
    } else {
      EXPECT_TRUE(verify_certificate(m, res.certificate, b));
      const auto y = m.left_multiply(res.certificate);
      for (const auto& x : y) EXPECT_EQ(x, 0);
    }
  }
}

TEST(Echelon, ExpressAndAnnihilator) {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 60; ++t) {
    const auto m = random_sparse(rng, 6, 5, 40);
    ColumnEchelon e(m.rows(), true);
    for (std::size_t c = 0; c < m.cols(); ++c) e.insert(m.column(c), static_cast<std::uint32_t>(c));
    const auto target = m.multiply({1, -1, 2, 0, Q(1, 3)});
    const auto comb = e.express(sparse_from_dense(target));
    ASSERT_TRUE(comb);
    EXPECT_EQ(m.multiply(dense_from_sparse(*comb, m.cols())), target);
    for (const auto& y : e.annihilator_basis())
      for (const auto& x : m.left_multiply(dense_from_sparse(y, m.rows()))) EXPECT_EQ(x, 0);
    EXPECT_EQ(e.annihilator_basis().size(), m.rows() - e.rank());
  }
}

TEST(Triplets, RoundTrip) {
  std::mt19937_64 rng(47);
  const auto m = random_sparse(rng, 5, 7, 40);
  std::stringstream io;
  m.write_triplets(io);
  EXPECT_EQ(SparseRationalMatrix::read_triplets(io), m);
}
