#include <gtest/gtest.h>

#include <random>

#include "hopfkit/errors.hpp"
#include "hopfkit/linalg.hpp"
#include "random_matrix.hpp"

using namespace hopfkit;

TEST(Linalg, KernelBasisIsCanonical) {
  const Field q = Field::rationals();
  const Subspace k = kernel_basis(Matrix::from_ints({{1, 1, 0}, {0, 0, 1}}, q));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.basis_vector(0), (Vector{q.one(), q.from_int(-1), q.zero()}));
}

TEST(Linalg, SpanIgnoresGeneratorOrder) {
  const Field q = Field::rationals();
  const Vector a{q.from_int(2), q.from_int(4), q.zero()};
  const Vector b{q.zero(), q.from_int(3), q.one()};
  EXPECT_EQ(Subspace::span({a, b}, 3, q), Subspace::span({b, a + b}, 3, q));
}

TEST(Linalg, QuotientProjectionKillsDenominator) {
  const Field q = Field::rationals();
  const Subspace d = Subspace::span({{q.one(), q.one(), q.zero()}}, 3, q);
  const QuotientSpace quot(d);
  EXPECT_EQ(quot.dim(), 2u);
  EXPECT_TRUE(is_zero(quot.project(d.basis_vector(0))));
  EXPECT_EQ(quot.projection() * quot.section(), Matrix::identity(2, q));
}

TEST(Linalg, InconsistentSystem) {
  const Field q = Field::rationals();
  EXPECT_FALSE(solve_affine(Matrix::from_ints({{1, 1}, {1, 1}}, q), {q.zero(), q.one()}).has_value());
}

TEST(Linalg, AffineSolutionFreeVariablesZero) {
  const Field q = Field::rationals();
  auto s = solve_affine(Matrix::from_ints({{1, 1}}, q), {q.from_int(3)});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (Vector{q.from_int(3), q.zero()}));
  EXPECT_EQ(s->homogeneous.dim(), 1u);
}

TEST(Linalg, InvertShapeAndSingular) {
  const Field q = Field::rationals();
  EXPECT_THROW(invert(Matrix::from_ints({{1, 2}}, q)), StructuralError);
  EXPECT_FALSE(invert(Matrix::from_ints({{1, 2}, {2, 4}}, q)).has_value());
}

class LinalgProperty : public ::testing::TestWithParam<int> {};

TEST_P(LinalgProperty, RandomKernelRankInverse) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()));
  for (const Field& f : testrand::fields()) {
    const std::size_t rows = 3 + rng() % 6, cols = 3 + rng() % 6;
    const Matrix a = testrand::matrix(rng, rows, cols, f);
    const Subspace k = kernel_basis(a);
    EXPECT_EQ(k.dim() + rank(a), cols);
    for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(a.apply(k.basis_vector(i))));

    std::vector<SparseVector> eqs;
    for (std::size_t r = 0; r < rows; ++r) eqs.push_back(sparse(a.row_vector(r)));
    EXPECT_EQ(kernel_of_rows(eqs, cols, f), k);

    const Matrix sq = testrand::matrix(rng, 5, 5, f);
    if (auto inv = invert(sq)) {
      EXPECT_EQ(sq * *inv, Matrix::identity(5, f));
      EXPECT_EQ(rank(sq), 5u);
    } else {
      EXPECT_LT(rank(sq), 5u);
    }

    const Vector x = testrand::vector(rng, cols, f);
    auto sol = solve_affine(a, a.apply(x));
    ASSERT_TRUE(sol);
    EXPECT_EQ(a.apply(sol->particular), a.apply(x));
    EXPECT_TRUE(sol->homogeneous == k);
  }
}

TEST_P(LinalgProperty, KernelWithinMatchesIntersection) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()) + 100);
  const Field q = Field::rationals();
  const Matrix gens = testrand::matrix(rng, 4, 7, q);
  const Subspace domain = Subspace::span(gens);
  const Matrix eqm = testrand::matrix(rng, 2, 7, q);
  std::vector<SparseVector> eqs{sparse(eqm.row_vector(0)), sparse(eqm.row_vector(1))};
  const Subspace within = kernel_within(domain, eqs);
  const Subspace ker = kernel_basis(eqm);
  EXPECT_EQ(within.dim(), intersection_dim(domain, ker));
  for (std::size_t i = 0; i < within.dim(); ++i) {
    EXPECT_TRUE(domain.contains(within.basis_vector(i)));
    EXPECT_TRUE(ker.contains(within.basis_vector(i)));
  }
}

TEST_P(LinalgProperty, QuotientRoundTrip) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()) + 200);
  const Field f = Field::prime(7);
  const Subspace d = Subspace::span(testrand::matrix(rng, 3, 6, f));
  const QuotientSpace quot(d);
  EXPECT_EQ(quot.dim() + d.dim(), 6u);
  EXPECT_EQ(quot.projection() * quot.section(), Matrix::identity(quot.dim(), f));
  const Vector v = testrand::vector(rng, 6, f);
  EXPECT_TRUE(d.contains(v - quot.lift(quot.project(v))));
}

INSTANTIATE_TEST_SUITE_P(Seeds, LinalgProperty, ::testing::Range(1, 21));
