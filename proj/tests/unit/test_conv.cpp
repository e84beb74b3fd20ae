#include <gtest/gtest.h>

#include "hopfkit/conv.hpp"
#include "hopfkit/errors.hpp"
#include "zoo.hpp"

using namespace hopfkit;

TEST(Conv, ConvolutionUnitIsUnitCounit) {
  for (const auto& m : testzoo::positives()) {
    const Matrix id = Matrix::identity(m.b.dim(), m.b.field());
    const Matrix u = m.b.unit_counit();
    EXPECT_EQ(convolution(id, u, m.b), id) << m.name;
    EXPECT_EQ(convolution(u, id, m.b), id) << m.name;
  }
}

TEST(Conv, AntipodeUniqueOnZoo) {
  for (const auto& m : testzoo::positives()) {
    for (Side side : {Side::left, Side::right, Side::both}) {
      auto s = solve_antipode(m.b, side);
      ASSERT_TRUE(s) << m.name << " " << side_name(side);
      EXPECT_EQ(s->solution_space_dim, 0u);
      EXPECT_TRUE(check_antihom(m.b, s->s).ok()) << m.name;
      EXPECT_TRUE(check_super_identities(m.b, s->s).ok()) << m.name;
    }
  }
}

TEST(Conv, GroupAntipodeIsInversion) {
  const Field q = Field::rationals();
  for (const auto& table : {zoo::cyclic_table(2), zoo::cyclic_table(3), zoo::cyclic_table(5),
                            zoo::symmetric_group_table(3)}) {
    const Bialgebra b = zoo::group_algebra(table, q);
    auto s = solve_antipode(b, Side::both);
    ASSERT_TRUE(s);
    const std::size_t n = b.dim();
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t inv = 0;
      while (table[g][inv] != 0) ++inv;
      EXPECT_EQ(s->s.column(g), unit_vector(n, inv, q));
    }
  }
}

TEST(Conv, SweedlerAntipode) {
  const Field q = Field::rationals();
  auto s = solve_antipode(zoo::sweedler_h4(q), Side::right);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->s, Matrix::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}, q));
}

TEST(Conv, MonoidHasNoAntipode) {
  const Bialgebra m = testzoo::negative().b;
  EXPECT_FALSE(solve_antipode(m, Side::left));
  EXPECT_FALSE(solve_antipode(m, Side::right));
  EXPECT_FALSE(solve_antipode(m, Side::both));
}

TEST(Conv, NonAntipodeFailsChecks) {
  const Bialgebra h = zoo::sweedler_h4(Field::rationals());
  const Matrix id = Matrix::identity(4, h.field());
  const Report r = check_antihom(h, id);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.at("anti_mult").pass);
  EXPECT_FALSE(r.at("anti_mult").tuple.empty());
}

TEST(Conv, ConvolutionAssociative) {
  const Bialgebra h = zoo::sweedler_h4(Field::rationals());
  const Matrix a = Matrix::from_ints({{1, 0, 2, 0}, {0, 1, 0, 0}, {0, 3, 1, 0}, {1, 0, 0, 1}}, h.field());
  const Matrix b = Matrix::from_ints({{0, 1, 0, 0}, {2, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, -1}}, h.field());
  const Matrix c = Matrix::from_ints({{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}, h.field());
  EXPECT_EQ(convolution(convolution(a, b, h), c, h), convolution(a, convolution(b, c, h), h));
}
