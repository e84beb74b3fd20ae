#include <gtest/gtest.h>

#include "hopfkit/bialgebra.hpp"
#include "zoo.hpp"

using namespace hopfkit;

TEST(Bialgebra, ZooPassesAxioms) {
  for (const auto& m : testzoo::positives()) EXPECT_TRUE(check_bialgebra_axioms(m.b).ok()) << m.name;
  EXPECT_TRUE(check_bialgebra_axioms(testzoo::negative().b).ok());
  EXPECT_TRUE(check_bialgebra_axioms(zoo::trivial(Field::rationals())).ok());
  EXPECT_TRUE(check_bialgebra_axioms(zoo::symmetric_group(4, Field::prime(5))).ok());
}

TEST(Bialgebra, ZooOverPrimeFields) {
  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = Field::prime(p);
    EXPECT_TRUE(check_bialgebra_axioms(zoo::sweedler_h4(Field::prime(p == 2 ? 3 : p))).ok());
    EXPECT_TRUE(check_bialgebra_axioms(zoo::cyclic_group(4, f)).ok());
    EXPECT_TRUE(check_bialgebra_axioms(zoo::divided_power_char_p(p, f)).ok());
  }
}

TEST(Bialgebra, DividedPowerNeedsCharacteristicP) {
  EXPECT_THROW(zoo::divided_power_char_p(2, Field::rationals()), AxiomError);
  const Bialgebra b = zoo::divided_power_char_p_unchecked(2, Field::rationals());
  const Report r = check_bialgebra_axioms(b);
  EXPECT_FALSE(r.at("compatibility").pass);
  EXPECT_EQ(r.at("compatibility").tuple, (std::vector<std::size_t>{1, 1}));
}

TEST(Bialgebra, DualIsBialgebraAndInvolutive) {
  for (const auto& m : testzoo::positives()) {
    const Bialgebra d = dual_bialgebra(m.b);
    EXPECT_TRUE(check_bialgebra_axioms(d).ok()) << m.name;
    EXPECT_TRUE(dual_bialgebra(d).same_structure(m.b)) << m.name;
  }
}

TEST(Bialgebra, OpCopIsBialgebra) {
  const Bialgebra h = zoo::sweedler_h4(Field::rationals());
  for (bool op : {false, true})
    for (bool cop : {false, true}) EXPECT_TRUE(check_bialgebra_axioms(op_cop(h, op, cop)).ok());
  EXPECT_TRUE(op_cop(op_cop(h, true, true), true, true).same_structure(h));
  EXPECT_FALSE(op_cop(h, true, false).same_structure(h));
}

TEST(Bialgebra, H4Relations) {
  const Field q = Field::rationals();
  const Bialgebra h = zoo::sweedler_h4(q);
  const Vector g = unit_vector(4, 1, q), x = unit_vector(4, 2, q), gx = unit_vector(4, 3, q);
  EXPECT_EQ(h.multiply(x, g), scaled(q.from_int(-1), gx));
  EXPECT_EQ(h.multiply(g, g), h.unit());
  EXPECT_TRUE(is_zero(h.multiply(x, x)));
  EXPECT_EQ(h.comultiply(x), kron(x, h.unit()) + kron(g, x));
  EXPECT_EQ(h.counit(), (Vector{q.one(), q.one(), q.zero(), q.zero()}));
}

TEST(Bialgebra, CayleyValidation) {
  const Field q = Field::rationals();
  try {
    zoo::group_algebra({{0, 1}, {1, 2}}, q);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(zoo::group_algebra({{0, 1}, {1, 1}}, q), ValidationError);
  EXPECT_NO_THROW(zoo::monoid_algebra({{0, 1}, {1, 1}}, q));
  EXPECT_THROW(zoo::monoid_algebra({{1, 0}, {0, 0}, {0, 0}}, q), ValidationError);
}

TEST(Bialgebra, ShapeErrors) {
  const Field q = Field::rationals();
  const Bialgebra c2 = zoo::cyclic_group(2, q);
  EXPECT_THROW(Bialgebra(q, {"1", "g"}, Matrix(2, 3, q), c2.unit(), c2.comult(), c2.counit()), StructuralError);
  EXPECT_THROW(Bialgebra(q, {"1", "1"}, c2.mult(), c2.unit(), c2.comult(), c2.counit()), StructuralError);
  EXPECT_THROW(Bialgebra(Field::prime(3), {"1", "g"}, c2.mult(), c2.unit(), c2.comult(), c2.counit()),
               StructuralError);
}

TEST(Bialgebra, AxiomErrorCarriesReport) {
  const Field q = Field::rationals();
  const Bialgebra c2 = zoo::cyclic_group(2, q);
  Matrix mult = c2.mult();
  mult(0, 3) = q.zero();
  try {
    Bialgebra(q, c2.labels(), mult, c2.unit(), c2.comult(), c2.counit());
    FAIL() << "expected AxiomError";
  } catch (const AxiomError& e) {
    EXPECT_FALSE(e.report().ok());
    ASSERT_NE(e.report().first_failure(), nullptr);
  }
}

TEST(Bialgebra, ByName) {
  const Field q = Field::rationals();
  EXPECT_EQ(zoo::by_name("cyclic:5", q).dim(), 5u);
  EXPECT_EQ(zoo::by_name("s3", q).dim(), 6u);
  EXPECT_EQ(zoo::by_name("divided_power:3", Field::prime(3)).dim(), 3u);
  EXPECT_THROW(zoo::by_name("nope", q), ValidationError);
  EXPECT_THROW(zoo::by_name("cyclic:x", q), ValidationError);
  EXPECT_THROW(zoo::symmetric_group(5, q), ValidationError);
}
