#include <gtest/gtest.h>

#include "hopfkit/errors.hpp"
#include "hopfkit/frob.hpp"
#include "zoo.hpp"

using namespace hopfkit;

namespace {

Vector ints(std::initializer_list<long long> xs, const Field& f = Field::rationals()) {
  Vector v;
  for (long long x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

// Values below were produced by tests/oracle/oracle.py.
TEST(Frob, SweedlerIntegrals) {
  const IntegralSpaces s = integral_spaces(zoo::sweedler_h4(Field::rationals()));
  ASSERT_EQ(s.left_in_b.dim(), 1u);
  ASSERT_EQ(s.right_in_b.dim(), 1u);
  ASSERT_EQ(s.left_on_b.dim(), 1u);
  ASSERT_EQ(s.right_on_b.dim(), 1u);
  EXPECT_EQ(s.left_in_b.basis_vector(0), ints({0, 0, 1, 1}));
  EXPECT_EQ(s.right_in_b.basis_vector(0), ints({0, 0, 1, -1}));
  EXPECT_EQ(s.left_on_b.basis_vector(0), ints({0, 0, 0, 1}));
  EXPECT_EQ(s.right_on_b.basis_vector(0), ints({0, 0, 1, 0}));
}

TEST(Frob, SweedlerSystem) {
  const Field q = Field::rationals();
  const Bialgebra h = zoo::sweedler_h4(q);
  const FhResult fh = fh_system(h);
  ASSERT_TRUE(fh) << fh.failure;
  const FrobeniusSystem& sys = *fh.system;
  EXPECT_EQ(sys.psi, ints({0, 0, 1, 0}));
  EXPECT_EQ(sys.form, Matrix::from_ints({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}, q));
  EXPECT_EQ(sys.big_t, ints({0, 0, 1, -1}));
  EXPECT_EQ(sys.small_t, ints({0, 0, 1, 1}));
  EXPECT_EQ(sys.e, ints({0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0}));
  EXPECT_TRUE(casimir_report(h, sys).ok());
  const FhAntipode s = antipode_from_fh(h, sys);
  EXPECT_EQ(s.s.column(2), ints({0, 0, 0, -1}));
  EXPECT_EQ(s.s * s.s_inv, Matrix::identity(4, q));
}

TEST(Frob, C2System) {
  const Field q = Field::rationals();
  const FhResult fh = fh_system(zoo::cyclic_group(2, q));
  ASSERT_TRUE(fh);
  EXPECT_EQ(fh.system->form, Matrix::identity(2, q));
  EXPECT_EQ(fh.system->big_t, ints({1, 1}));
  EXPECT_EQ(fh.system->small_t, ints({1, 1}));
  EXPECT_EQ(fh.system->e, ints({1, 0, 0, 1}));
}

TEST(Frob, MonoidFormDegenerate) {
  const Field q = Field::rationals();
  const Bialgebra m = testzoo::negative().b;
  const FhResult fh = fh_system(m);
  EXPECT_FALSE(fh);
  EXPECT_EQ(fh.failure, "degenerate form");
  ASSERT_TRUE(fh.form);
  EXPECT_EQ(*fh.form, Matrix::from_ints({{1, 0}, {0, 0}}, q));
  EXPECT_THROW(frobenius_system_from(m, *fh.psi), ValidationError);
}

TEST(Frob, ZooSystemsAndIntegrals) {
  for (const auto& m : testzoo::positives()) {
    const IntegralSpaces s = integral_spaces(m.b);
    EXPECT_EQ(s.left_in_b.dim(), 1u) << m.name;
    EXPECT_EQ(s.right_in_b.dim(), 1u) << m.name;
    EXPECT_EQ(s.left_on_b.dim(), 1u) << m.name;
    EXPECT_EQ(s.right_on_b.dim(), 1u) << m.name;
    const FhResult fh = fh_system(m.b);
    ASSERT_TRUE(fh) << m.name;
    EXPECT_TRUE(casimir_report(m.b, *fh.system).ok()) << m.name;
    EXPECT_EQ(antipode_from_fh(m.b, *fh.system).s, solve_antipode(m.b, Side::both)->s) << m.name;
    EXPECT_TRUE(fh_system(dual_bialgebra(m.b))) << m.name;
  }
}

TEST(Frob, CasimirDetectsWrongElement) {
  const Bialgebra h = zoo::sweedler_h4(Field::rationals());
  FrobeniusSystem sys = *fh_system(h).system;
  // 1 (x) x picks up psi(x) = 1 in e1 psi(e2).
  sys.e[2] = sys.e[2] + h.field().one();
  const Report r = casimir_report(h, sys);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.at("frob_rel_left").pass);
}

TEST(Frob, BijectionsOnWitnessSuite) {
  for (const auto& m : testzoo::positives()) {
    const FrobeniusSystem sys = *fh_system(m.b).system;
    const Matrix s = solve_antipode(m.b, Side::both)->s;
    const std::size_t max_free = m.b.dim() > 4 ? 1 : 2;
    for (const auto& w : witness_modules(m.b, max_free)) {
      const std::string tag = m.name + " " + w.name;
      for (std::size_t v = 1; v <= 2; ++v) {
        const auto c = verify_coinv_bijection(m.b, sys, s, w.module, v);
        EXPECT_TRUE(c.ok()) << tag << c.report.str();
        EXPECT_GT(c.round_trips, 0u);
        const auto l = verify_cl_bijection(m.b, sys, s, w.module, v);
        EXPECT_TRUE(l.ok()) << tag << l.report.str();
      }
      for (const Comodule& p : {regular_comodule(m.b), trivial_comodule(m.b, 2)}) {
        const auto a = verify_comodule_adjunction(m.b, sys, w.module, p);
        EXPECT_TRUE(a.ok()) << tag << a.report.str();
      }
      const auto g = gamma_lambda(m.b, sys, s, w.module);
      EXPECT_TRUE(g.ok()) << tag << g.report.str();
      EXPECT_EQ(g.dim_source, w.module.dim());
    }
  }
}

TEST(Frob, ClosedStructure) {
  for (const auto& m : testzoo::positives()) {
    const Module reg = regular_module(m.b);
    const Module triv = trivial_module(m.b, 1);
    const auto r = closed_structure_check(reg, triv, reg);
    EXPECT_TRUE(r.ok()) << m.name << r.report.str();
    EXPECT_GT(r.round_trips, 0u);
    const auto t = closed_structure_check(triv, reg, triv);
    EXPECT_TRUE(t.ok()) << m.name << t.report.str();
  }
}

TEST(Frob, TensorModuleIsModule) {
  const Bialgebra h = zoo::sweedler_h4(Field::rationals());
  const Module t = tensor_module(regular_module(h), free_hopf_module(h, 2).module());
  EXPECT_EQ(t.dim, 32u);
  EXPECT_TRUE(validate_module(t).ok());
}

TEST(Frob, PanelConsistent) {
  for (const auto& m : testzoo::positives()) {
    const SummingUpPanel p = summingup_report(m.b);
    ASSERT_EQ(p.rows.size(), 8u);
    EXPECT_TRUE(p.verdict) << m.name;
    for (const auto& row : p.rows) EXPECT_TRUE(row.verdict) << m.name << " item " << row.item;
  }
  const SummingUpPanel neg = summingup_report(testzoo::negative().b);
  EXPECT_FALSE(neg.verdict);
  for (const auto& row : neg.rows) EXPECT_FALSE(row.verdict) << row.item;
}

TEST(Frob, DualVerdictMatchesPanelItems) {
  for (const auto& m : testzoo::positives()) {
    const SummingUpPanel p = summingup_report(m.b);
    EXPECT_EQ(static_cast<bool>(fh_system(dual_bialgebra(m.b))), p.rows[6].verdict);
    EXPECT_EQ(p.rows[6].verdict, p.rows[2].verdict);
  }
}
