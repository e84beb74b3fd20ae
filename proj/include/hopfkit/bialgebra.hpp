#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/errors.hpp"
#include "hopfkit/matrix.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

/// A finite-dimensional bialgebra given by structure constants.
///
/// mult is n x n^2 (column i*n+j holds b_i b_j), comult is n^2 x n (column i
/// holds the coordinates of Delta(b_i) in B (x) B), unit is the coordinate
/// vector of 1 and counit the covector epsilon.
class Bialgebra {
 public:
  Bialgebra() = default;
  /// Throws AxiomError when the axioms fail, StructuralError on bad shapes.
  Bialgebra(Field field, std::vector<std::string> labels, Matrix mult, Vector unit, Matrix comult, Vector counit);
  /// Shape-checked only; for mutation tests and for reporting on rejected input.
  static Bialgebra unchecked(Field field, std::vector<std::string> labels, Matrix mult, Vector unit, Matrix comult,
                             Vector counit);

  std::size_t dim() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& mult() const { return mult_; }
  const Vector& unit() const { return unit_; }
  const Matrix& comult() const { return comult_; }
  const Vector& counit() const { return counit_; }

  /// Nonzero coordinates of b_i b_j.
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }
  /// Nonzero coordinates of Delta(b_i); entry index is j*n+k for b_j (x) b_k.
  const SparseVector& coproduct(std::size_t i) const { return coproducts_[i]; }

  Vector multiply(const Vector& a, const Vector& b) const;
  Vector comultiply(const Vector& a) const;
  Scalar counit_of(const Vector& a) const;
  /// Product in the algebra B (x) B, both factors of length n^2.
  Vector multiply2(const Vector& x, const Vector& y) const;
  /// u o epsilon as an n x n matrix.
  Matrix unit_counit() const;
  /// Left multiplication by a as an n x n matrix.
  Matrix left_mult(const Vector& a) const;
  Matrix right_mult(const Vector& a) const;

  /// Same field and structure constants; labels are ignored.
  bool same_structure(const Bialgebra& o) const;

 private:
  void check_shapes() const;
  void index();

  Field field_;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  Matrix mult_;
  Vector unit_;
  Matrix comult_;
  Vector counit_;
  std::vector<SparseVector> products_;
  std::vector<SparseVector> coproducts_;
};

class AxiomError : public ValidationError {
 public:
  explicit AxiomError(Report report);
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Checks associativity, unitality, coassociativity, counitality and
/// compatibility on every basis tuple; each check records its first failure.
Report check_bialgebra_axioms(const Bialgebra& b);

Bialgebra dual_bialgebra(const Bialgebra& b);
Bialgebra op_cop(const Bialgebra& b, bool opposite_mult, bool opposite_comult);

namespace zoo {

using CayleyTable = std::vector<std::vector<std::size_t>>;

Bialgebra group_algebra(const CayleyTable& table, const Field& field, std::vector<std::string> labels = {});
Bialgebra monoid_algebra(const CayleyTable& table, const Field& field, std::vector<std::string> labels = {});
Bialgebra sweedler_h4(const Field& field);
Bialgebra trivial(const Field& field);
/// K[x]/(x^p) with x primitive; only a bialgebra in characteristic p.
Bialgebra divided_power_char_p(std::uint64_t p, const Field& field);
Bialgebra divided_power_char_p_unchecked(std::uint64_t p, const Field& field);

CayleyTable cyclic_table(std::size_t n);
CayleyTable symmetric_group_table(std::size_t k);
/// {1, s} with s^2 = s.
CayleyTable idempotent_monoid_table();

Bialgebra cyclic_group(std::size_t n, const Field& field);
Bialgebra symmetric_group(std::size_t k, const Field& field);
Bialgebra idempotent_monoid(const Field& field);

/// Names accepted by by_name: c2, c3, s3, cyclic:N, idempotent_monoid,
/// sweedler_h4, trivial, divided_power:P.
Bialgebra by_name(const std::string& name, const Field& field);
std::vector<std::string> names();

}  // namespace zoo

}  // namespace hopfkit
