#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// A subspace of F^n held by its unique reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^ambient.
  Subspace(std::size_t ambient, Field field);

  /// Row space of `generators` (each row one generator).
  static Subspace span(const Matrix& generators);
  static Subspace span(const std::vector<Vector>& generators, std::size_t ambient, Field field);
  static Subspace whole(std::size_t ambient, Field field);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Field& field() const { return basis_.field(); }
  /// Rows are the canonical basis vectors.
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Coordinates with respect to basis(); nullopt when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// The element with the given coordinates.
  Vector element(const Vector& coords) const;
  /// Columns are the basis vectors: the inclusion map F^dim -> F^ambient.
  Matrix inclusion() const { return basis_.transpose(); }

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// F^n / D with quotient coordinates on the non-pivot columns of D's basis.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(Subspace denominator);

  std::size_t ambient_dim() const { return denominator_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }
  const Subspace& denominator() const { return denominator_; }
  /// dim x ambient; kernel is the denominator.
  const Matrix& projection() const { return projection_; }
  /// ambient x dim; a right inverse of projection().
  const Matrix& section() const { return section_; }

  Vector project(const Vector& v) const { return projection_.apply(v); }
  Vector lift(const Vector& coords) const { return section_.apply(coords); }

 private:
  Subspace denominator_;
  std::vector<std::size_t> free_;
  Matrix projection_;
  Matrix section_;
};

/// Canonical basis of {x : A x = 0}.
Subspace kernel_basis(const Matrix& a);
/// Same as kernel_basis but for a homogeneous system given as sparse rows over `unknowns` columns.
Subspace kernel_of_rows(const std::vector<SparseVector>& equations, std::size_t unknowns, Field field);

/// Elements of `domain` satisfying every equation (rows over the ambient coordinates).
Subspace kernel_within(const Subspace& domain, const std::vector<SparseVector>& equations);

struct AffineSolution {
  /// Free unknowns set to zero.
  Vector particular;
  Subspace homogeneous;
};

/// nullopt means the system is inconsistent. Throws StructuralError on a shape mismatch.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

std::size_t rank(const Matrix& a);
/// nullopt means singular. Throws StructuralError when a is not square.
std::optional<Matrix> invert(const Matrix& a);

}  // namespace hopfkit
