#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Vector = std::vector<Scalar>;

/// One nonzero coordinate of a sparse vector.
struct Entry {
  std::size_t index;
  Scalar value;
};
using SparseVector = std::vector<Entry>;

/// Dense row-major matrix over a single field. Acts on column vectors, so a
/// linear map V -> W is stored as a dim(W) x dim(V) matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);

  static Matrix identity(std::size_t n, Field field);
  /// Throws StructuralError if a row has the wrong length or field.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field field);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Field field);
  static Matrix from_ints(const std::vector<std::vector<long long>>& rows, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  SparseVector sparse_column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  Matrix transpose() const;
  bool is_zero() const;

  /// Throws StructuralError if x has the wrong length or field.
  Vector apply(const Vector& x) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  /// Dispatches to the active kernel backend.
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

Vector zero_vector(std::size_t n, const Field& field);
Vector unit_vector(std::size_t n, std::size_t i, const Field& field);
bool is_zero(const Vector& v);
SparseVector sparse(const Vector& v);
/// Columns of m as sparse vectors; used to iterate Sweedler-style sums.
std::vector<SparseVector> sparse_columns(const Matrix& m);

Vector& axpy(Vector& y, const Scalar& a, const Vector& x);
Vector scaled(const Scalar& a, Vector x);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);

/// Tensor coordinates: e_i (x) e_j in V (x) W has index i * dim(W) + j.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

}  // namespace hopfkit
