#include "hopfkit/matrix.hpp"

#include <sstream>
#include <utility>

#include "hopfkit/errors.hpp"
#include "hopfkit/kernels.hpp"

namespace hopfkit {

namespace {

void require_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw StructuralError(std::string(what) + ": field mismatch (" + a.name() + " vs " + b.name() + ")");
}

void require_shape(bool ok, const char* what) {
  if (!ok) throw StructuralError(std::string(what) + ": dimension mismatch");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_shape(rows[r].size() == cols, "Matrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) {
      require_field(rows[r][c].field(), field, "Matrix::from_rows");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows, Field field) {
  Matrix m(rows, cols.size(), field);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_shape(cols[c].size() == rows, "Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) {
      require_field(cols[c][r].field(), field, "Matrix::from_columns");
      m(r, c) = cols[c][r];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long long>>& rows, Field field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_shape(rows[r].size() == cols, "Matrix::from_ints");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

SparseVector Matrix::sparse_column(std::size_t c) const {
  SparseVector v;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(*this)(r, c).is_zero()) v.push_back({r, (*this)(r, c)});
  }
  return v;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Vector Matrix::apply(const Vector& x) const {
  require_shape(x.size() == cols_, "Matrix::apply");
  Vector y = zero_vector(rows_, field_);
  for (std::size_t c = 0; c < cols_; ++c) {
    require_field(x[c].field(), field_, "Matrix::apply");
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) y[r].add_product((*this)(r, c), x[c]);
  }
  return y;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_shape(rows_ == o.rows_ && cols_ == o.cols_, "Matrix::operator+=");
  require_field(field_, o.field_, "Matrix::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_shape(rows_ == o.rows_ && cols_ == o.cols_, "Matrix::operator-=");
  require_field(field_, o.field_, "Matrix::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::multiply(a, b); }

Matrix operator*(const Scalar& s, Matrix m) {
  require_field(s.field(), m.field_, "scalar * Matrix");
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Vector zero_vector(std::size_t n, const Field& field) { return Vector(n, field.zero()); }

Vector unit_vector(std::size_t n, std::size_t i, const Field& field) {
  Vector v = zero_vector(n, field);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

SparseVector sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  return s;
}

std::vector<SparseVector> sparse_columns(const Matrix& m) {
  std::vector<SparseVector> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols[c] = m.sparse_column(c);
  return cols;
}

Vector& axpy(Vector& y, const Scalar& a, const Vector& x) {
  require_shape(x.size() == y.size(), "axpy");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i) y[i].add_product(a, x[i]);
  return y;
}

Vector scaled(const Scalar& a, Vector x) {
  for (auto& s : x) s *= a;
  return x;
}

Vector operator+(Vector a, const Vector& b) {
  require_shape(a.size() == b.size(), "Vector +");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  require_shape(a.size() == b.size(), "Vector -");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Scalar dot(const Vector& a, const Vector& b) {
  require_shape(a.size() == b.size() && !a.empty(), "dot");
  Scalar s = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_field(a.field(), b.field(), "kron");
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) {
          if (b(p, q).is_zero()) continue;
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    }
  return k;
}

Vector kron(const Vector& a, const Vector& b) {
  if (a.empty() || b.empty()) return {};
  require_field(a[0].field(), b[0].field(), "kron");
  Vector v = zero_vector(a.size() * b.size(), a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) v[i * b.size() + j] = a[i] * b[j];
    }
  }
  return v;
}

}  // namespace hopfkit
