#include "hopfkit/kernels.hpp"

#include <atomic>

#ifdef HOPFKIT_HAVE_OPENMP
#include <omp.h>
#endif

#include "hopfkit/errors.hpp"

namespace hopfkit::kernels {

namespace {

#ifdef HOPFKIT_HAVE_OPENMP
std::atomic<Backend> g_backend{Backend::openmp};
#else
std::atomic<Backend> g_backend{Backend::serial};
#endif

void check_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product: dimension mismatch");
  if (!(a.field() == b.field())) throw StructuralError("matrix product: field mismatch");
}

// out.row(i) = a.row(i) * b, skipping zero entries on both sides.
void multiply_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i) {
  auto dst = out.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Scalar& aik = a(i, k);
    if (aik.is_zero()) continue;
    auto src = b.row(k);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!src[j].is_zero()) dst[j].add_product(aik, src[j]);
    }
  }
}

// Finds the next pivot at or right of `col` among rows >= `row`; returns false if none.
bool find_pivot(const Matrix& m, std::size_t row, std::size_t& col, std::size_t& pivot_row) {
  for (; col < m.cols(); ++col) {
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        pivot_row = r;
        return true;
      }
    }
  }
  return false;
}

// Scales the pivot row to leading coefficient 1 and returns its nonzero columns.
std::vector<std::size_t> normalize_pivot(Matrix& m, std::size_t row, std::size_t col) {
  const Scalar inv = m(row, col).inverse();
  std::vector<std::size_t> support;
  auto pr = m.row(row);
  for (std::size_t c = col; c < m.cols(); ++c) {
    if (pr[c].is_zero()) continue;
    pr[c] *= inv;
    support.push_back(c);
  }
  return support;
}

void eliminate(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t col,
               const std::vector<std::size_t>& support) {
  if (target == pivot_row || m(target, col).is_zero()) return;
  const Scalar factor = -m(target, col);
  auto tr = m.row(target);
  auto pr = m.row(pivot_row);
  for (std::size_t c : support) tr[c].add_product(factor, pr[c]);
}

}  // namespace

bool openmp_available() {
#ifdef HOPFKIT_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

Backend default_backend() { return g_backend.load(); }

void set_default_backend(Backend backend) {
  if (backend == Backend::openmp && !openmp_available()) backend = Backend::serial;
  g_backend.store(backend);
}

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  Matrix out(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, out, i);
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t pivot_row = 0;
  while (row < m.rows() && find_pivot(m, row, col, pivot_row)) {
    m.swap_rows(row, pivot_row);
    const auto support = normalize_pivot(m, row, col);
    for (std::size_t r = 0; r < m.rows(); ++r) eliminate(m, r, row, col, support);
    pivots.push_back(col);
    ++row;
    ++col;
  }
  return pivots;
}

}  // namespace serial

namespace omp {

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  Matrix out(a.rows(), b.cols(), a.field());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#ifdef HOPFKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (std::ptrdiff_t i = 0; i < rows; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t pivot_row = 0;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  while (row < m.rows() && find_pivot(m, row, col, pivot_row)) {
    m.swap_rows(row, pivot_row);
    const auto support = normalize_pivot(m, row, col);
#ifdef HOPFKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (rows > 64)
#endif
    for (std::ptrdiff_t r = 0; r < rows; ++r) eliminate(m, static_cast<std::size_t>(r), row, col, support);
    pivots.push_back(col);
    ++row;
    ++col;
  }
  return pivots;
}

}  // namespace omp

Matrix multiply(const Matrix& a, const Matrix& b, Backend backend) {
  return backend == Backend::openmp ? omp::multiply(a, b) : serial::multiply(a, b);
}

std::vector<std::size_t> rref(Matrix& m, Backend backend) {
  return backend == Backend::openmp ? omp::rref(m) : serial::rref(m);
}

}  // namespace hopfkit::kernels
