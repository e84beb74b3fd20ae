#pragma once

// Data-parallel exact kernels. Each kernel has a serial reference version and
// an OpenMP version; both must produce identical canonical output.

#include <cstddef>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit::kernels {

enum class Backend { serial, openmp };

bool openmp_available();
Backend default_backend();
void set_default_backend(Backend backend);

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
/// Reduces m to reduced row-echelon form in place and returns the pivot columns.
/// Pivot choice: leftmost nonzero column, topmost candidate row.
std::vector<std::size_t> rref(Matrix& m);
}  // namespace serial

namespace omp {
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<std::size_t> rref(Matrix& m);
}  // namespace omp

Matrix multiply(const Matrix& a, const Matrix& b, Backend backend = default_backend());
std::vector<std::size_t> rref(Matrix& m, Backend backend = default_backend());

}  // namespace hopfkit::kernels
