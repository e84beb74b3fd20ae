#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <map>

#include "hopfkit/errors.hpp"
#include "hopfkit/kernels.hpp"

namespace hopfkit {

namespace {

// Drops the zero rows left at the bottom by rref.
Matrix leading_rows(const Matrix& m, std::size_t count) {
  Matrix out(count, m.cols(), m.field());
  for (std::size_t r = 0; r < count; ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

// Basis of {x : R x = 0} for R in reduced row-echelon form with the given pivots.
std::vector<Vector> kernel_generators(const Matrix& r, const std::vector<std::size_t>& pivots, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector x = unit_vector(cols, f, r.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, f);
    gens.push_back(std::move(x));
  }
  return gens;
}

}  // namespace

Subspace::Subspace(std::size_t ambient, Field field) : basis_(0, ambient, field) {}

Subspace Subspace::span(const Matrix& generators) {
  Matrix m = generators;
  auto pivots = kernels::rref(m);
  Matrix basis = leading_rows(m, pivots.size());
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::span(const std::vector<Vector>& generators, std::size_t ambient, Field field) {
  return span(Matrix::from_rows(generators, ambient, field));
}

Subspace Subspace::whole(std::size_t ambient, Field field) { return span(Matrix::identity(ambient, field)); }

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw StructuralError("Subspace::coordinates: dimension mismatch");
  Vector coords;
  coords.reserve(dim());
  Vector rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    coords.push_back(v[pivots_[i]]);
    axpy(rest, -coords.back(), basis_vector(i));
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

Vector Subspace::element(const Vector& coords) const {
  if (coords.size() != dim()) throw StructuralError("Subspace::element: dimension mismatch");
  Vector v = zero_vector(ambient_dim(), field());
  for (std::size_t i = 0; i < dim(); ++i) axpy(v, coords[i], basis_vector(i));
  return v;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw StructuralError("Subspace sum: ambient mismatch");
  Matrix stacked(a.dim() + b.dim(), a.ambient_dim(), a.field());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto src = a.basis_.row(r);
    std::copy(src.begin(), src.end(), stacked.row(r).begin());
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    auto src = b.basis_.row(r);
    std::copy(src.begin(), src.end(), stacked.row(a.dim() + r).begin());
  }
  return Subspace::span(stacked);
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) { return a.dim() + b.dim() - (a + b).dim(); }

QuotientSpace::QuotientSpace(Subspace denominator) : denominator_(std::move(denominator)) {
  const std::size_t n = denominator_.ambient_dim();
  const Field& f = denominator_.field();
  std::vector<bool> is_pivot(n, false);
  for (auto p : denominator_.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_.push_back(c);

  projection_ = Matrix(free_.size(), n, f);
  section_ = Matrix(n, free_.size(), f);
  for (std::size_t j = 0; j < free_.size(); ++j) {
    projection_(j, free_[j]) = f.one();
    section_(free_[j], j) = f.one();
    for (std::size_t i = 0; i < denominator_.dim(); ++i) {
      projection_(j, denominator_.pivots()[i]) = -denominator_.basis()(i, free_[j]);
    }
  }
}

Subspace kernel_basis(const Matrix& a) {
  Matrix r = a;
  const auto pivots = kernels::rref(r);
  return Subspace::span(kernel_generators(r, pivots, a.cols()), a.cols(), a.field());
}

Subspace kernel_of_rows(const std::vector<SparseVector>& equations, std::size_t unknowns, Field field) {
  // Incremental fully-reduced echelon form; each stored row's pivot is its leftmost nonzero.
  std::map<std::size_t, Vector> rows;
  for (const auto& eq : equations) {
    Vector v = zero_vector(unknowns, field);
    for (const auto& [i, x] : eq) {
      if (i >= unknowns) throw StructuralError("kernel_of_rows: unknown index out of range");
      v[i] += x;
    }
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [pc, pr] : rows)
      if (!v[pc].is_zero()) hits.emplace_back(pc, v[pc]);
    for (const auto& [pc, coeff] : hits) axpy(v, -coeff, rows.at(pc));

    std::size_t lead = 0;
    while (lead < unknowns && v[lead].is_zero()) ++lead;
    if (lead == unknowns) continue;
    const Scalar inv = v[lead].inverse();
    for (auto& s : v) s *= inv;
    for (auto& [pc, pr] : rows) {
      if (!pr[lead].is_zero()) {
        const Scalar c = pr[lead];
        axpy(pr, -c, v);
      }
    }
    rows.emplace(lead, std::move(v));
  }
  Matrix r(rows.size(), unknowns, field);
  std::vector<std::size_t> pivots;
  std::size_t i = 0;
  for (const auto& [pc, pr] : rows) {
    std::copy(pr.begin(), pr.end(), r.row(i++).begin());
    pivots.push_back(pc);
  }
  return Subspace::span(kernel_generators(r, pivots, unknowns), unknowns, field);
}

Subspace kernel_within(const Subspace& domain, const std::vector<SparseVector>& equations) {
  const std::size_t k = domain.dim();
  const Field& field = domain.field();
  std::vector<SparseVector> restricted;
  for (const auto& eq : equations) {
    SparseVector row;
    for (std::size_t l = 0; l < k; ++l) {
      Scalar c = field.zero();
      for (const auto& [u, x] : eq) {
        if (u >= domain.ambient_dim()) throw StructuralError("kernel_within: unknown index out of range");
        c.add_product(x, domain.basis()(l, u));
      }
      if (!c.is_zero()) row.push_back({l, std::move(c)});
    }
    if (!row.empty()) restricted.push_back(std::move(row));
  }
  const Subspace coeffs = kernel_of_rows(restricted, k, field);
  if (coeffs.dim() == 0) return Subspace(domain.ambient_dim(), field);
  return Subspace::span(coeffs.basis() * domain.basis());
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw StructuralError("solve_affine: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    if (!(b[r].field() == a.field())) throw StructuralError("solve_affine: field mismatch");
    aug(r, a.cols()) = b[r];
  }
  auto pivots = kernels::rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

  AffineSolution sol;
  sol.particular = zero_vector(a.cols(), a.field());
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, a.cols());
  sol.homogeneous = Subspace::span(kernel_generators(aug, pivots, a.cols()), a.cols(), a.field());
  return sol;
}

std::size_t rank(const Matrix& a) {
  Matrix r = a;
  return kernels::rref(r).size();
}

std::optional<Matrix> invert(const Matrix& a) {
  if (a.rows() != a.cols()) throw StructuralError("invert: matrix is not square");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n, a.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = a.field().one();
  }
  auto pivots = kernels::rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n, a.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace hopfkit
