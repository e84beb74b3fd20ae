#include "hopfkit/conv.hpp"

#include "hopfkit/linalg.hpp"

namespace hopfkit {

namespace {

void require_endomorphism(const Bialgebra& b, const Matrix& f, const char* what) {
  if (f.rows() != b.dim() || f.cols() != b.dim()) throw StructuralError(std::string(what) + ": map must be n x n");
  if (!(f.field() == b.field())) throw StructuralError(std::string(what) + ": field mismatch");
}

// Column i of s as a sparse vector, for each i.
std::vector<SparseVector> images(const Matrix& s) { return sparse_columns(s); }

std::optional<AntipodeSolution> solve_one_side(const Bialgebra& b, Side side) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  Matrix a(n * n, n * n, f);
  Vector rhs = zero_vector(n * n, f);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t p = 0; p < n; ++p) rhs[x * n + p] = b.counit()[x] * b.unit()[p];
    for (const auto& [jk, d] : b.coproduct(x)) {
      const std::size_t j = jk / n, k = jk % n;
      for (std::size_t r = 0; r < n; ++r) {
        // Right: b_j S(b_k) with S(b_k) = sum_r S(r,k) b_r. Left: S(b_j) b_k.
        const SparseVector& prod = side == Side::right ? b.product(j, r) : b.product(r, k);
        const std::size_t unknown = side == Side::right ? r * n + k : r * n + j;
        for (const auto& [p, c] : prod) a(x * n + p, unknown).add_product(d, c);
      }
    }
  }
  auto sol = solve_affine(a, rhs);
  if (!sol) return std::nullopt;
  Matrix s(n, n, f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) s(r, c) = sol->particular[r * n + c];
  if (s.apply(b.unit()) != b.unit())
    throw TheoremViolation(std::string("one-sided antipode is not unital (") + side_name(side) + ")");
  for (std::size_t i = 0; i < n; ++i)
    if (b.counit_of(s.column(i)) != b.counit()[i])
      throw TheoremViolation(std::string("one-sided antipode is not counital (") + side_name(side) + ")");
  return AntipodeSolution{std::move(s), sol->homogeneous.dim(), side};
}

}  // namespace

const char* side_name(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::both: return "both";
  }
  return "?";
}

Matrix convolution(const Matrix& f, const Matrix& g, const Bialgebra& b) {
  require_endomorphism(b, f, "convolution");
  require_endomorphism(b, g, "convolution");
  const std::size_t n = b.dim();
  const auto fi = images(f);
  const auto gi = images(g);
  Matrix out(n, n, b.field());
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [jk, d] : b.coproduct(a)) {
      for (const auto& [p, x] : fi[jk / n]) {
        const Scalar dx = d * x;
        for (const auto& [q, y] : gi[jk % n]) {
          const Scalar dxy = dx * y;
          for (const auto& [k, c] : b.product(p, q)) out(k, a).add_product(dxy, c);
        }
      }
    }
  }
  return out;
}

std::optional<AntipodeSolution> solve_antipode(const Bialgebra& b, Side side) {
  if (side != Side::both) return solve_one_side(b, side);
  auto right = solve_one_side(b, Side::right);
  auto left = solve_one_side(b, Side::left);
  if (!right && !left) return std::nullopt;
  if (!right || !left)
    throw TheoremViolation("a one-sided antipode exists without the other in finite dimension");
  if (!(right->s == left->s)) throw TheoremViolation("left and right antipodes differ");
  return AntipodeSolution{right->s, std::max(right->solution_space_dim, left->solution_space_dim), Side::both};
}

Report check_antihom(const Bialgebra& b, const Matrix& s) {
  require_endomorphism(b, s, "check_antihom");
  const std::size_t n = b.dim();
  const Field& f = b.field();
  const auto si = images(s);
  Report report;

  Check& mult = report.add("anti_mult");
  for (std::size_t i = 0; i < n && mult.pass; ++i)
    for (std::size_t j = 0; j < n && mult.pass; ++j) {
      Vector prod = zero_vector(n, f);
      for (const auto& [k, c] : b.product(i, j)) prod[k] = c;
      Report::expect(mult, {i, j}, s.apply(prod), b.multiply(s.column(j), s.column(i)));
    }

  Check& comult = report.add("anti_comult");
  for (std::size_t i = 0; i < n && comult.pass; ++i) {
    Vector rhs = zero_vector(n * n, f);
    for (const auto& [jk, d] : b.coproduct(i)) {
      for (const auto& [p, x] : si[jk % n])
        for (const auto& [q, y] : si[jk / n]) rhs[p * n + q].add_product(d, x * y);
    }
    Report::expect(comult, {i}, b.comultiply(s.column(i)), rhs);
  }

  Check& unital = report.add("unital");
  Report::expect(unital, {}, s.apply(b.unit()), b.unit());

  Check& counital = report.add("counital");
  for (std::size_t i = 0; i < n && counital.pass; ++i)
    Report::expect(counital, {i}, {b.counit_of(s.column(i))}, {b.counit()[i]});
  return report;
}

Report check_super_identities(const Bialgebra& b, const Matrix& s) {
  require_endomorphism(b, s, "check_super_identities");
  const std::size_t n = b.dim();
  const Field& f = b.field();
  const auto si = images(s);
  Report report;

  Check& super = report.add("eq_super");
  for (std::size_t a = 0; a < n && super.pass; ++a)
    for (std::size_t y = 0; y < n && super.pass; ++y) {
      Vector lhs = zero_vector(n, f);
      for (const auto& [jk, d] : b.coproduct(a)) {
        Vector yk = zero_vector(n, f);
        for (const auto& [p, c] : b.product(y, jk % n)) yk[p] = c;
        const Vector syk = s.apply(yk);
        axpy(lhs, d, b.multiply(unit_vector(n, jk / n, f), syk));
      }
      Report::expect(super, {a, y}, lhs, scaled(b.counit()[a], s.column(y)));
    }

  Check& super2 = report.add("eq_super2");
  for (std::size_t y = 0; y < n && super2.pass; ++y) {
    Vector rhs = zero_vector(n * n, f);
    for (const auto& [jk, d] : b.coproduct(y)) {
      for (const auto& [r, x] : si[jk % n]) {
        const Scalar dx = d * x;
        for (const auto& [pq, e] : b.coproduct(r)) {
          const Scalar dxe = dx * e;
          for (const auto& [k, c] : b.product(jk / n, pq % n)) rhs[(pq / n) * n + k].add_product(dxe, c);
        }
      }
    }
    Report::expect(super2, {y}, kron(s.column(y), b.unit()), rhs);
  }
  return report;
}

}  // namespace hopfkit
