#include "hopfkit/bialgebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hopfkit {

namespace {

Vector basis_product(const Bialgebra& b, const SparseVector& x, std::size_t k, bool x_on_left) {
  Vector out = zero_vector(b.dim(), b.field());
  for (const auto& [p, c] : x) {
    for (const auto& [q, d] : x_on_left ? b.product(p, k) : b.product(k, p)) out[q].add_product(c, d);
  }
  return out;
}

}  // namespace

Bialgebra::Bialgebra(Field field, std::vector<std::string> labels, Matrix mult, Vector unit, Matrix comult,
                     Vector counit)
    : Bialgebra(unchecked(std::move(field), std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                          std::move(counit))) {
  Report r = check_bialgebra_axioms(*this);
  if (!r.ok()) throw AxiomError(std::move(r));
}

Bialgebra Bialgebra::unchecked(Field field, std::vector<std::string> labels, Matrix mult, Vector unit, Matrix comult,
                               Vector counit) {
  Bialgebra b;
  b.field_ = std::move(field);
  b.n_ = unit.size();
  b.labels_ = std::move(labels);
  b.mult_ = std::move(mult);
  b.unit_ = std::move(unit);
  b.comult_ = std::move(comult);
  b.counit_ = std::move(counit);
  b.check_shapes();
  b.index();
  return b;
}

void Bialgebra::check_shapes() const {
  const std::size_t n = n_;
  if (n == 0) throw StructuralError("bialgebra: dimension must be at least 1");
  if (labels_.size() != n) throw StructuralError("bialgebra: expected " + std::to_string(n) + " basis labels");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw StructuralError("bialgebra: basis labels must be unique");
  if (mult_.rows() != n || mult_.cols() != n * n) throw StructuralError("bialgebra: mult must be n x n^2");
  if (comult_.rows() != n * n || comult_.cols() != n) throw StructuralError("bialgebra: comult must be n^2 x n");
  if (counit_.size() != n) throw StructuralError("bialgebra: counit must have length n");
  if (!(mult_.field() == field_) || !(comult_.field() == field_))
    throw StructuralError("bialgebra: structure tensors over the wrong field");
  for (const auto& s : unit_)
    if (!(s.field() == field_)) throw StructuralError("bialgebra: unit over the wrong field");
  for (const auto& s : counit_)
    if (!(s.field() == field_)) throw StructuralError("bialgebra: counit over the wrong field");
}

void Bialgebra::index() {
  products_ = sparse_columns(mult_);
  coproducts_ = sparse_columns(comult_);
}

Vector Bialgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != n_ || b.size() != n_) throw StructuralError("Bialgebra::multiply: dimension mismatch");
  Vector out = zero_vector(n_, field_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (const auto& [k, d] : product(i, j)) out[k].add_product(c, d);
    }
  }
  return out;
}

Vector Bialgebra::comultiply(const Vector& a) const { return comult_.apply(a); }

Scalar Bialgebra::counit_of(const Vector& a) const { return dot(counit_, a); }

Vector Bialgebra::multiply2(const Vector& x, const Vector& y) const {
  const std::size_t n = n_;
  if (x.size() != n * n || y.size() != n * n) throw StructuralError("Bialgebra::multiply2: dimension mismatch");
  Vector out = zero_vector(n * n, field_);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < n * n; ++q) {
      if (y[q].is_zero()) continue;
      const Scalar c = x[p] * y[q];
      for (const auto& [k1, c1] : product(p / n, q / n)) {
        const Scalar cc = c * c1;
        for (const auto& [k2, c2] : product(p % n, q % n)) out[k1 * n + k2].add_product(cc, c2);
      }
    }
  }
  return out;
}

Matrix Bialgebra::unit_counit() const {
  Matrix m(n_, n_, field_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(r, c) = unit_[r] * counit_[c];
  return m;
}

Matrix Bialgebra::left_mult(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n_; ++j) cols.push_back(multiply(a, unit_vector(n_, j, field_)));
  return Matrix::from_columns(cols, n_, field_);
}

Matrix Bialgebra::right_mult(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n_; ++j) cols.push_back(multiply(unit_vector(n_, j, field_), a));
  return Matrix::from_columns(cols, n_, field_);
}

bool Bialgebra::same_structure(const Bialgebra& o) const {
  return field_ == o.field_ && n_ == o.n_ && mult_ == o.mult_ && unit_ == o.unit_ && comult_ == o.comult_ &&
         counit_ == o.counit_;
}

AxiomError::AxiomError(Report report)
    : ValidationError("bialgebra axioms fail:\n" + report.str()), report_(std::move(report)) {}

Report check_bialgebra_axioms(const Bialgebra& b) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  Report report;

  Check& assoc = report.add("associativity");
  for (std::size_t i = 0; i < n && assoc.pass; ++i)
    for (std::size_t j = 0; j < n && assoc.pass; ++j)
      for (std::size_t k = 0; k < n && assoc.pass; ++k) {
        Vector lhs = basis_product(b, b.product(i, j), k, true);
        Vector rhs = basis_product(b, b.product(j, k), i, false);
        Report::expect(assoc, {i, j, k}, lhs, rhs);
      }

  Check& unital = report.add("unitality");
  const SparseVector unit = sparse(b.unit());
  for (std::size_t i = 0; i < n && unital.pass; ++i) {
    const Vector ei = unit_vector(n, i, f);
    Report::expect(unital, {i}, basis_product(b, unit, i, true), ei, "1*b");
    Report::expect(unital, {i}, basis_product(b, unit, i, false), ei, "b*1");
  }

  Check& coassoc = report.add("coassociativity");
  for (std::size_t i = 0; i < n && coassoc.pass; ++i) {
    Vector lhs = zero_vector(n * n * n, f);
    Vector rhs = zero_vector(n * n * n, f);
    for (const auto& [jk, c] : b.coproduct(i)) {
      const std::size_t j = jk / n, k = jk % n;
      for (const auto& [pq, d] : b.coproduct(j)) lhs[pq * n + k].add_product(c, d);
      for (const auto& [pq, d] : b.coproduct(k)) rhs[j * n * n + pq].add_product(c, d);
    }
    Report::expect(coassoc, {i}, lhs, rhs);
  }

  Check& counital = report.add("counitality");
  for (std::size_t i = 0; i < n && counital.pass; ++i) {
    Vector left = zero_vector(n, f);
    Vector right = zero_vector(n, f);
    for (const auto& [jk, c] : b.coproduct(i)) {
      left[jk % n].add_product(c, b.counit()[jk / n]);
      right[jk / n].add_product(c, b.counit()[jk % n]);
    }
    const Vector ei = unit_vector(n, i, f);
    Report::expect(counital, {i}, left, ei, "(eps x id)Delta");
    Report::expect(counital, {i}, right, ei, "(id x eps)Delta");
  }

  Check& compat = report.add("compatibility");
  for (std::size_t i = 0; i < n && compat.pass; ++i)
    for (std::size_t j = 0; j < n && compat.pass; ++j) {
      Vector prod = zero_vector(n, f);
      for (const auto& [k, c] : b.product(i, j)) prod[k] = c;
      const Vector lhs = b.comultiply(prod);
      const Vector rhs = b.multiply2(b.comult().column(i), b.comult().column(j));
      if (!Report::expect(compat, {i, j}, lhs, rhs, "Delta(ab) vs Delta(a)Delta(b)")) break;
      Report::expect(compat, {i, j}, {b.counit_of(prod)}, {b.counit()[i] * b.counit()[j]}, "eps(ab) vs eps(a)eps(b)");
    }
  if (compat.pass) {
    Report::expect(compat, {}, b.comultiply(b.unit()), kron(b.unit(), b.unit()), "Delta(1) vs 1 x 1");
    Report::expect(compat, {}, {b.counit_of(b.unit())}, {f.one()}, "eps(1) vs 1");
  }
  return report;
}

Bialgebra dual_bialgebra(const Bialgebra& b) {
  std::vector<std::string> labels;
  for (const auto& l : b.labels()) labels.push_back(l + "*");
  return Bialgebra(b.field(), std::move(labels), b.comult().transpose(), b.counit(), b.mult().transpose(), b.unit());
}

Bialgebra op_cop(const Bialgebra& b, bool opposite_mult, bool opposite_comult) {
  const std::size_t n = b.dim();
  Matrix mult = b.mult();
  Matrix comult = b.comult();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (opposite_mult) mult(k, i * n + j) = b.mult()(k, j * n + i);
        if (opposite_comult) comult(i * n + j, k) = b.comult()(j * n + i, k);
      }
  return Bialgebra(b.field(), b.labels(), std::move(mult), b.unit(), std::move(comult), b.counit());
}

namespace zoo {

namespace {

std::size_t validate_monoid_table(const CayleyTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw ValidationError("Cayley table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) throw ValidationError("Cayley table row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] >= n)
        throw ValidationError("Cayley table cell (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]])
          throw ValidationError("Cayley table is not associative at (" + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + ")");
  for (std::size_t e = 0; e < n; ++e) {
    bool identity = true;
    for (std::size_t i = 0; i < n && identity; ++i) identity = t[e][i] == i && t[i][e] == i;
    if (identity) return e;
  }
  throw ValidationError("Cayley table has no identity element");
}

std::vector<std::string> default_labels(std::size_t n, std::size_t identity) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == identity ? "1" : "e" + std::to_string(i));
  return labels;
}

Bialgebra semigroup_bialgebra(const CayleyTable& t, std::size_t identity, const Field& field,
                              std::vector<std::string> labels) {
  const std::size_t n = t.size();
  if (labels.empty()) labels = default_labels(n, identity);
  Matrix mult(n, n * n, field);
  Matrix comult(n * n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult(t[i][j], i * n + j) = field.one();
    comult(i * n + i, i) = field.one();
  }
  return Bialgebra(field, std::move(labels), std::move(mult), unit_vector(n, identity, field), std::move(comult),
                   Vector(n, field.one()));
}

std::string cycle_label(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += '(';
    for (std::size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      if (x != s) out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return all;
}

Bialgebra divided_power(std::uint64_t p, const Field& field, bool checked) {
  Field::prime(p);
  if (p > 64) throw ValidationError("divided_power: p too large for the zoo");
  const std::size_t n = p;
  std::vector<std::string> labels{"1", "x"};
  for (std::size_t k = 2; k < n; ++k) labels.push_back("x^" + std::to_string(k));
  labels.resize(n);
  Matrix mult(n, n * n, field);
  Matrix comult(n * n, n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) mult(i + j, i * n + j) = field.one();
  std::vector<mpz_class> binom(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) comult(i * n + (k - i), k) = field.from_rational(mpq_class(binom[i]));
    std::vector<mpz_class> next(k + 2, 1);
    for (std::size_t i = 1; i <= k; ++i) next[i] = binom[i - 1] + binom[i];
    binom = std::move(next);
  }
  Vector counit = unit_vector(n, 0, field);
  if (checked) return Bialgebra(field, labels, mult, unit_vector(n, 0, field), comult, counit);
  return Bialgebra::unchecked(field, labels, mult, unit_vector(n, 0, field), comult, counit);
}

}  // namespace

Bialgebra group_algebra(const CayleyTable& table, const Field& field, std::vector<std::string> labels) {
  const std::size_t e = validate_monoid_table(table);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (std::find(table[i].begin(), table[i].end(), e) == table[i].end())
      throw ValidationError("Cayley table: element " + std::to_string(i) + " has no inverse");
  }
  return semigroup_bialgebra(table, e, field, std::move(labels));
}

Bialgebra monoid_algebra(const CayleyTable& table, const Field& field, std::vector<std::string> labels) {
  const std::size_t e = validate_monoid_table(table);
  return semigroup_bialgebra(table, e, field, std::move(labels));
}

Bialgebra sweedler_h4(const Field& field) {
  // g^a x^b has index 2b + a: 1, g, x, gx.
  const std::size_t n = 4;
  Matrix mult(n, n * n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
      if (b + d >= 2) continue;
      mult((a + c) % 2 + 2 * (b + d), i * n + j) = (b * c) % 2 ? -field.one() : field.one();
    }
  Matrix comult(n * n, n, field);
  comult(0 * n + 0, 0) = field.one();
  comult(1 * n + 1, 1) = field.one();
  comult(2 * n + 0, 2) = field.one();
  comult(1 * n + 2, 2) = field.one();
  comult(3 * n + 1, 3) = field.one();
  comult(0 * n + 3, 3) = field.one();
  Vector counit{field.one(), field.one(), field.zero(), field.zero()};
  return Bialgebra(field, {"1", "g", "x", "gx"}, std::move(mult), unit_vector(n, 0, field), std::move(comult),
                   std::move(counit));
}

Bialgebra trivial(const Field& field) {
  Matrix one = Matrix::identity(1, field);
  return Bialgebra(field, {"1"}, one, {field.one()}, one, {field.one()});
}

Bialgebra divided_power_char_p(std::uint64_t p, const Field& field) { return divided_power(p, field, true); }

Bialgebra divided_power_char_p_unchecked(std::uint64_t p, const Field& field) {
  return divided_power(p, field, false);
}

CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

CayleyTable symmetric_group_table(std::size_t k) {
  const auto perms = permutations(k);
  CayleyTable t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<std::size_t> c(k);
      for (std::size_t x = 0; x < k; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

CayleyTable idempotent_monoid_table() { return {{0, 1}, {1, 1}}; }

Bialgebra cyclic_group(std::size_t n, const Field& field) {
  if (n == 0) throw ValidationError("cyclic group of order 0");
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  return group_algebra(cyclic_table(n), field, std::move(labels));
}

Bialgebra symmetric_group(std::size_t k, const Field& field) {
  if (k == 0 || k > 4) throw ValidationError("symmetric group: k must be between 1 and 4");
  std::vector<std::string> labels;
  for (const auto& p : permutations(k)) labels.push_back(cycle_label(p));
  return group_algebra(symmetric_group_table(k), field, std::move(labels));
}

Bialgebra idempotent_monoid(const Field& field) {
  return monoid_algebra(idempotent_monoid_table(), field, {"1", "s"});
}

Bialgebra by_name(const std::string& name, const Field& field) {
  auto number_after = [&](std::size_t colon) {
    std::uint64_t v = 0;
    const char* first = name.data() + colon + 1;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) throw ValidationError("bad parameter in " + name);
    return v;
  };
  if (name == "c2") return cyclic_group(2, field);
  if (name == "c3") return cyclic_group(3, field);
  if (name == "s3") return symmetric_group(3, field);
  if (name == "idempotent_monoid") return idempotent_monoid(field);
  if (name == "sweedler_h4") return sweedler_h4(field);
  if (name == "trivial") return trivial(field);
  if (name.rfind("cyclic:", 0) == 0) return cyclic_group(number_after(6), field);
  if (name.rfind("divided_power:", 0) == 0) return divided_power_char_p(number_after(13), field);
  throw ValidationError("unknown zoo member: " + name);
}

std::vector<std::string> names() {
  return {"c2", "c3", "s3", "cyclic:N", "idempotent_monoid", "sweedler_h4", "trivial", "divided_power:P"};
}

}  // namespace zoo

}  // namespace hopfkit
