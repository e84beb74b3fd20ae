#include "hopfkit/hopfmod.hpp"

#include <map>

namespace hopfkit {

namespace {

// Sparse column caches for a right action / coaction.
struct RightView {
  std::size_t n;
  std::size_t d;
  std::vector<SparseVector> act;
  std::vector<SparseVector> coact;
};

RightView view(const Bialgebra& b, std::size_t d, const Matrix& action, const Matrix& coaction) {
  RightView v{b.dim(), d, {}, {}};
  if (!action.empty()) v.act = sparse_columns(action);
  if (!coaction.empty()) v.coact = sparse_columns(coaction);
  v.act.resize(d * b.dim());
  v.coact.resize(d);
  return v;
}

// e_c . b_j for every (c, j) with weight, accumulated into out.
void add_action(const RightView& v, Vector& out, const Scalar& w, std::size_t c, std::size_t j) {
  for (const auto& [r, x] : v.act[c * v.n + j]) out[r].add_product(w, x);
}

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const Field& f, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw StructuralError(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols));
  if (!(m.field() == f)) throw StructuralError(std::string(what) + ": field mismatch");
}

Report module_axioms(const Bialgebra& b, std::size_t d, const Matrix& action) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  check_shape(action, d, d * n, f, "module action");
  const RightView v = view(b, d, action, Matrix());
  Report report;
  Check& unital = report.add("action_unital");
  for (std::size_t i = 0; i < d && unital.pass; ++i) {
    Vector x = zero_vector(d, f);
    for (std::size_t j = 0; j < n; ++j)
      if (!b.unit()[j].is_zero()) add_action(v, x, b.unit()[j], i, j);
    Report::expect(unital, {i}, x, unit_vector(d, i, f));
  }
  Check& assoc = report.add("action_associative");
  for (std::size_t i = 0; i < d && assoc.pass; ++i)
    for (std::size_t j = 0; j < n && assoc.pass; ++j)
      for (std::size_t k = 0; k < n && assoc.pass; ++k) {
        Vector lhs = zero_vector(d, f);
        for (const auto& [c, x] : v.act[i * n + j]) add_action(v, lhs, x, c, k);
        Vector rhs = zero_vector(d, f);
        for (const auto& [p, x] : b.product(j, k)) add_action(v, rhs, x, i, p);
        Report::expect(assoc, {i, j, k}, lhs, rhs);
      }
  return report;
}

Report comodule_axioms(const Bialgebra& b, std::size_t d, const Matrix& coaction) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  check_shape(coaction, d * n, d, f, "comodule coaction");
  const RightView v = view(b, d, Matrix(), coaction);
  Report report;
  Check& counital = report.add("coaction_counital");
  for (std::size_t i = 0; i < d && counital.pass; ++i) {
    Vector x = zero_vector(d, f);
    for (const auto& [cj, w] : v.coact[i]) x[cj / n].add_product(w, b.counit()[cj % n]);
    Report::expect(counital, {i}, x, unit_vector(d, i, f));
  }
  Check& coassoc = report.add("coaction_coassociative");
  for (std::size_t i = 0; i < d && coassoc.pass; ++i) {
    Vector lhs = zero_vector(d * n * n, f);
    Vector rhs = zero_vector(d * n * n, f);
    for (const auto& [cj, w] : v.coact[i]) {
      for (const auto& [ck, u] : v.coact[cj / n]) lhs[ck * n + cj % n].add_product(w, u);
      for (const auto& [pq, u] : b.coproduct(cj % n)) rhs[(cj / n) * n * n + pq].add_product(w, u);
    }
    Report::expect(coassoc, {i}, lhs, rhs);
  }
  return report;
}

Report right_hopf_axioms(const HopfModule& m) {
  const Bialgebra& b = m.bialgebra();
  const std::size_t n = b.dim(), d = m.dim();
  const Field& f = b.field();
  Report report = module_axioms(b, d, m.action());
  report.merge(comodule_axioms(b, d, m.coaction()));
  const RightView v = view(b, d, m.action(), m.coaction());
  Check& compat = report.add("compatibility");
  for (std::size_t i = 0; i < d && compat.pass; ++i)
    for (std::size_t j = 0; j < n && compat.pass; ++j) {
      const Vector lhs = m.coaction().apply(m.action().column(i * n + j));
      Vector rhs = zero_vector(d * n, f);
      for (const auto& [ck, w] : v.coact[i]) {
        const std::size_t c = ck / n, k = ck % n;
        for (const auto& [pq, u] : b.coproduct(j)) {
          const Scalar wu = w * u;
          for (const auto& [r, x] : v.act[c * n + pq / n]) {
            const Scalar wux = wu * x;
            for (const auto& [s, y] : b.product(k, pq % n)) rhs[r * n + s].add_product(wux, y);
          }
        }
      }
      Report::expect(compat, {i, j}, lhs, rhs);
    }
  return report;
}

const HopfModule& require_right(const HopfModule& m, HopfModule& storage) {
  if (m.hand() == Hand::right) return m;
  storage = to_right(m);
  return storage;
}

// f -> f o mu_M - mu_N o (f (x) B) as sparse rows over the unknowns f(r,c) at r*dm+c.
std::vector<SparseVector> module_equations(const Module& m, const Module& nm) {
  const std::size_t n = m.b.dim(), dm = m.dim, dn = nm.dim;
  const auto mcols = sparse_columns(m.action);
  // Rows of N's action: for each (r, b) the pairs (c', value) with mu_N(e_c' (x) b_b) having coordinate r.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> nrows(dn * n);
  for (std::size_t col = 0; col < dn * n; ++col)
    for (std::size_t r = 0; r < dn; ++r)
      if (!nm.action(r, col).is_zero()) nrows[r * n + col % n].emplace_back(col / n, nm.action(r, col));
  std::vector<SparseVector> eqs;
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t bb = 0; bb < n; ++bb)
      for (std::size_t r = 0; r < dn; ++r) {
        SparseVector eq;
        for (const auto& [c, x] : mcols[i * n + bb]) eq.push_back({r * dm + c, x});
        for (const auto& [c, x] : nrows[r * n + bb]) eq.push_back({c * dm + i, -x});
        if (!eq.empty()) eqs.push_back(std::move(eq));
      }
  return eqs;
}

// f -> delta_N o f - (f (x) B) o delta_M.
std::vector<SparseVector> comodule_equations(const Comodule& m, const Comodule& nc) {
  const std::size_t n = m.b.dim(), dm = m.dim, dn = nc.dim;
  std::vector<SparseVector> eqs;
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t j = 0; j < n; ++j) {
        SparseVector eq;
        for (std::size_t c = 0; c < dn; ++c)
          if (!nc.coaction(r * n + j, c).is_zero()) eq.push_back({c * dm + i, nc.coaction(r * n + j, c)});
        for (std::size_t c = 0; c < dm; ++c)
          if (!m.coaction(c * n + j, i).is_zero()) eq.push_back({r * dm + c, -m.coaction(c * n + j, i)});
        if (!eq.empty()) eqs.push_back(std::move(eq));
      }
  return eqs;
}

void require_same_bialgebra(const Bialgebra& a, const Bialgebra& b, const char* what) {
  if (!a.same_structure(b)) throw StructuralError(std::string(what) + ": modules over different bialgebras");
}

// (B (x) eps) on B (x) B coordinates.
Vector first_leg(const Bialgebra& b, const Vector& x) {
  const std::size_t n = b.dim();
  Vector out = zero_vector(n, b.field());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (!x[a * n + c].is_zero()) out[a].add_product(x[a * n + c], b.counit()[c]);
  return out;
}

Vector second_leg(const Bialgebra& b, const Vector& x) {
  const std::size_t n = b.dim();
  Vector out = zero_vector(n, b.field());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (!x[a * n + c].is_zero()) out[c].add_product(x[a * n + c], b.counit()[a]);
  return out;
}

// m -> m0 . s(m1) on a right Hopf module.
Matrix formula_map(const HopfModule& m, const Matrix& s) {
  const std::size_t n = m.bialgebra().dim(), d = m.dim();
  const RightView v = view(m.bialgebra(), d, m.action(), m.coaction());
  const auto simg = sparse_columns(s);
  Matrix out(d, d, m.field());
  for (std::size_t i = 0; i < d; ++i) {
    Vector col = zero_vector(d, m.field());
    for (const auto& [cj, w] : v.coact[i])
      for (const auto& [r, x] : simg[cj % n]) add_action(v, col, w * x, cj / n, r);
    for (std::size_t r = 0; r < d; ++r) out(r, i) = col[r];
  }
  return out;
}

// eta_M = (proj (x) B) o delta.
Matrix eta_matrix(const HopfModule& m, const QuotientSpace& bar) {
  const std::size_t n = m.bialgebra().dim(), d = m.dim(), q = bar.dim();
  Matrix eta(q * n, d, m.field());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t cj = 0; cj < d * n; ++cj) {
      const Scalar& w = m.coaction()(cj, i);
      if (w.is_zero()) continue;
      for (std::size_t p = 0; p < q; ++p) {
        const Scalar& x = bar.projection()(p, cj / n);
        if (!x.is_zero()) eta(p * n + cj % n, i).add_product(w, x);
      }
    }
  return eta;
}

Matrix theta_matrix(const HopfModule& m, const Subspace& coinv) {
  const std::size_t n = m.bialgebra().dim(), d = m.dim(), k = coinv.dim();
  const RightView v = view(m.bialgebra(), d, m.action(), m.coaction());
  Matrix theta(d, k * n, m.field());
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < n; ++j) {
      Vector col = zero_vector(d, m.field());
      for (std::size_t c = 0; c < d; ++c)
        if (!coinv.basis()(l, c).is_zero()) add_action(v, col, coinv.basis()(l, c), c, j);
      for (std::size_t r = 0; r < d; ++r) theta(r, l * n + j) = col[r];
    }
  return theta;
}

// Coordinates of each column of x in `space`; nullopt if some column is outside it.
std::optional<Matrix> coordinate_matrix(const Subspace& space, const Matrix& x) {
  Matrix out(space.dim(), x.cols(), x.field());
  for (std::size_t c = 0; c < x.cols(); ++c) {
    auto coords = space.coordinates(x.column(c));
    if (!coords) return std::nullopt;
    for (std::size_t r = 0; r < space.dim(); ++r) out(r, c) = (*coords)[r];
  }
  return out;
}

bool kills(const Matrix& map, const Subspace& sub) {
  for (std::size_t l = 0; l < sub.dim(); ++l)
    if (!is_zero(map.apply(sub.basis_vector(l)))) return false;
  return true;
}

}  // namespace

HopfModule::HopfModule(Bialgebra b, std::size_t dim, Matrix action, Matrix coaction, Hand hand)
    : HopfModule(unchecked(std::move(b), dim, std::move(action), std::move(coaction), hand)) {
  Report r = validate_hopf_module(*this);
  if (!r.ok()) throw ValidationError("Hopf module axioms fail:\n" + r.str());
}

HopfModule HopfModule::unchecked(Bialgebra b, std::size_t dim, Matrix action, Matrix coaction, Hand hand) {
  const std::size_t n = b.dim();
  check_shape(action, dim, dim * n, b.field(), "Hopf module action");
  check_shape(coaction, dim * n, dim, b.field(), "Hopf module coaction");
  HopfModule m;
  m.b_ = std::move(b);
  m.dim_ = dim;
  m.action_ = std::move(action);
  m.coaction_ = std::move(coaction);
  m.hand_ = hand;
  return m;
}

Module HopfModule::module() const {
  if (hand_ != Hand::right) throw StructuralError("HopfModule::module: left module");
  return Module{b_, dim_, action_};
}

Comodule HopfModule::comodule() const {
  if (hand_ != Hand::right) throw StructuralError("HopfModule::comodule: left module");
  return Comodule{b_, dim_, coaction_};
}

Report validate_module(const Module& m) { return module_axioms(m.b, m.dim, m.action); }

Report validate_comodule(const Comodule& c) { return comodule_axioms(c.b, c.dim, c.coaction); }

Report validate_hopf_module(const HopfModule& m) {
  if (m.hand() == Hand::right) return right_hopf_axioms(m);
  return right_hopf_axioms(to_right(m));
}

HopfModule to_right(const HopfModule& left) {
  if (left.hand() != Hand::left) throw StructuralError("to_right: module is already right-handed");
  const std::size_t n = left.bialgebra().dim(), d = left.dim();
  Matrix action(d, d * n, left.field());
  Matrix coaction(d * n, d, left.field());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < d; ++r) {
        action(r, i * n + j) = left.action()(r, j * d + i);
        coaction(i * n + j, r) = left.coaction()(j * d + i, r);
      }
    }
  return HopfModule::unchecked(op_cop(left.bialgebra(), true, true), d, std::move(action), std::move(coaction),
                               Hand::right);
}

HopfModule free_hopf_module(const Bialgebra& b, std::size_t dim_v, Hand hand) {
  const std::size_t n = b.dim(), d = dim_v * n;
  const Field& f = b.field();
  Matrix action(d, d * n, f);
  Matrix coaction(d * n, d, f);
  for (std::size_t v = 0; v < dim_v; ++v)
    for (std::size_t x = 0; x < n; ++x) {
      if (hand == Hand::right) {
        const std::size_t e = v * n + x;
        for (std::size_t a = 0; a < n; ++a)
          for (const auto& [k, c] : b.product(x, a)) action(v * n + k, e * n + a) = c;
        for (const auto& [jk, c] : b.coproduct(x)) coaction((v * n + jk / n) * n + jk % n, e) = c;
      } else {
        const std::size_t e = x * dim_v + v;
        for (std::size_t a = 0; a < n; ++a)
          for (const auto& [k, c] : b.product(a, x)) action(k * dim_v + v, a * d + e) = c;
        for (const auto& [jk, c] : b.coproduct(x)) coaction((jk / n) * d + (jk % n) * dim_v + v, e) = c;
      }
    }
  return HopfModule(b, d, std::move(action), std::move(coaction), hand);
}

HopfModule regular_hopf_module(const Bialgebra& b, Hand hand) { return free_hopf_module(b, 1, hand); }

HopfModule build_b_hat(const Bialgebra& b) {
  const std::size_t n = b.dim(), d = n * n;
  const Field& f = b.field();
  Matrix action(d, d * n, f);
  Matrix coaction(d * n, d, f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t e = a * n + y;
      for (std::size_t c = 0; c < n; ++c)
        for (const auto& [pq, w] : b.coproduct(c))
          for (const auto& [k1, u1] : b.product(a, pq / n)) {
            const Scalar wu = w * u1;
            for (const auto& [k2, u2] : b.product(y, pq % n)) action(k1 * n + k2, e * n + c).add_product(wu, u2);
          }
      for (const auto& [jk, w] : b.coproduct(y)) coaction((a * n + jk / n) * n + jk % n, e) = w;
    }
  return HopfModule(b, d, std::move(action), std::move(coaction), Hand::right);
}

HopfModule build_b_check(const Bialgebra& b) {
  const std::size_t n = b.dim(), d = n * n;
  const Field& f = b.field();
  Matrix action(d, d * n, f);
  Matrix coaction(d * n, d, f);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t e = y * n + a;
      for (std::size_t c = 0; c < n; ++c)
        for (const auto& [pq, w] : b.coproduct(c))
          for (const auto& [k1, u1] : b.product(pq / n, y)) {
            const Scalar wu = w * u1;
            for (const auto& [k2, u2] : b.product(pq % n, a)) action(k1 * n + k2, c * d + e).add_product(wu, u2);
          }
      for (const auto& [jk, w] : b.coproduct(y)) coaction((jk / n) * d + (jk % n) * n + a, e) = w;
    }
  return HopfModule(b, d, std::move(action), std::move(coaction), Hand::left);
}

Module regular_module(const Bialgebra& b) { return Module{b, b.dim(), b.mult()}; }

Module trivial_module(const Bialgebra& b, std::size_t dim_v) {
  const std::size_t n = b.dim();
  Matrix action(dim_v, dim_v * n, b.field());
  for (std::size_t v = 0; v < dim_v; ++v)
    for (std::size_t j = 0; j < n; ++j) action(v, v * n + j) = b.counit()[j];
  return Module{b, dim_v, std::move(action)};
}

Comodule regular_comodule(const Bialgebra& b) { return Comodule{b, b.dim(), b.comult()}; }

Comodule trivial_comodule(const Bialgebra& b, std::size_t dim_v) {
  const std::size_t n = b.dim();
  Matrix coaction(dim_v * n, dim_v, b.field());
  for (std::size_t v = 0; v < dim_v; ++v)
    for (std::size_t j = 0; j < n; ++j) coaction(v * n + j, v) = b.unit()[j];
  return Comodule{b, dim_v, std::move(coaction)};
}

Subspace coinvariants(const HopfModule& m) {
  HopfModule storage;
  const HopfModule& r = require_right(m, storage);
  const std::size_t n = r.bialgebra().dim();
  Matrix defect = r.coaction();
  for (std::size_t v = 0; v < r.dim(); ++v)
    for (std::size_t j = 0; j < n; ++j) defect(v * n + j, v) -= r.bialgebra().unit()[j];
  return kernel_basis(defect);
}

Subspace augmentation_submodule(const HopfModule& m) {
  HopfModule storage;
  const HopfModule& r = require_right(m, storage);
  const std::size_t n = r.bialgebra().dim(), d = r.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector g = r.action().column(i * n + j);
      g[i] -= r.bialgebra().counit()[j];
      if (!is_zero(g)) gens.push_back(std::move(g));
    }
  return Subspace::span(gens, d, r.field());
}

QuotientSpace bar_quotient(const HopfModule& m) { return QuotientSpace(augmentation_submodule(m)); }

SigmaData sigma(const HopfModule& m) {
  SigmaData s;
  s.coinv = coinvariants(m);
  const Subspace aug = augmentation_submodule(m);
  s.bar = QuotientSpace(aug);
  s.sigma = s.bar.projection() * s.coinv.inclusion();
  if (s.coinv.dim() == s.bar.dim()) {
    s.inverse = invert(s.sigma);
    s.invertible = s.inverse.has_value();
  }
  s.intersection_dim = intersection_dim(s.coinv, aug);
  s.sum_dim = (s.coinv + aug).dim();
  s.decomposition = s.intersection_dim == 0 && s.sum_dim == m.dim();
  return s;
}

SigmaData varsigma(const HopfModule& m) {
  if (m.hand() != Hand::left) throw StructuralError("varsigma: requires a left Hopf module");
  return sigma(m);
}

MapResult sigma_inverse_formula(const HopfModule& m, const Matrix& s) {
  HopfModule storage;
  const HopfModule& r = require_right(m, storage);
  const std::size_t n = r.bialgebra().dim();
  if (s.rows() != n || s.cols() != n || !(s.field() == r.field()))
    throw StructuralError("sigma_inverse_formula: S must be n x n over the same field");
  const Subspace coinv = coinvariants(r);
  const QuotientSpace bar = bar_quotient(r);
  const Matrix f = formula_map(r, s);
  MapResult out;
  if (!kills(f, bar.denominator())) {
    out.failure = "not well-defined";
    return out;
  }
  auto coords = coordinate_matrix(coinv, f * bar.section());
  if (!coords) {
    out.failure = "not coinvariant";
    return out;
  }
  out.map = std::move(*coords);
  return out;
}

AdjunctionMaps adjunction_maps(const HopfModule& m) {
  HopfModule storage;
  const HopfModule& r = require_right(m, storage);
  AdjunctionMaps a;
  a.coinv = coinvariants(r);
  a.bar = bar_quotient(r);
  a.eta = eta_matrix(r, a.bar);
  a.theta = theta_matrix(r, a.coinv);
  return a;
}

FreeAdjunctionMaps adjunction_maps(const Bialgebra& b, std::size_t dim_v) {
  const std::size_t n = b.dim();
  FreeAdjunctionMaps a{free_hopf_module(b, dim_v), Matrix(), Matrix()};
  const QuotientSpace bar = bar_quotient(a.free);
  const Subspace coinv = coinvariants(a.free);
  a.epsilon = Matrix(dim_v, bar.dim(), b.field());
  for (std::size_t p = 0; p < bar.dim(); ++p) {
    const Vector x = bar.section().column(p);
    for (std::size_t v = 0; v < dim_v; ++v)
      for (std::size_t j = 0; j < n; ++j) a.epsilon(v, p).add_product(x[v * n + j], b.counit()[j]);
  }
  a.gamma = Matrix(coinv.dim(), dim_v, b.field());
  for (std::size_t v = 0; v < dim_v; ++v) {
    auto coords = coinv.coordinates(kron(unit_vector(dim_v, v, b.field()), b.unit()));
    if (!coords) throw TheoremViolation("v (x) 1 is not coinvariant");
    for (std::size_t l = 0; l < coinv.dim(); ++l) a.gamma(l, v) = (*coords)[l];
  }
  return a;
}

Report check_triangle_identities(const HopfModule& m, std::size_t dim_v) {
  HopfModule storage;
  const HopfModule& r = require_right(m, storage);
  const Bialgebra& b = r.bialgebra();
  const std::size_t n = b.dim();
  const Field& f = b.field();
  Report report;

  const FreeAdjunctionMaps fv = adjunction_maps(b, dim_v);
  const AdjunctionMaps afv = adjunction_maps(fv.free);
  Check& t1 = report.add("counit_eta_free");
  const Matrix lhs1 = kron(fv.epsilon, Matrix::identity(n, f)) * afv.eta;
  if (!(lhs1 == Matrix::identity(fv.free.dim(), f))) Report::fail(t1, {dim_v}, {}, {}, lhs1.str());
  Check& t3 = report.add("theta_gamma_free");
  const Matrix lhs3 = afv.theta * kron(fv.gamma, Matrix::identity(n, f));
  if (!(lhs3 == Matrix::identity(fv.free.dim(), f))) Report::fail(t3, {dim_v}, {}, {}, lhs3.str());

  const AdjunctionMaps am = adjunction_maps(r);
  const std::size_t q = am.bar.dim();
  const FreeAdjunctionMaps fq = adjunction_maps(b, q);
  const QuotientSpace bar_q = bar_quotient(fq.free);
  Check& t2 = report.add("counit_bar_eta");
  const Matrix induced = bar_q.projection() * am.eta;
  if (!kills(induced, am.bar.denominator())) {
    Report::fail(t2, {}, {}, {}, "bar(eta_M) is not well-defined");
  } else {
    const Matrix lhs2 = fq.epsilon * (induced * am.bar.section());
    if (!(lhs2 == Matrix::identity(q, f))) Report::fail(t2, {}, {}, {}, lhs2.str());
  }

  const std::size_t k = am.coinv.dim();
  const FreeAdjunctionMaps fk = adjunction_maps(b, k);
  const Subspace coinv_k = coinvariants(fk.free);
  Check& t4 = report.add("coinv_theta_gamma");
  auto coinv_theta = coordinate_matrix(am.coinv, am.theta * coinv_k.inclusion());
  if (!coinv_theta) {
    Report::fail(t4, {}, {}, {}, "theta_M does not preserve coinvariants");
  } else {
    const Matrix lhs4 = *coinv_theta * fk.gamma;
    if (!(lhs4 == Matrix::identity(k, f))) Report::fail(t4, {}, {}, {}, lhs4.str());
  }
  return report;
}

GaloisData hopf_galois(const Bialgebra& b) {
  const std::size_t n = b.dim();
  GaloisData g{Matrix(n * n, n * n, b.field()), 0, false};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [jk, w] : b.coproduct(y))
        for (const auto& [p, u] : b.product(a, jk / n)) g.beta(p * n + jk % n, a * n + y).add_product(w, u);
  g.rank = rank(g.beta);
  g.bijective = g.rank == n * n;
  return g;
}

MapResult nu_from_eta(const Bialgebra& b) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  const HopfModule bhat = build_b_hat(b);
  const QuotientSpace bar = bar_quotient(bhat);
  const Matrix eta = eta_matrix(bhat, bar);
  MapResult out;
  std::optional<Matrix> inv;
  if (eta.rows() == eta.cols()) inv = invert(eta);
  if (!inv) {
    out.failure = "eta not invertible";
    return out;
  }
  Matrix nu(n, n, f);
  for (std::size_t y = 0; y < n; ++y) {
    const Vector cls = bar.project(kron(b.unit(), unit_vector(n, y, f)));
    const Vector pre = inv->apply(kron(cls, b.unit()));
    const Vector col = first_leg(b, pre);
    for (std::size_t r = 0; r < n; ++r) nu(r, y) = col[r];
  }
  if (!(convolution(nu, Matrix::identity(n, f), b) == b.unit_counit()))
    throw TheoremViolation("nu is not a left convolution inverse of the identity");
  out.map = std::move(nu);
  return out;
}

namespace {

HopfVerdict decide(const Bialgebra& b, Hand hand) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  const bool right = hand == Hand::right;
  const HopfModule m = right ? build_b_hat(b) : build_b_check(b);
  HopfVerdict v;
  v.sigma = sigma(m);
  v.antipode = solve_antipode(b, right ? Side::right : Side::left);
  if (v.antipode) {
    v.antihom = check_antihom(b, v.antipode->s);
    v.super = check_super_identities(right ? b : op_cop(b, true, true), v.antipode->s);
  }
  const bool by_antipode = v.antipode && v.antihom.ok() && v.super.ok();
  const std::string which = right ? "sigma" : "varsigma";
  if (by_antipode != v.sigma.invertible)
    throw TheoremViolation(which + " invertibility disagrees with the antipode route");
  v.hopf = by_antipode;
  if (!v.hopf) return v;

  Matrix s(n, n, f);
  for (std::size_t y = 0; y < n; ++y) {
    // Right: overline(1 (x) b); left: overline(b (x) 1).
    const Vector e = unit_vector(n, y, f);
    const Vector cls = v.sigma.bar.project(right ? kron(b.unit(), e) : kron(e, b.unit()));
    const Vector pre = v.sigma.coinv.element(v.sigma.inverse->apply(cls));
    const Vector col = right ? first_leg(b, pre) : second_leg(b, pre);
    for (std::size_t r = 0; r < n; ++r) s(r, y) = col[r];
  }
  if (!(s == v.antipode->s)) throw TheoremViolation("antipode recovered from " + which + " differs from the solver");
  v.s_from_sigma = std::move(s);
  const MapResult formula = sigma_inverse_formula(m, v.antipode->s);
  if (!formula || !(*formula.map == *v.sigma.inverse))
    throw TheoremViolation(which + " inverse formula disagrees with the matrix inverse");
  return v;
}

}  // namespace

HopfVerdict decide_right_hopf(const Bialgebra& b) { return decide(b, Hand::right); }

HopfVerdict decide_left_hopf(const Bialgebra& b) { return decide(b, Hand::left); }

Report check_sigma_left_linear(const Bialgebra& b) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  const HopfModule m = build_b_hat(b);
  const SigmaData s = sigma(m);
  Report report;
  Check& c = report.add("sigma_left_linear");
  for (std::size_t a = 0; a < n && c.pass; ++a) {
    const Matrix la = kron(b.left_mult(unit_vector(n, a, f)), Matrix::identity(n, f));
    auto on_coinv = coordinate_matrix(s.coinv, la * s.coinv.inclusion());
    const Matrix on_bar_lift = s.bar.projection() * la;
    if (!on_coinv || !kills(on_bar_lift, s.bar.denominator())) {
      Report::fail(c, {a}, {}, {}, "left action does not descend");
      break;
    }
    const Matrix lhs = s.sigma * *on_coinv;
    const Matrix rhs = (on_bar_lift * s.bar.section()) * s.sigma;
    if (!(lhs == rhs)) Report::fail(c, {a}, {}, {}, lhs.str() + " vs " + rhs.str());
  }
  return report;
}

const char* category_name(Category c) {
  switch (c) {
    case Category::vec: return "vec";
    case Category::mod: return "mod";
    case Category::comod: return "comod";
    case Category::hopf: return "hopf";
  }
  return "?";
}

Subspace hom_space(const HopfModule& m, const HopfModule& n, Category category) {
  if (m.hand() != n.hand()) throw StructuralError("hom_space: handedness mismatch");
  require_same_bialgebra(m.bialgebra(), n.bialgebra(), "hom_space");
  HopfModule ms, ns;
  const HopfModule& rm = require_right(m, ms);
  const HopfModule& rn = require_right(n, ns);
  const std::size_t unknowns = rm.dim() * rn.dim();
  switch (category) {
    case Category::vec: return Subspace::whole(unknowns, m.field());
    case Category::mod: return kernel_of_rows(module_equations(rm.module(), rn.module()), unknowns, m.field());
    case Category::comod:
      return kernel_of_rows(comodule_equations(rm.comodule(), rn.comodule()), unknowns, m.field());
    case Category::hopf: {
      const Subspace colinear = kernel_of_rows(comodule_equations(rm.comodule(), rn.comodule()), unknowns, m.field());
      return kernel_within(colinear, module_equations(rm.module(), rn.module()));
    }
  }
  throw StructuralError("hom_space: unknown category");
}

Subspace hom_modules(const Module& m, const Module& n) {
  require_same_bialgebra(m.b, n.b, "hom_modules");
  return kernel_of_rows(module_equations(m, n), m.dim * n.dim, m.b.field());
}

Subspace hom_comodules(const Comodule& m, const Comodule& n) {
  require_same_bialgebra(m.b, n.b, "hom_comodules");
  return kernel_of_rows(comodule_equations(m, n), m.dim * n.dim, m.b.field());
}

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols, const Field& field) {
  if (v.size() != rows * cols) throw StructuralError("unflatten: size mismatch");
  Matrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

Vector flatten(const Matrix& f) {
  Vector v;
  v.reserve(f.rows() * f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) v.push_back(f(r, c));
  return v;
}

}  // namespace hopfkit
