#include "hopfkit/frob.hpp"

#include <sstream>

namespace hopfkit {

namespace {

// x -> x . a on a right module, as a dim x dim matrix.
Matrix right_action(const Module& m, const Vector& a) {
  const std::size_t n = m.b.dim();
  Matrix out(m.dim, m.dim, m.b.field());
  for (std::size_t c = 0; c < m.dim; ++c)
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j].is_zero()) continue;
      for (std::size_t r = 0; r < m.dim; ++r) out(r, c).add_product(a[j], m.action(r, c * n + j));
    }
  return out;
}

Matrix column_matrix(const Vector& v, const Field& f) { return Matrix::from_columns({v}, v.size(), f); }

Matrix row_matrix(const Vector& v, const Field& f) { return Matrix::from_rows({v}, v.size(), f); }

std::string dims(std::size_t a, std::size_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

void expect_member(Check& c, const Subspace& space, const Matrix& f, std::size_t index, const std::string& what) {
  if (!space.contains(flatten(f))) Report::fail(c, {index}, {}, {}, what);
}

void expect_equal(Check& c, const Matrix& lhs, const Matrix& rhs, std::size_t index, BijectionReport& out) {
  ++out.round_trips;
  if (!(lhs == rhs)) Report::fail(c, {index}, flatten(lhs), flatten(rhs));
}

Vector matrix_coords(const Subspace& s, const Matrix& f, bool& ok) {
  auto c = s.coordinates(flatten(f));
  if (!c) {
    ok = false;
    return zero_vector(s.dim(), f.field());
  }
  return *c;
}

std::vector<std::string> dual_labels(const Bialgebra& b) {
  std::vector<std::string> out;
  for (const auto& l : b.labels()) out.push_back(l + "^*");
  return out;
}

}  // namespace

IntegralSpaces integral_spaces(const Bialgebra& b) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  Matrix li(n * n, n, f), ri(n * n, n, f), lo(n * n, n, f), ro(n * n, n, f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t c = 0; c < n; ++c) {
        li(a * n + p, c) = b.mult()(p, a * n + c);
        ri(a * n + p, c) = b.mult()(p, c * n + a);
        lo(a * n + p, c) = b.comult()(p * n + c, a);
        ro(a * n + p, c) = b.comult()(c * n + p, a);
        if (p == c) {
          li(a * n + p, c) -= b.counit()[a];
          ri(a * n + p, c) -= b.counit()[a];
        }
        if (c == a) {
          lo(a * n + p, c) -= b.unit()[p];
          ro(a * n + p, c) -= b.unit()[p];
        }
      }
  return IntegralSpaces{kernel_basis(li), kernel_basis(ri), kernel_basis(lo), kernel_basis(ro)};
}

FrobeniusSystem frobenius_system_from(const Bialgebra& b, const Vector& psi) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  FrobeniusSystem sys;
  sys.psi = psi;
  sys.form = Matrix(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : b.product(i, j)) sys.form(i, j).add_product(psi[k], c);
  auto inv = invert(sys.form);
  if (!inv) throw ValidationError("degenerate form");
  sys.big_t = inv->transpose().apply(b.counit());
  sys.small_t = inv->apply(b.counit());
  const Vector dt_big = b.comultiply(sys.big_t);
  const Vector dt_small = b.comultiply(sys.small_t);
  sys.e = zero_vector(n * n, f);
  // e = psi(T2 t1) t2 (x) T1
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (dt_big[j * n + k].is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          if (dt_small[p * n + q].is_zero()) continue;
          sys.e[q * n + j].add_product(dt_big[j * n + k] * dt_small[p * n + q], sys.form(k, p));
        }
    }
  const Report r = casimir_report(b, sys);
  if (!r.ok()) throw TheoremViolation("Frobenius system invariants fail:\n" + r.str());
  return sys;
}

FhResult fh_system(const Bialgebra& b) {
  FhResult out;
  const Subspace ints = integral_spaces(b).right_on_b;
  out.integral_dim = ints.dim();
  if (ints.dim() != 1) {
    out.failure = "integral space dim != 1";
    return out;
  }
  out.psi = ints.basis_vector(0);
  Matrix form(b.dim(), b.dim(), b.field());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (const auto& [k, c] : b.product(i, j)) form(i, j).add_product((*out.psi)[k], c);
  out.form = form;
  if (rank(form) < b.dim()) {
    out.failure = "degenerate form";
    return out;
  }
  out.system = frobenius_system_from(b, *out.psi);
  return out;
}

Report casimir_report(const Bialgebra& b, const FrobeniusSystem& sys) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  Report report;
  Vector left = zero_vector(n, f), right = zero_vector(n, f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar& x = sys.e[a * n + c];
      if (x.is_zero()) continue;
      left[a].add_product(x, sys.psi[c]);
      right[c].add_product(x, sys.psi[a]);
    }
  Report::expect(report.add("frob_rel_left"), {}, left, b.unit(), "e1 psi(e2)");
  Report::expect(report.add("frob_rel_right"), {}, right, b.unit(), "psi(e1) e2");

  Check& central = report.add("centrality");
  for (std::size_t a = 0; a < n && central.pass; ++a) {
    const Vector ea = unit_vector(n, a, f);
    Report::expect(central, {a}, b.multiply2(kron(ea, b.unit()), sys.e), b.multiply2(sys.e, kron(b.unit(), ea)));
  }

  Check& norms = report.add("norms");
  for (std::size_t y = 0; y < n && norms.pass; ++y) {
    const Vector ey = unit_vector(n, y, f);
    Report::expect(norms, {y}, {dot(sys.psi, b.multiply(sys.big_t, ey))}, {b.counit()[y]}, "psi(T b)");
    Report::expect(norms, {y}, {dot(sys.psi, b.multiply(ey, sys.small_t))}, {b.counit()[y]}, "psi(b t)");
  }
  Report::expect(report.add("psi_of_T"), {}, {dot(sys.psi, sys.big_t)}, {f.one()});

  // (a (x) b) -> a1 (x) b1 (x) a2 b2 applied to e must give e (x) 1.
  Vector lhs = zero_vector(n * n * n, f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar& x = sys.e[a * n + c];
      if (x.is_zero()) continue;
      for (const auto& [a12, u] : b.coproduct(a))
        for (const auto& [c12, w] : b.coproduct(c)) {
          const Scalar xuw = x * u * w;
          for (const auto& [k, y] : b.product(a12 % n, c12 % n))
            lhs[((a12 / n) * n + c12 / n) * n + k].add_product(xuw, y);
        }
    }
  Report::expect(report.add("coinvariance"), {}, lhs, kron(sys.e, b.unit()));
  return report;
}

FhAntipode antipode_from_fh(const Bialgebra& b, const FrobeniusSystem& sys) {
  const std::size_t n = b.dim();
  const Field& f = b.field();
  const Vector dt_big = b.comultiply(sys.big_t);
  const Vector dt_small = b.comultiply(sys.small_t);
  FhAntipode out{Matrix(n, n, f), Matrix(n, n, f)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.s(k, a).add_product(dt_big[j * n + k], sys.form(j, a));
        out.s_inv(k, a).add_product(dt_small[j * n + k], sys.form(a, j));
      }
  const Matrix id = Matrix::identity(n, f);
  if (!(out.s * out.s_inv == id) || !(out.s_inv * out.s == id))
    throw TheoremViolation("psi(T1 a)T2 and psi(a t1)t2 are not inverse");
  if (!(convolution(id, out.s, b) == b.unit_counit()) || !(convolution(out.s, id, b) == b.unit_counit()))
    throw TheoremViolation("antipode from the Frobenius system is not a convolution inverse");
  auto solved = solve_antipode(b, Side::both);
  if (!solved || !(solved->s == out.s)) throw TheoremViolation("antipode from the Frobenius system differs from the solver");
  return out;
}

BijectionReport verify_comodule_adjunction(const Bialgebra& b, const FrobeniusSystem& sys, const HopfModule& m,
                                           const Comodule& p) {
  const std::size_t n = b.dim(), dm = m.dim(), dp = p.dim;
  const Field& f = b.field();
  const Module mm = m.module();

  // P (x)~ B: (x (x) c) -> x0 (x) c1 (x) x1 c2, (x (x) c).a = x (x) ca.
  const std::size_t d = dp * n;
  Matrix action(d, d * n, f);
  Matrix coaction(d * n, d, f);
  const auto pco = sparse_columns(p.coaction);
  for (std::size_t x = 0; x < dp; ++x)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t e = x * n + c;
      for (std::size_t a = 0; a < n; ++a)
        for (const auto& [k, w] : b.product(c, a)) action(x * n + k, e * n + a) = w;
      for (const auto& [x01, w] : pco[x])
        for (const auto& [c12, u] : b.coproduct(c))
          for (const auto& [s, y] : b.product(x01 % n, c12 % n))
            coaction(((x01 / n) * n + c12 / n) * n + s, e).add_product(w * u, y);
    }
  const HopfModule pb(b, d, std::move(action), std::move(coaction));

  BijectionReport out;
  const Subspace h1 = hom_comodules(m.comodule(), p);
  const Subspace h2 = hom_space(m, pb, Category::hopf);
  out.dim_source = h1.dim();
  out.dim_target = h2.dim();
  Check& same = out.report.add("dimensions");
  if (h1.dim() != h2.dim()) Report::fail(same, {}, {}, {}, dims(h1.dim(), h2.dim()));

  std::vector<Matrix> right_by(n);
  for (std::size_t i = 0; i < n; ++i) right_by[i] = right_action(mm, unit_vector(n, i, f));
  auto phi = [&](const Matrix& fm) {
    Matrix g(d, dm, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& x = sys.e[i * n + j];
        if (x.is_zero()) continue;
        g += x * kron(fm * right_by[i], column_matrix(unit_vector(n, j, f), f));
      }
    return g;
  };
  const Matrix p_psi = kron(Matrix::identity(dp, f), row_matrix(sys.psi, f));
  auto inv = [&](const Matrix& g) { return p_psi * g; };

  Check& lands = out.report.add("phi_lands");
  Check& round1 = out.report.add("inverse_after_phi");
  for (std::size_t l = 0; l < h1.dim(); ++l) {
    const Matrix fm = unflatten(h1.basis_vector(l), dp, dm, f);
    const Matrix g = phi(fm);
    expect_member(lands, h2, g, l, "phi(f) is not a Hopf-module map");
    expect_equal(round1, inv(g), fm, l, out);
  }
  Check& lands2 = out.report.add("inverse_lands");
  Check& round2 = out.report.add("phi_after_inverse");
  for (std::size_t l = 0; l < h2.dim(); ++l) {
    const Matrix g = unflatten(h2.basis_vector(l), d, dm, f);
    const Matrix fm = inv(g);
    expect_member(lands2, h1, fm, l, "(P (x) psi) g is not colinear");
    expect_equal(round2, phi(fm), g, l, out);
  }
  return out;
}

BijectionReport verify_coinv_bijection(const Bialgebra& b, const FrobeniusSystem& sys, const Matrix& s,
                                       const HopfModule& m, std::size_t dim_v) {
  const std::size_t n = b.dim(), dm = m.dim();
  const Field& f = b.field();
  const Module mm = m.module();
  BijectionReport out;
  const Subspace h1 = hom_comodules(m.comodule(), trivial_comodule(b, dim_v));
  const Subspace coinv = coinvariants(m);
  const std::size_t k = coinv.dim();
  out.dim_source = h1.dim();
  out.dim_target = dim_v * k;
  Check& same = out.report.add("dimensions");
  if (out.dim_source != out.dim_target) Report::fail(same, {}, {}, {}, dims(out.dim_source, out.dim_target));

  const Matrix by_t = right_action(mm, sys.small_t) * coinv.inclusion();
  auto phi = [&](const Matrix& fm) { return fm * by_t; };

  // m -> m0 S(m1) psi(m2), then coordinates in M^coB.
  Matrix proj(dm, dm, f);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t cj = 0; cj < dm * n; ++cj) {
      const Scalar& w = m.coaction()(cj, i);
      if (w.is_zero()) continue;
      for (const auto& [pq, u] : b.coproduct(cj % n)) {
        const Scalar wu = w * u * sys.psi[pq % n];
        if (wu.is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r) {
          if (s(r, pq / n).is_zero()) continue;
          const Scalar x = wu * s(r, pq / n);
          for (std::size_t y = 0; y < dm; ++y) proj(y, i).add_product(x, m.action()(y, (cj / n) * n + r));
        }
      }
    }
  Check& coinvariant = out.report.add("projection_coinvariant");
  Matrix coords(k, dm, f);
  for (std::size_t i = 0; i < dm; ++i) {
    auto c = coinv.coordinates(proj.column(i));
    if (!c) {
      Report::fail(coinvariant, {i}, proj.column(i), {}, "m0 S(m1) psi(m2) is not coinvariant");
      return out;
    }
    for (std::size_t l = 0; l < k; ++l) coords(l, i) = (*c)[l];
  }
  auto inv = [&](const Matrix& g) { return g * coords; };

  Check& round1 = out.report.add("inverse_after_phi");
  for (std::size_t l = 0; l < h1.dim(); ++l) {
    const Matrix fm = unflatten(h1.basis_vector(l), dim_v, dm, f);
    expect_equal(round1, inv(phi(fm)), fm, l, out);
  }
  Check& lands = out.report.add("inverse_lands");
  Check& round2 = out.report.add("phi_after_inverse");
  for (std::size_t l = 0; l < dim_v * k; ++l) {
    const Matrix g = unflatten(unit_vector(dim_v * k, l, f), dim_v, k, f);
    const Matrix fm = inv(g);
    expect_member(lands, h1, fm, l, "g(m0 S(m1)) psi(m2) is not colinear");
    expect_equal(round2, phi(fm), g, l, out);
  }
  return out;
}

BijectionReport gamma_lambda(const Bialgebra& b, const FrobeniusSystem& sys, const Matrix& s, const HopfModule& m) {
  const std::size_t n = b.dim(), dm = m.dim();
  const Field& f = b.field();
  const HopfModule bhat = build_b_hat(b);
  BijectionReport out;
  const Subspace h = hom_space(bhat, m, Category::hopf);
  out.dim_source = h.dim();
  out.dim_target = dm;
  Check& same = out.report.add("dimensions");
  if (h.dim() != dm) Report::fail(same, {}, {}, {}, dims(h.dim(), dm));

  // w = e1 e2_1 (x) e2_2, so Gamma(f) = f(w).
  Vector w = zero_vector(n * n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = sys.e[i * n + j];
      if (x.is_zero()) continue;
      for (const auto& [pq, u] : b.coproduct(j))
        for (const auto& [k, y] : b.product(i, pq / n)) w[k * n + pq % n].add_product(x * u, y);
    }
  auto gamma = [&](const Matrix& g) { return g.apply(w); };

  // S(b_j) b_q and psi(b_j b_a S(b_p)).
  std::vector<Vector> s_times(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t q = 0; q < n; ++q) s_times[j * n + q] = b.multiply(s.column(j), unit_vector(n, q, f));
  std::vector<Scalar> psi_of(n * n * n, f.zero());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < n; ++a) {
      Vector ja = zero_vector(n, f);
      for (const auto& [k, y] : b.product(j, a)) ja[k] = y;
      for (std::size_t p = 0; p < n; ++p) psi_of[(j * n + a) * n + p] = dot(sys.psi, b.multiply(ja, s.column(p)));
    }

  const auto coact = sparse_columns(m.coaction());
  auto lambda = [&](const Vector& mv) {
    Matrix g(dm, n * n, f);
    for (std::size_t i = 0; i < dm; ++i) {
      if (mv[i].is_zero()) continue;
      for (const auto& [cj, w1] : coact[i])
        for (const auto& [j12, w2] : b.coproduct(cj % n)) {
          const Scalar ww = mv[i] * w1 * w2;
          const std::size_t c = cj / n, j1 = j12 / n, j2 = j12 % n;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t y = 0; y < n; ++y)
              for (const auto& [pq, w3] : b.coproduct(y)) {
                const Scalar& ps = psi_of[(j2 * n + a) * n + pq / n];
                if (ps.is_zero()) continue;
                const Scalar coeff = ww * w3 * ps;
                const Vector& sb = s_times[j1 * n + pq % n];
                for (std::size_t r = 0; r < n; ++r) {
                  if (sb[r].is_zero()) continue;
                  const Scalar cr = coeff * sb[r];
                  for (std::size_t z = 0; z < dm; ++z) g(z, a * n + y).add_product(cr, m.action()(z, c * n + r));
                }
              }
        }
    }
    return g;
  };

  Check& lands = out.report.add("lambda_lands");
  Check& round1 = out.report.add("gamma_after_lambda");
  for (std::size_t i = 0; i < dm; ++i) {
    const Vector mv = unit_vector(dm, i, f);
    const Matrix g = lambda(mv);
    expect_member(lands, h, g, i, "Lambda(m) is not a Hopf-module map");
    expect_equal(round1, column_matrix(gamma(g), f), column_matrix(mv, f), i, out);
  }
  Check& round2 = out.report.add("lambda_after_gamma");
  Check& linear = out.report.add("gamma_right_linear");
  const Module mm = m.module();
  for (std::size_t l = 0; l < h.dim(); ++l) {
    const Matrix g = unflatten(h.basis_vector(l), dm, n * n, f);
    expect_equal(round2, lambda(gamma(g)), g, l, out);
    for (std::size_t c = 0; c < n; ++c) {
      const Vector ec = unit_vector(n, c, f);
      const Matrix gc = g * kron(b.left_mult(ec), Matrix::identity(n, f));
      ++out.round_trips;
      if (!(gamma(gc) == right_action(mm, ec).apply(gamma(g)))) Report::fail(linear, {l, c}, gamma(gc), {});
    }
  }
  return out;
}

BijectionReport verify_cl_bijection(const Bialgebra& b, const FrobeniusSystem& sys, const Matrix& s,
                                    const HopfModule& m, std::size_t dim_v) {
  const std::size_t n = b.dim(), dm = m.dim();
  const Field& f = b.field();
  BijectionReport out;
  const Subspace h1 = hom_modules(trivial_module(b, dim_v), m.module());
  const QuotientSpace bar = bar_quotient(m);
  out.dim_source = h1.dim();
  out.dim_target = dim_v * bar.dim();
  Check& same = out.report.add("dimensions");
  if (out.dim_source != out.dim_target) Report::fail(same, {}, {}, {}, dims(out.dim_source, out.dim_target));

  const Matrix phi_map = bar.projection() * kron(Matrix::identity(dm, f), row_matrix(sys.psi, f)) * m.coaction();
  auto phi = [&](const Matrix& fm) { return phi_map * fm; };

  // x -> x0 . S(x1) T
  std::vector<Vector> st(n);
  for (std::size_t j = 0; j < n; ++j) st[j] = b.multiply(s.column(j), sys.big_t);
  Matrix lift(dm, dm, f);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t cj = 0; cj < dm * n; ++cj) {
      const Scalar& w = m.coaction()(cj, i);
      if (w.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (st[cj % n][r].is_zero()) continue;
        const Scalar x = w * st[cj % n][r];
        for (std::size_t y = 0; y < dm; ++y) lift(y, i).add_product(x, m.action()(y, (cj / n) * n + r));
      }
    }
  Check& independent = out.report.add("lift_independent");
  for (std::size_t l = 0; l < bar.denominator().dim(); ++l) {
    const Vector v = lift.apply(bar.denominator().basis_vector(l));
    if (!is_zero(v)) {
      Report::fail(independent, {l}, v, {}, "lift-dependence detected");
      return out;
    }
  }
  const Matrix inv_map = lift * bar.section();
  auto inv = [&](const Matrix& g) { return inv_map * g; };

  Check& round1 = out.report.add("inverse_after_phi");
  for (std::size_t l = 0; l < h1.dim(); ++l) {
    const Matrix fm = unflatten(h1.basis_vector(l), dm, dim_v, f);
    expect_equal(round1, inv(phi(fm)), fm, l, out);
  }
  Check& lands = out.report.add("inverse_lands");
  Check& round2 = out.report.add("phi_after_inverse");
  for (std::size_t l = 0; l < out.dim_target; ++l) {
    const Matrix g = unflatten(unit_vector(out.dim_target, l, f), bar.dim(), dim_v, f);
    const Matrix fm = inv(g);
    expect_member(lands, h1, fm, l, "inverse image is not B-linear from V_eps");
    expect_equal(round2, phi(fm), g, l, out);
  }
  return out;
}

Module tensor_module(const Module& m, const Module& nm) {
  const Bialgebra& b = m.b;
  const std::size_t n = b.dim(), dm = m.dim, dn = nm.dim, d = dm * dn;
  Matrix action(d, d * n, b.field());
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t y = 0; y < dn; ++y)
      for (std::size_t a = 0; a < n; ++a)
        for (const auto& [pq, w] : b.coproduct(a))
          for (std::size_t r = 0; r < dm; ++r) {
            const Scalar& u = m.action(r, x * n + pq / n);
            if (u.is_zero()) continue;
            const Scalar wu = w * u;
            for (std::size_t s = 0; s < dn; ++s)
              action(r * dn + s, (x * dn + y) * n + a).add_product(wu, nm.action(s, y * n + pq % n));
          }
  return Module{b, d, std::move(action)};
}

namespace {

// One handedness of the closed structure. `left_factor` selects Hom_B(B (x) N, P)
// (unprimed) or Hom_B(N (x) B, P) (primed).
void closed_side(const Module& m, const Module& nm, const Module& p, bool unprimed, const std::string& tag,
                 BijectionReport& out) {
  const Bialgebra& b = m.b;
  const std::size_t n = b.dim(), dm = m.dim, dn = nm.dim, dp = p.dim;
  const Field& f = b.field();
  const Module reg = regular_module(b);
  const Module source = unprimed ? tensor_module(m, nm) : tensor_module(nm, m);
  const Module inner = unprimed ? tensor_module(reg, nm) : tensor_module(nm, reg);
  const Subspace hx = hom_modules(source, p);
  const Subspace hin = hom_modules(inner, p);
  const std::size_t h = hin.dim();
  const std::size_t cols = n * dn;

  auto shift = [&](const Vector& a) {
    const Matrix la = b.left_mult(a);
    return unprimed ? kron(la, Matrix::identity(dn, f)) : kron(Matrix::identity(dn, f), la);
  };
  Check& inner_closed = out.report.add(tag + "inner_module");
  Matrix hact(h, h * n, f);
  for (std::size_t l = 0; l < h; ++l)
    for (std::size_t a = 0; a < n; ++a) {
      const Matrix g = unflatten(hin.basis_vector(l), dp, cols, f) * shift(unit_vector(n, a, f));
      bool ok = true;
      const Vector c = matrix_coords(hin, g, ok);
      if (!ok) Report::fail(inner_closed, {l, a}, {}, {}, "g.a left the Hom space");
      for (std::size_t r = 0; r < h; ++r) hact(r, l * n + a) = c[r];
    }
  if (!inner_closed.pass) return;
  const Module hmod{b, h, hact};
  const Report hv = validate_module(hmod);
  if (!hv.ok()) {
    Report::fail(inner_closed, {}, {}, {}, "induced action is not a module:\n" + hv.str());
    return;
  }
  const Subspace hy = hom_modules(m, hmod);

  Check& same = out.report.add(tag + "dimensions");
  if (hx.dim() != hy.dim()) Report::fail(same, {}, {}, {}, dims(hx.dim(), hy.dim()));
  out.dim_source += hx.dim();
  out.dim_target += hy.dim();

  auto phi = [&](const Matrix& fm, bool& ok) {
    Matrix g(h, dm, f);
    for (std::size_t x = 0; x < dm; ++x) {
      Matrix am(dm, n, f);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < dm; ++r) am(r, a) = m.action(r, x * n + a);
      const Matrix gm = unprimed ? fm * kron(am, Matrix::identity(dn, f)) : fm * kron(Matrix::identity(dn, f), am);
      const Vector c = matrix_coords(hin, gm, ok);
      for (std::size_t r = 0; r < h; ++r) g(r, x) = c[r];
    }
    return g;
  };
  auto psi = [&](const Matrix& g) {
    Matrix fm(dp, dm * dn, f);
    for (std::size_t x = 0; x < dm; ++x) {
      const Matrix gx = unflatten(hin.inclusion().apply(g.column(x)), dp, cols, f);
      for (std::size_t y = 0; y < dn; ++y) {
        const Vector ey = unit_vector(dn, y, f);
        const Vector val = gx.apply(unprimed ? kron(b.unit(), ey) : kron(ey, b.unit()));
        const std::size_t col = unprimed ? x * dn + y : y * dm + x;
        for (std::size_t r = 0; r < dp; ++r) fm(r, col) = val[r];
      }
    }
    return fm;
  };

  Check& lands = out.report.add(tag + "phi_lands");
  Check& round1 = out.report.add(tag + "psi_after_phi");
  for (std::size_t l = 0; l < hx.dim(); ++l) {
    const Matrix fm = unflatten(hx.basis_vector(l), dp, dm * dn, f);
    bool ok = true;
    const Matrix g = phi(fm, ok);
    if (!ok) {
      Report::fail(lands, {l}, {}, {}, "phi(f)(m) is not B-linear");
      continue;
    }
    expect_member(lands, hy, g, l, "phi(f) is not B-linear in m");
    expect_equal(round1, psi(g), fm, l, out);
  }
  Check& lands2 = out.report.add(tag + "psi_lands");
  Check& round2 = out.report.add(tag + "phi_after_psi");
  for (std::size_t l = 0; l < hy.dim(); ++l) {
    const Matrix g = unflatten(hy.basis_vector(l), h, dm, f);
    const Matrix fm = psi(g);
    expect_member(lands2, hx, fm, l, "psi(g) is not B-linear");
    bool ok = true;
    const Matrix back = phi(fm, ok);
    if (!ok) {
      Report::fail(round2, {l}, {}, {}, "phi(psi(g)) left the Hom space");
      continue;
    }
    expect_equal(round2, back, g, l, out);
  }
}

}  // namespace

BijectionReport closed_structure_check(const Module& m, const Module& n, const Module& p) {
  if (!m.b.same_structure(n.b) || !m.b.same_structure(p.b))
    throw StructuralError("closed_structure_check: modules over different bialgebras");
  BijectionReport out;
  closed_side(m, n, p, true, "", out);
  closed_side(m, n, p, false, "primed_", out);
  return out;
}

std::vector<WitnessModule> witness_modules(const Bialgebra& b, std::size_t max_free, std::size_t bhat_limit) {
  std::vector<WitnessModule> out;
  out.push_back({"regular", regular_hopf_module(b)});
  if (b.dim() <= bhat_limit) out.push_back({"bhat", build_b_hat(b)});
  for (std::size_t v = 2; v <= max_free; ++v) out.push_back({"free" + std::to_string(v), free_hopf_module(b, v)});
  return out;
}

SummingUpPanel summingup_report(const Bialgebra& b) {
  SummingUpPanel panel;
  const IntegralSpaces ints = integral_spaces(b);
  const auto anti = solve_antipode(b, Side::both);
  const FhResult fh = fh_system(b);
  const HopfVerdict right = decide_right_hopf(b);
  const Bialgebra dual = dual_bialgebra(b);
  const IntegralSpaces ints_d = integral_spaces(dual);
  const auto anti_d = solve_antipode(dual, Side::both);
  const FhResult fh_d = fh_system(dual);

  const std::size_t ron = ints.right_on_b.dim();
  const std::size_t rin = ints.right_in_b.dim();
  const std::string ron_text = "dim int_r B* = " + std::to_string(ron);
  const std::string sigma_text = "sigma_Bhat rank " + std::to_string(rank(right.sigma.sigma)) + " from " +
                                 std::to_string(right.sigma.coinv.dim()) + " to " +
                                 std::to_string(right.sigma.bar.dim());

  // Witness checks for the functorial conditions, run only when a Frobenius system exists.
  bool coinv_ok = false, comod_ok = false, cl_ok = false;
  std::size_t trips = 0;
  std::string witness_failure;
  if (fh) {
    const FrobeniusSystem& sys = *fh.system;
    const Matrix s = antipode_from_fh(b, sys).s;
    coinv_ok = comod_ok = cl_ok = true;
    for (const auto& w : witness_modules(b, 2)) {
      for (std::size_t v = 1; v <= 2; ++v) {
        const auto r1 = verify_coinv_bijection(b, sys, s, w.module, v);
        const auto r2 = verify_cl_bijection(b, sys, s, w.module, v);
        coinv_ok = coinv_ok && r1.ok();
        cl_ok = cl_ok && r2.ok();
        trips += r1.round_trips + r2.round_trips;
        if (!r1.ok() || !r2.ok()) witness_failure = w.name;
      }
      for (const Comodule& p : {regular_comodule(b), trivial_comodule(b, 1)}) {
        const auto r = verify_comodule_adjunction(b, sys, w.module, p);
        comod_ok = comod_ok && r.ok();
        trips += r.round_trips;
        if (!r.ok()) witness_failure = w.name;
      }
      const auto g = gamma_lambda(b, sys, s, w.module);
      cl_ok = cl_ok && g.ok();
      trips += g.round_trips;
      if (!g.ok()) witness_failure = w.name;
    }
  }
  const std::string trips_text = std::to_string(trips) + " round trips";

  auto add = [&](int item, std::string statement, bool verdict, std::string witness) {
    panel.rows.push_back(PanelRow{item, std::move(statement), verdict, std::move(witness)});
  };
  add(1, "-(x)B: M -> Hopf modules is Frobenius and int_r B* = K", right.sigma.invertible && ron == 1 && (!fh || coinv_ok),
      sigma_text + "; " + ron_text + (fh ? "; coinvariant bijection " + std::string(coinv_ok ? "verified" : "FAILED") : ""));
  add(2, "B is a Hopf algebra with int_r B* = K", anti.has_value() && ron == 1,
      (anti ? "antipode found" : "no antipode: inconsistent system") + std::string("; ") + ron_text);
  add(3, "B is an FH-algebra", fh.system.has_value(), fh ? "psi = " + element_str(fh.system->psi, dual_labels(b)) : fh.failure);
  add(4, "-(x)~B: comodules -> Hopf modules is Frobenius, Hom^B(U_B M, V^u) = Hom(M^coB, V)",
      fh.system.has_value() && comod_ok && coinv_ok,
      fh ? trips_text + (witness_failure.empty() ? "" : "; failure on " + witness_failure) : "no Frobenius system: " + fh.failure);
  add(5, "-(x)B: M -> Hopf modules is Frobenius and int_r B = K", right.sigma.invertible && rin == 1,
      sigma_text + "; dim int_r B = " + std::to_string(rin));
  add(6, "B* is a Hopf algebra with int_r B** = K", anti_d.has_value() && ints_d.right_on_b.dim() == 1,
      (anti_d ? "dual antipode found" : "dual: no antipode") + std::string("; dim int_r B** = ") +
          std::to_string(ints_d.right_on_b.dim()));
  add(7, "B* is an FH-algebra", fh_d.system.has_value(), fh_d ? "psi* = " + element_str(fh_d.system->psi, dual_labels(dual)) : "dual: " + fh_d.failure);
  add(8, "-(x)B: modules -> Hopf modules is Frobenius, Hom_B(V_eps, U^B M) = Hom(V, M-bar)",
      fh.system.has_value() && cl_ok,
      fh ? trips_text + (witness_failure.empty() ? "" : "; failure on " + witness_failure) : "no Frobenius system: " + fh.failure);

  panel.verdict = panel.rows.front().verdict;
  for (const auto& row : panel.rows) {
    if (row.verdict != panel.verdict) {
      std::ostringstream os;
      os << "summing-up conditions disagree:";
      for (const auto& r : panel.rows) os << " (" << r.item << ")=" << (r.verdict ? "yes" : "no");
      throw TheoremViolation(os.str());
    }
  }
  return panel;
}

}  // namespace hopfkit
