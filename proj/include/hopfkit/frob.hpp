#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/hopfmod.hpp"

namespace hopfkit {

struct IntegralSpaces {
  /// a t = eps(a) t
  Subspace left_in_b;
  /// T a = eps(a) T
  Subspace right_in_b;
  /// a1 lambda(a2) = lambda(a) 1
  Subspace left_on_b;
  /// lambda(a1) a2 = lambda(a) 1
  Subspace right_on_b;
};

IntegralSpaces integral_spaces(const Bialgebra& b);

struct FrobeniusSystem {
  Vector psi;
  /// Casimir element in B (x) B coordinates.
  Vector e;
  /// Right norm: psi(T b) = eps(b).
  Vector big_t;
  /// Left norm: psi(b t) = eps(b).
  Vector small_t;
  /// form(i,j) = psi(b_i b_j).
  Matrix form;
};

struct FhResult {
  std::optional<FrobeniusSystem> system;
  /// "integral space dim != 1" or "degenerate form".
  std::string failure;
  std::size_t integral_dim = 0;
  std::optional<Vector> psi;
  std::optional<Matrix> form;
  explicit operator bool() const { return system.has_value(); }
};

FhResult fh_system(const Bialgebra& b);
/// Builds T, t and e from a given psi and asserts the Frobenius-system
/// invariants. Throws ValidationError if the form psi(ab) is degenerate.
FrobeniusSystem frobenius_system_from(const Bialgebra& b, const Vector& psi);

/// frob_rel_left, frob_rel_right, centrality, norms, psi_of_T, coinvariance.
Report casimir_report(const Bialgebra& b, const FrobeniusSystem& sys);

struct FhAntipode {
  Matrix s;
  Matrix s_inv;
};
/// S(a) = psi(T1 a) T2 and S^{-1}(a) = psi(a t1) t2, cross-checked against solve_antipode.
FhAntipode antipode_from_fh(const Bialgebra& b, const FrobeniusSystem& sys);

struct BijectionReport {
  Report report;
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  std::size_t round_trips = 0;
  bool ok() const { return report.ok(); }
};

/// Hom^B(U_B M, P) <-> Hom^B_B(M, P (x)~ B).
BijectionReport verify_comodule_adjunction(const Bialgebra& b, const FrobeniusSystem& sys, const HopfModule& m,
                                           const Comodule& p);
/// Hom^B(U_B M, V^u) <-> Hom(M^coB, V) with V = K^dim_v.
BijectionReport verify_coinv_bijection(const Bialgebra& b, const FrobeniusSystem& sys, const Matrix& s,
                                       const HopfModule& m, std::size_t dim_v);
/// Gamma: Hom^B_B(Bhat, M) -> M and its inverse Lambda.
BijectionReport gamma_lambda(const Bialgebra& b, const FrobeniusSystem& sys, const Matrix& s, const HopfModule& m);
/// Hom_B(V_eps, U^B M) <-> Hom(V, M-bar) with V = K^dim_v.
BijectionReport verify_cl_bijection(const Bialgebra& b, const FrobeniusSystem& sys, const Matrix& s,
                                    const HopfModule& m, std::size_t dim_v);
/// Hom_B(M (x) N, P) <-> Hom_B(M, Hom_B(B (x) N, P)) and the mirrored N (x) M version.
BijectionReport closed_structure_check(const Module& m, const Module& n, const Module& p);

/// M (x) N with (m (x) n).a = m.a1 (x) n.a2.
Module tensor_module(const Module& m, const Module& n);

/// Right Hopf modules used for checks that are natural in M.
struct WitnessModule {
  std::string name;
  HopfModule module;
};
/// regular B, Bhat and V (x) B for dim V up to max_free; Bhat is skipped when
/// dim B exceeds bhat_limit.
std::vector<WitnessModule> witness_modules(const Bialgebra& b, std::size_t max_free = 3, std::size_t bhat_limit = 4);

struct PanelRow {
  int item = 0;
  std::string statement;
  bool verdict = false;
  std::string witness;
};

struct SummingUpPanel {
  std::vector<PanelRow> rows;
  bool verdict = false;
};

/// Evaluates the eight equivalent conditions; throws TheoremViolation if they disagree.
SummingUpPanel summingup_report(const Bialgebra& b);

}  // namespace hopfkit
