#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/conv.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

enum class Hand { right, left };

/// A right module over B: action is dim x (dim*n), column i*n+j holds e_i . b_j.
struct Module {
  Bialgebra b;
  std::size_t dim = 0;
  Matrix action;
};

/// A right comodule over B: coaction is (dim*n) x dim, row i*n+j is the e_i (x) b_j coordinate.
struct Comodule {
  Bialgebra b;
  std::size_t dim = 0;
  Matrix coaction;
};

/// A Hopf module. For Hand::right the layouts are those of Module and
/// Comodule. For Hand::left the action column j*dim+i holds b_j . e_i and the
/// coaction row j*dim+i is the b_j (x) e_i coordinate.
class HopfModule {
 public:
  HopfModule() = default;
  /// Throws ValidationError when an axiom fails.
  HopfModule(Bialgebra b, std::size_t dim, Matrix action, Matrix coaction, Hand hand = Hand::right);
  static HopfModule unchecked(Bialgebra b, std::size_t dim, Matrix action, Matrix coaction, Hand hand = Hand::right);

  const Bialgebra& bialgebra() const { return b_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action() const { return action_; }
  const Matrix& coaction() const { return coaction_; }
  Hand hand() const { return hand_; }
  const Field& field() const { return b_.field(); }

  Module module() const;
  Comodule comodule() const;

 private:
  Bialgebra b_;
  std::size_t dim_ = 0;
  Matrix action_;
  Matrix coaction_;
  Hand hand_ = Hand::right;
};

Report validate_module(const Module& m);
Report validate_comodule(const Comodule& c);
/// Module, comodule and compatibility axioms on every basis tuple.
Report validate_hopf_module(const HopfModule& m);

/// The same object seen as a right Hopf module over op_cop(B, true, true).
HopfModule to_right(const HopfModule& left);

/// V (x) B with delta(v (x) b) = v (x) b1 (x) b2 and (v (x) b).a = v (x) ba;
/// the left variant is B (x) V.
HopfModule free_hopf_module(const Bialgebra& b, std::size_t dim_v, Hand hand = Hand::right);
HopfModule regular_hopf_module(const Bialgebra& b, Hand hand = Hand::right);
/// B (x) B with delta(a (x) b) = a (x) b1 (x) b2 and (a (x) b).c = ac1 (x) bc2.
HopfModule build_b_hat(const Bialgebra& b);
/// Left: delta(b (x) a) = b1 (x) b2 (x) a and c.(b (x) a) = c1 b (x) c2 a.
HopfModule build_b_check(const Bialgebra& b);

Module regular_module(const Bialgebra& b);
/// V_eps: v.b = eps(b) v.
Module trivial_module(const Bialgebra& b, std::size_t dim_v);
Comodule regular_comodule(const Bialgebra& b);
/// V^u: v -> v (x) 1.
Comodule trivial_comodule(const Bialgebra& b, std::size_t dim_v);

Subspace coinvariants(const HopfModule& m);
/// M B^+ (left: B^+ M).
Subspace augmentation_submodule(const HopfModule& m);
QuotientSpace bar_quotient(const HopfModule& m);

struct SigmaData {
  Subspace coinv;
  QuotientSpace bar;
  /// bar-coordinates x coinv-coordinates.
  Matrix sigma;
  bool invertible = false;
  std::optional<Matrix> inverse;
  std::size_t intersection_dim = 0;
  std::size_t sum_dim = 0;
  /// coinv meets the augmentation submodule trivially and they span M.
  bool decomposition = false;
};

/// sigma for right modules, varsigma for left ones.
SigmaData sigma(const HopfModule& m);
/// Requires a left module.
SigmaData varsigma(const HopfModule& m);

/// A map or the reason it could not be built.
struct MapResult {
  std::optional<Matrix> map;
  std::string failure;
  explicit operator bool() const { return map.has_value(); }
};

/// bar -> coinv, m-bar -> m0 . S(m1) (left: S(m-1) m0), built on the quotient
/// section. Fails with "not well-defined" when the lift-level map does not
/// kill the denominator and "not coinvariant" when its image leaves M^coB.
MapResult sigma_inverse_formula(const HopfModule& m, const Matrix& s);

/// Units and counits for a right Hopf module M: eta_M: M -> M-bar (x) B and
/// theta_M: M^coB (x) B -> M, both in the coordinates of sigma(M).
struct AdjunctionMaps {
  Subspace coinv;
  QuotientSpace bar;
  Matrix eta;
  Matrix theta;
};
AdjunctionMaps adjunction_maps(const HopfModule& m);

/// For V = K^dim_v: eps_V: bar(V (x) B) -> V and gamma_V: V -> (V (x) B)^coB.
struct FreeAdjunctionMaps {
  HopfModule free;
  Matrix epsilon;
  Matrix gamma;
};
FreeAdjunctionMaps adjunction_maps(const Bialgebra& b, std::size_t dim_v);

/// The four triangle identities, on M and on V (x) B with V = K^dim_v.
Report check_triangle_identities(const HopfModule& m, std::size_t dim_v);

struct GaloisData {
  Matrix beta;
  std::size_t rank = 0;
  bool bijective = false;
};
/// a (x) b -> a b1 (x) b2.
GaloisData hopf_galois(const Bialgebra& b);

/// nu(b) = (B (x) eps)(eta_Bhat^{-1}(overline(1 (x) b) (x) 1)); failure "eta not invertible".
MapResult nu_from_eta(const Bialgebra& b);

struct HopfVerdict {
  bool hopf = false;
  SigmaData sigma;
  std::optional<AntipodeSolution> antipode;
  Report antihom;
  Report super;
  /// S recovered from the inverse of sigma, when it exists.
  std::optional<Matrix> s_from_sigma;
};

/// Right: sigma_Bhat invertible vs a right antipode passing check_antihom and
/// check_super_identities. Throws TheoremViolation if the routes disagree.
HopfVerdict decide_right_hopf(const Bialgebra& b);
/// Left: varsigma_Bcheck vs a left antipode.
HopfVerdict decide_left_hopf(const Bialgebra& b);

/// sigma_Bhat commutes with the left B-actions a.(x (x) y) = ax (x) y.
Report check_sigma_left_linear(const Bialgebra& b);

enum class Category { vec, mod, comod, hopf };
const char* category_name(Category c);

/// Hom spaces as subspaces of dim(N) x dim(M) matrices flattened row-major
/// (f(r,c) at index r*dim(M)+c).
Subspace hom_space(const HopfModule& m, const HopfModule& n, Category category);
Subspace hom_modules(const Module& m, const Module& n);
Subspace hom_comodules(const Comodule& m, const Comodule& n);

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols, const Field& field);
Vector flatten(const Matrix& f);

}  // namespace hopfkit
