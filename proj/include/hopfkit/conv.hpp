#pragma once

#include <cstddef>
#include <optional>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

enum class Side { left, right, both };

const char* side_name(Side s);

/// f * g = m o (f (x) g) o Delta for n x n maps f, g.
Matrix convolution(const Matrix& f, const Matrix& g, const Bialgebra& b);

struct AntipodeSolution {
  Matrix s;
  std::size_t solution_space_dim = 0;
  Side side = Side::right;
};

/// Right: id * S = u eps. Left: S * id = u eps. nullopt when the system is
/// inconsistent. Side::both solves both and throws TheoremViolation if they differ.
std::optional<AntipodeSolution> solve_antipode(const Bialgebra& b, Side side);

/// Checks anti_mult, anti_comult, unital and counital.
Report check_antihom(const Bialgebra& b, const Matrix& s);

/// Checks eq_super: a1 S(b a2) = eps(a) S(b), and eq_super2: S(b) (x) 1 = S(b2)1 (x) b1 S(b2)2.
Report check_super_identities(const Bialgebra& b, const Matrix& s);

}  // namespace hopfkit
