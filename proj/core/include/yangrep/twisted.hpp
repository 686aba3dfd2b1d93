#pragma once

#include <map>

#include "yangrep/yangian.hpp"

namespace yangrep {

/// Restriction of a Y(N) action (symmetric scheme) to the twisted
/// subalgebra: s_{ij}(u) = sum_a theta_{aj} t_{ia}(u) t_{-j,-a}(-u).
/// The symmetry relation is verified exactly at construction.
Action restrict_S(const Action& x, Family family);

/// Twisted evaluation: s_{ij}(u) = delta_ij + F_{ij} (u +- 1/2)^{-1},
/// upper sign orthogonal, lower sign symplectic.
Action twisted_eval(const LieModule& m, Family family, ExprPtr provenance = nullptr);

/// One-dimensional module of the orthogonal twisted algebra at rank one:
/// s_{11}(u) = (1 + gamma u^{-1}) (1 + u^{-1}/2)^{-1}.
Action onedim_plus(const Rat& gamma);

/// Coideal tensor product of a Y(N) action with a twisted action.
Action tensor_mixed(const Action& left, const Action& right);

/// gamma_N(u): 1 for the orthogonal family, (2u+1)/(2u-N+1) symplectic.
RatFuncU gamma_factor(Family family, int N);

/// Sklyanin determinant at u0 as an operator, computed through the
/// quantum determinant of the underlying Y(N) action.
SparseMat sdet_at(const Action& x, const Rat& u0);

/// The determinant value when it acts as a scalar (irreducible modules);
/// throws otherwise.
Rat sdet_scalar(const Action& x, const Rat& u0);

/// Index swap 1 <-> -1 (orthogonal family, even N); involutive.
Action sharp_conjugate(const Action& x);

/// The three explicitly known Sklyanin comatrix entries for N = 3,
/// keyed by index pairs (0,0), (-1,0), (1,1), evaluated at u0.
SparseMat scomatrix3_at(const Action& x, int idx_i, int idx_j, const Rat& u0);

/// Full Sklyanin comatrix at u0 obtained by exact linear solve from
/// sdet S(u) = S^(u) S(u-N+1). Requires an underlying Y(N) action and
/// invertibility of S(u0-N+1) on the module.
std::map<std::pair<int, int>, SparseMat> scomatrix_solve_at(const Action& x, const Rat& u0);

/// Exact check of the symmetry relation
/// theta_ij s_{-j,-i}(-u) = s_ij(u) +- (s_ij(u) - s_ij(-u)) / (2u).
bool symmetry_relation_holds(const Action& x);

}  // namespace yangrep
