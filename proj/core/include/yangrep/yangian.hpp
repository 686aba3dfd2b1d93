#pragma once

#include <map>
#include <memory>
#include <optional>

#include "yangrep/expr.hpp"
#include "yangrep/lie_module.hpp"
#include "yangrep/ratfunc_mat.hpp"

namespace yangrep {

enum class Family { Y, YPlus, YMinus };

bool is_twisted(Family f);
LieAlgebra twisted_algebra(Family f);

/// Action of Y(N) or a twisted Yangian on a finite-dimensional module:
/// one rational-function matrix per generating series entry.
struct Action {
  Family family = Family::Y;
  IndexScheme scheme;
  int dim = 0;
  /// entries[pi * N + pj] is the matrix of t_{ij}(u) (or s_{ij}(u)).
  std::vector<RatFuncMat> entries;
  int degree_bound = 0;
  /// Per basis vector: gl weights (Y) or F_{11..nn} weights (twisted).
  std::vector<DenseVec> basis_weights;
  /// For twisted actions obtained from a Y(N) action: that action.
  std::shared_ptr<const Action> underlying;
  ExprPtr provenance;

  int N() const { return scheme.N; }
  const RatFuncMat& entry(int pos_i, int pos_j) const { return entries[pos_i * N() + pos_j]; }
  RatFuncMat& entry(int pos_i, int pos_j) { return entries[pos_i * N() + pos_j]; }
  /// Value of every entry at u -> infinity must be delta_ij * I.
  void check_identity_at_infinity() const;
};

/// Extension of a gl(N) module along t_{ij}(u) -> delta_ij + E_{ij} u^{-1}.
Action eval_module(const LieModule& m, const IndexScheme& scheme);

/// Tensor product of Y(N) actions via the coproduct.
Action tensor_action(const std::vector<Action>& factors);

/// Composition with the shift automorphism u -> u + a.
Action shift_action(const Rat& a, const Action& x);

/// Multiplication of the matrix of series by a scalar series phi(u);
/// for twisted families phi must be even.
Action twist_action(const FactoredSeries& phi, const Action& x);

RatFuncU factored_to_ratfunc(const FactoredSeries& f);

/// Quantum determinant evaluated at u0, as an operator on the module.
/// Sum over permutations of the scheme's index list, column arguments
/// u0, u0-1, ..., u0-N+1.
SparseMat qdet_at(const Action& x, const Rat& u0);

/// Quantum comatrix entry at u0: (-1)^{i+j} times the quantum determinant
/// of the submatrix with column index i and row index j removed.
SparseMat qcomatrix_entry_at(const Action& x, int idx_i, int idx_j, const Rat& u0);

/// Power series coefficient matrices of every entry: (pos_i, pos_j, r) for
/// r = 1..bound, as a flat vector indexed (pi * N + pj) * bound + (r - 1).
std::vector<SparseMat> coeff_matrices(const Action& x, int bound);

/// Conversion between the standard and symmetric enumerations (pure
/// relabeling; positions are preserved).
Action with_scheme(const Action& x, const IndexScheme& scheme);

/// Highest weight data of an action.
struct HighestWeight {
  /// Y: components 1..N. Twisted even: mu_1..mu_n. Twisted odd: mu_0..mu_n.
  std::vector<RatFuncU> components;
  std::vector<std::optional<FactoredSeries>> factored;
};

/// Factors num and den into linear factors when possible.
std::optional<FactoredSeries> factor_ratfunc(const RatFuncU& f);

}  // namespace yangrep
