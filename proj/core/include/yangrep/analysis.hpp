#pragma once

#include "yangrep/twisted.hpp"

namespace yangrep {

struct AnalysisReport {
  int singular_dim = 0;
  HighestWeight hw;
  bool irreducible = false;
  int quotient_dim = 0;
  std::vector<std::pair<DenseVec, int>> weight_multiplicities;  // sorted by weight
  /// Order up to which series coefficients were spanned (2 * degree_bound).
  int coefficient_bound = 0;
};

/// Joint kernel of all strictly-upper coefficient matrices up to order
/// 2 * degree_bound; nonzero for every nonzero module.
Subspace singular_space(const Action& x);

/// Diagonal positions whose eigenvalue series form the highest weight:
/// all of them for Y(N), indices 1..n (plus 0 when N is odd) otherwise.
std::vector<int> hw_component_positions(const Action& x);

/// Eigenvalue series of the diagonal entries on a singular vector,
/// recovered exactly by sampling and rational interpolation.
/// Throws when v fails to be a simultaneous eigenvector.
HighestWeight extract_hw(const Action& x, const DenseVec& v);

Subspace cyclic_span(const Action& x, const DenseVec& v);

bool is_irreducible(const Action& x);

/// Joint eigenvectors of the diagonal coefficient operators on the singular
/// space, grouped into joint eigenspaces and sorted by weight
/// (lexicographically decreasing).
std::vector<Subspace> singular_eigenspaces(const Action& x);

/// Restriction of the action to an invariant subspace, in the basis of W.
Action restrict_action(const Action& x, const Subspace& w);

/// Quotient action modulo an invariant subspace; also returns the
/// coordinate map applied to representatives.
Action quotient_action(const Action& x, const Subspace& k, SparseMat* quot_map = nullptr);

/// Iterated cyclic span / quotient construction of the irreducible quotient
/// generated by the singular eigenvector xi.
std::pair<Action, int> irreducible_quotient(const Action& x, const DenseVec& xi);

std::vector<std::pair<DenseVec, int>> weight_spaces(const Action& x);

AnalysisReport analyze(const Action& x);

/// Evaluation points usable for sampling: small positive integers avoiding
/// every pole of every entry.
std::vector<Rat> admissible_points(const Action& x, int count, const Rat& start = Rat(1));

}  // namespace yangrep
