#pragma once

#include <optional>

#include "yangrep/ratfunc.hpp"
#include "yangrep/sparse.hpp"

namespace yangrep {

/// A subspace stored as a reduced-echelon basis (canonical form).
struct Subspace {
  int ambient = 0;
  std::vector<DenseVec> basis;  // RREF rows, sorted by pivot column

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const DenseVec& v) const;
  /// Reduces v against the basis; returns the residual.
  DenseVec reduce(const DenseVec& v) const;
  /// Coordinates of v in the basis, when v lies in the subspace.
  std::optional<DenseVec> coords(const DenseVec& v) const;
  /// Pivot column of each basis vector.
  std::vector<int> pivots() const;
};

/// Brings rows into reduced row echelon form in place, dropping zero rows.
void rref(std::vector<DenseVec>& rows);

Subspace make_subspace(int ambient, std::vector<DenseVec> vectors);

/// Fraction-free (Bareiss) elimination over the integers after clearing
/// denominators row by row; pivot choice is smallest bit size, then lowest
/// row index, making results deterministic.
int rank(const SparseMat& m);

/// Canonical basis of the right kernel {v : m v = 0}.
std::vector<DenseVec> kernel(const SparseMat& m);

/// Basis of the intersection of the kernels (kernel of stacked matrix).
std::vector<DenseVec> intersect_kernels(const std::vector<SparseMat>& mats);

/// Smallest subspace containing the seeds and invariant under all operators.
Subspace subspace_closure(const std::vector<DenseVec>& seeds,
                          const std::vector<SparseMat>& operators);

/// One exact solution of A x = b, if any.
std::optional<DenseVec> solve(const SparseMat& a, const DenseVec& b);

/// Unique reduced rational function with deg num <= num_deg, deg den <=
/// den_deg passing exactly through all samples. Throws when no such function
/// exists or a sample point ends up on a pole of every candidate.
RatFuncU interpolate_ratfunc(const std::vector<std::pair<Rat, Rat>>& samples,
                             int num_deg, int den_deg);

Subspace sum_subspaces(const Subspace& a, const Subspace& b);

}  // namespace yangrep
