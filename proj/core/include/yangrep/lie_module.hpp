#pragma once

#include <map>

#include "yangrep/sparse.hpp"

namespace yangrep {

/// Index bookkeeping. Generators are always stored by 0-based position;
/// the scheme translates between positions and the two enumerations in use:
/// standard indices 1..N, or symmetric indices -n..n (0 skipped when N even).
struct IndexScheme {
  int N = 0;
  bool symmetric = false;

  int n() const { return N / 2; }
  bool odd() const { return N % 2 == 1; }

  /// Index value at a given position, in increasing order.
  int index_at(int pos) const;
  int pos_of(int index) const;
  /// Position of the negated index; identity for the standard scheme center.
  int neg_pos(int pos) const;
  std::vector<int> all_indices() const;

  bool operator==(const IndexScheme& o) const { return N == o.N && symmetric == o.symmetric; }
};

IndexScheme standard_scheme(int N);
IndexScheme symmetric_scheme(int N);

enum class LieAlgebra { GL, O, SP };

/// theta sign: 1 in the orthogonal family, sgn(i) sgn(j) in the symplectic.
int theta(LieAlgebra fam, int i, int j);

/// Finite-dimensional module over gl(N) or g(N), with generator matrices
/// keyed by position pairs and exact per-basis-vector weights.
struct LieModule {
  LieAlgebra algebra = LieAlgebra::GL;
  int N = 0;
  int dim = 0;
  /// E_{ij} (gl) or F_{ij} (g(N)) in the basis of the module.
  std::map<std::pair<int, int>, SparseMat> gens;
  /// gl: eigenvalues of E_{11..NN}; g(N): eigenvalues of F_{11..nn}.
  std::vector<DenseVec> weights;
  int hw_index = 0;

  const SparseMat& gen(int pos_i, int pos_j) const;
};

/// Irreducible gl(2) module with highest weight (alpha, beta),
/// alpha - beta a nonnegative integer. Basis: repeated lowering of the
/// highest vector.
LieModule build_gl2(const Rat& alpha, const Rat& beta);

/// Irreducible gl(N) module with dominant weight lambda (rational entries,
/// integral successive differences). Realized inside a tensor power of the
/// vector representation plus a scalar shift.
LieModule build_glN(const std::vector<Rat>& lambda);

/// Spin module of o(2n) (half-spin component, dim 2^{n-1}) or o(2n+1)
/// (dim 2^n) with highest weight (-1/2,...,-1/2), via a fermionic Fock space.
LieModule build_spin(int N);

/// Rank-one g(N) modules: sp(2) (mu1 a nonpositive integer), o(2) (any mu1,
/// one-dimensional), o(3) (2*mu1 a nonpositive integer).
LieModule build_g_rank1(LieAlgebra alg, int N, const Rat& mu1);

/// Weyl dimension formula for gl(N).
Rat weyl_dim_gl(const std::vector<Rat>& lambda);
/// Weyl dimension formula for g(N) in the convention used here
/// (weights of F_11..F_nn, raising operators lower the F_11 weight).
Rat weyl_dim_g(LieAlgebra alg, int N, const std::vector<Rat>& mu);

}  // namespace yangrep
