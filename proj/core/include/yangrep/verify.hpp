#pragma once

#include <string>

#include "yangrep/analysis.hpp"

namespace yangrep {

struct CheckResult {
  std::string description;
  bool pass = false;
  std::string counterexample;  // empty when the check passed
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  long samples_used = 0;

  bool pass() const;
  void add(std::string description, bool ok, std::string counterexample = {});
};

/// Named modules exercising every construction path; the verification
/// suites run over this list.
std::vector<std::pair<std::string, Action>> standard_catalog();

/// Sampled commutation relations (and, for twisted families, the exact
/// symmetry relation) on a deterministic admissible grid of size at least
/// (2 * degree_bound + 3)^2 ordered pairs.
VerifyReport verify_defining(const Action& x, const std::string& name);
VerifyReport verify_defining_catalog();

/// Determinant checks: centrality and scalarity of the quantum determinant,
/// the determinant product formula for twisted actions with an underlying
/// Y(N) action, the gamma-factor reflection identity, and the comatrix row
/// identity on the highest vector for N = 3.
VerifyReport verify_qdet_sdet(const Action& x, const std::string& name);
VerifyReport verify_qdet_sdet_catalog();

/// Parameters of a rank-one odd orthogonal tensor context: the restriction
/// of a product of gl(3) evaluation modules with weights (a_i, a_i, b_i).
struct StarContext {
  std::vector<Rat> alphas, betas;
  Action action;        // the restricted twisted action
  DenseVec xi;          // highest vector
  RatFuncU mu0, mu1;    // highest weight components
  PolyU a0, a1;         // cleared-denominator polynomials u^{2k} mu_i(u)
  std::vector<Rat> alpha_star, beta_star;
  RatFuncU mu0_star, mu1_star;
  PolyU a1_star;
  RatFuncU psi0;        // normalizing series of the star action

  int k() const { return static_cast<int>(alphas.size()); }
};

StarContext make_star_context(const std::vector<Rat>& alphas, const std::vector<Rat>& betas);

/// Star highest weight checks: the highest vector is an eigenvector of the
/// star diagonal operators with the starred weights, and star raising
/// entries annihilate it.
VerifyReport verify_star_hw(const std::vector<Rat>& alphas, const std::vector<Rat>& betas);

/// Lowering-chain operator identities in the k = 1 context: eigenvalue and
/// lowering formulas for the polynomial operators on the chain vectors
/// eta_p, star annihilation and star eigenvalues. Six sample points each.
VerifyReport verify_lowering_chain(const Rat& alpha, const Rat& beta, int p_max);

/// Multi-index chain identities in the k = 2 context: polynomial division
/// of the normalized lowering entry, its special values, eigenvalue
/// formulas, star annihilation/eigenvalues, and the exchange identity.
VerifyReport verify_singular_chains(const std::vector<Rat>& alphas,
                                    const std::vector<Rat>& betas,
                                    const std::vector<int>& ps);

/// Decomposition of the reducible orthogonal restriction of L(g1, -g2)
/// when the factor string contains -1/2: explicit invariant subspaces,
/// their dimensions and highest weights, and the quotient data.
VerifyReport verify_reducible_restriction(const Rat& gamma1, const Rat& gamma2);

}  // namespace yangrep
