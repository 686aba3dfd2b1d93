#pragma once

#include <map>
#include <optional>

#include "yangrep/expr.hpp"
#include "yangrep/ratfunc.hpp"

namespace yangrep {

/// The string {beta, beta+1, ..., alpha-1}; empty when alpha = beta.
struct StringAB {
  Rat alpha;
  Rat beta;

  StringAB(Rat a, Rat b);
  bool empty() const { return alpha == beta; }
  int length() const;
  bool contains(const Rat& x) const;
  bool subset_of(const StringAB& o) const;
};

/// Two strings are in general position when their union is not a string,
/// or one contains the other.
bool general_position(const StringAB& s1, const StringAB& s2);

/// Monic polynomial as a root multiset: P(u) = prod over (c, m) of (u + c)^m.
struct RootMultiset {
  std::map<Rat, int> mult;  // strictly positive multiplicities

  static RootMultiset one() { return {}; }
  int degree() const;
  void add(const Rat& c, int m = 1);
  PolyU to_poly() const;
  bool is_one() const { return mult.empty(); }
  /// P(u) == P(-u + 1): multiplicities symmetric under c -> -1 - c.
  bool center_symmetric() const;
  Rat eval(const Rat& u) const;
  bool operator==(const RootMultiset& o) const { return mult == o.mult; }
};

RatFuncU ratio_of(const FactoredSeries& num, const FactoredSeries& den);
bool factored_is_even(const FactoredSeries& f);
/// mu ~ nu up to an even series: mu(u) nu(-u) == mu(-u) nu(u).
bool even_equivalent(const FactoredSeries& mu, const FactoredSeries& nu);

/// The unique monic P with l1(u)/l2(u) = P(u+1)/P(u), when it exists.
/// The result is always re-verified by exact polynomial identity.
std::optional<RootMultiset> arrow(const FactoredSeries& l1, const FactoredSeries& l2);

/// The unique center-symmetric monic P with mu(-u)/mu(u) = P(u+1)/P(u).
std::optional<RootMultiset> sym_arrow(const FactoredSeries& mu);

/// The unique pair (P, gamma) with P center-symmetric, P(-gamma) != 0 and
/// mu(-u)/mu(u) = (P(u+1)/P(u)) ((u+gamma)(2u+1)) / ((u-gamma)(2u-1)).
std::optional<std::pair<RootMultiset, Rat>> gamma_solver(const FactoredSeries& mu);

/// Weight of the rank-one sharp-conjugated module, given the factored shape
/// (1-g1 u^{-1})...(1-g_{2k+1} u^{-1}) (1 + u^{-1}/2)^{-1}: the last factor
/// is replaced by (1 + (g_{2k+1}+1) u^{-1}).
FactoredSeries sharp_weight(const std::vector<Rat>& gammas);

enum class ReorderKind { Difference, SumEven, SumOdd };

struct ReorderResult {
  std::vector<Rat> first;   // alphas, or the reordered single list
  std::vector<Rat> second;  // betas (Difference only)
};

/// Greedy re-enumeration: repeatedly select the minimal nonnegative-integer
/// difference (or pair sum) among remaining entries and fix it at the front.
ReorderResult reorder(ReorderKind kind, const std::vector<Rat>& alphas,
                      const std::vector<Rat>& betas = {});

struct ClassificationResult {
  bool finite_dim = false;
  std::vector<RootMultiset> witnesses;
  std::optional<Rat> gamma;
  std::optional<int> epsilon;
  std::optional<std::string> branch;
};

/// Y(N): consecutive arrows between the highest weight components.
ClassificationResult fd_Y(const std::vector<FactoredSeries>& hw);

/// Symplectic twisted algebra, any rank: symmetric arrow for the first
/// component, plain arrows afterwards.
ClassificationResult fd_Yminus(const std::vector<FactoredSeries>& hw);

/// Orthogonal twisted algebra, even N = 2n with n >= 2: the four-branch
/// criterion through the sharp transform; epsilon labels the branch.
ClassificationResult fd_Yplus_even(const std::vector<FactoredSeries>& hw);

/// Orthogonal twisted algebra, N = 3, parameterized highest weight
/// (pairs alpha_i, beta_i): integral pairing, possibly with a special
/// half-integral last pair. Searched exactly via bipartite matching.
ClassificationResult fd_Yplus3(const std::vector<Rat>& alphas, const std::vector<Rat>& betas);

/// Orthogonal twisted algebra, odd N: two-branch arrow criterion.
ClassificationResult fd_Yplus_odd(const FactoredSeries& mu0,
                                  const std::vector<FactoredSeries>& mu);

enum class StringCriterion { TensorPairs, SymplecticRestriction, OrthogonalMixed };

/// Irreducibility criteria in terms of strings.
/// TensorPairs: data is (alpha_i, beta_i) pairs.
/// SymplecticRestriction: data is gamma_1..gamma_{2k}.
/// OrthogonalMixed: gammas plus the one-dimensional parameter.
bool crit_strings(StringCriterion variant, const std::vector<std::pair<Rat, Rat>>& pairs,
                  const std::optional<Rat>& gamma = std::nullopt);

}  // namespace yangrep
