#pragma once

#include <memory>
#include <vector>

#include "yangrep/rat.hpp"

namespace yangrep {

/// Multiset of linear factors prod over (c, e) of (1 + c u^{-1})^e.
struct FactoredSeries {
  std::vector<std::pair<Rat, int>> factors;  // kept sorted, exponents nonzero

  static FactoredSeries one() { return {}; }
  static FactoredSeries from_roots(const std::vector<Rat>& cs, int exp = 1);
  FactoredSeries& mul_factor(const Rat& c, int exp = 1);
  FactoredSeries operator*(const FactoredSeries& o) const;
  FactoredSeries inverse() const;
  /// Substitution u -> -u: negates every c.
  FactoredSeries negate_u() const;
  bool operator==(const FactoredSeries& o) const { return factors == o.factors; }

 private:
  void normalize();
};

/// Construction expression for a module: how it was assembled.
struct ExprNode {
  enum class Kind { Eval, TwistedEval, Spin, OneDim, Tensor, TensorMixed, Shift, Twist };
  Kind kind = Kind::Eval;

  std::vector<Rat> weight;                         // Eval / TwistedEval
  Rat gamma;                                       // OneDim
  Rat shift_a;                                     // Shift
  FactoredSeries twist_phi;                        // Twist
  std::vector<std::shared_ptr<const ExprNode>> children;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr expr_eval(std::vector<Rat> hw);
ExprPtr expr_twisted_eval(std::vector<Rat> mu);
ExprPtr expr_spin();
ExprPtr expr_onedim(Rat gamma);
ExprPtr expr_tensor(std::vector<ExprPtr> factors);
ExprPtr expr_tensor_mixed(ExprPtr left, ExprPtr right);
ExprPtr expr_shift(Rat a, ExprPtr of);
ExprPtr expr_twist(FactoredSeries phi, ExprPtr of);

}  // namespace yangrep
