#pragma once

#include <optional>

#include "yangrep/poly.hpp"

namespace yangrep {

/// Reduced rational function num/den with monic denominator.
class RatFuncU {
 public:
  RatFuncU() : num_(PolyU::zero()), den_(PolyU::one()) {}
  RatFuncU(PolyU num, PolyU den);
  explicit RatFuncU(const Rat& c) : num_(PolyU::constant(c)), den_(PolyU::one()) {}

  static RatFuncU zero() { return RatFuncU(); }
  static RatFuncU one() { return RatFuncU(Rat(1)); }
  /// (u + c) / u, i.e. the series 1 + c u^{-1}.
  static RatFuncU linear_factor(const Rat& c);

  const PolyU& num() const { return num_; }
  const PolyU& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }

  int max_degree() const { return std::max(num_.degree(), den_.degree()); }

  /// Exact value; nullopt at a pole.
  std::optional<Rat> eval(const Rat& x) const;
  Rat eval_or_throw(const Rat& x) const;

  /// Limit as u -> infinity; requires deg num <= deg den.
  Rat value_at_infinity() const;

  /// First `count` coefficients of the u^{-1} power series expansion at
  /// infinity, starting with the u^0 term. Requires deg num <= deg den.
  std::vector<Rat> series_at_infinity(int count) const;

  RatFuncU shift(const Rat& a) const { return RatFuncU(num_.shift(a), den_.shift(a)); }
  RatFuncU negate_u() const { return RatFuncU(num_.negate_u(), den_.negate_u()); }
  RatFuncU reciprocal() const;

  friend RatFuncU operator+(const RatFuncU& a, const RatFuncU& b);
  friend RatFuncU operator-(const RatFuncU& a, const RatFuncU& b);
  friend RatFuncU operator*(const RatFuncU& a, const RatFuncU& b);
  friend RatFuncU operator/(const RatFuncU& a, const RatFuncU& b);
  RatFuncU operator-() const { return RatFuncU(-num_, den_); }
  RatFuncU operator*(const Rat& s) const { return RatFuncU(num_ * s, den_); }
  bool operator==(const RatFuncU& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  PolyU num_, den_;
};

}  // namespace yangrep
