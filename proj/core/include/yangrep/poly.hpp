#pragma once

#include <initializer_list>
#include <vector>

#include "yangrep/rat.hpp"

namespace yangrep {

/// Univariate polynomial over Rat, coefficients stored lowest power first.
/// The zero polynomial has an empty coefficient list and degree -1.
class PolyU {
 public:
  PolyU() = default;
  explicit PolyU(std::vector<Rat> coeffs);
  PolyU(std::initializer_list<Rat> coeffs);

  static PolyU zero() { return PolyU(); }
  static PolyU one();
  static PolyU constant(const Rat& c);
  /// u + c
  static PolyU linear(const Rat& c);
  /// prod over roots r of (u - r)
  static PolyU from_roots(const std::vector<Rat>& roots);
  static PolyU monomial(int deg, const Rat& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  const Rat& leading() const;

  Rat eval(const Rat& x) const;

  PolyU operator-() const;
  friend PolyU operator+(const PolyU& a, const PolyU& b);
  friend PolyU operator-(const PolyU& a, const PolyU& b);
  friend PolyU operator*(const PolyU& a, const PolyU& b);
  PolyU operator*(const Rat& s) const;
  bool operator==(const PolyU& o) const { return c_ == o.c_; }

  /// Quotient and remainder with remainder degree < divisor degree.
  static std::pair<PolyU, PolyU> divmod(const PolyU& a, const PolyU& b);
  /// Exact division; throws when the remainder is nonzero.
  static PolyU div_exact(const PolyU& a, const PolyU& b);

  PolyU monic() const;
  /// Substitution u -> u + a.
  PolyU shift(const Rat& a) const;
  /// Substitution u -> -u.
  PolyU negate_u() const;
  PolyU derivative() const;

  /// Splits off all rational roots: returns (root, multiplicity) pairs and
  /// the rootless cofactor. Roots are found with the rational root theorem.
  std::pair<std::vector<std::pair<Rat, int>>, PolyU> rational_roots() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
PolyU poly_gcd(PolyU a, PolyU b);

}  // namespace yangrep
