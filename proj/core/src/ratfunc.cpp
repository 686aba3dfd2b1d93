#include "yangrep/ratfunc.hpp"

namespace yangrep {

RatFuncU::RatFuncU(PolyU num, PolyU den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyU::one();
    return;
  }
  PolyU g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = PolyU::div_exact(num_, g);
    den_ = PolyU::div_exact(den_, g);
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFuncU RatFuncU::linear_factor(const Rat& c) {
  return RatFuncU(PolyU::linear(c), PolyU({Rat(0), Rat(1)}));
}

std::optional<Rat> RatFuncU::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return num_.eval(x) / d;
}

Rat RatFuncU::eval_or_throw(const Rat& x) const {
  auto v = eval(x);
  if (!v) throw Error("evaluation at pole u = " + rat_str(x));
  return *v;
}

Rat RatFuncU::value_at_infinity() const {
  if (num_.degree() > den_.degree()) throw Error("rational function unbounded at infinity");
  if (num_.degree() < den_.degree()) return Rat(0);
  return num_.leading() / den_.leading();
}

std::vector<Rat> RatFuncU::series_at_infinity(int count) const {
  if (num_.degree() > den_.degree())
    throw Error("series at infinity requires deg num <= deg den");
  // In t = 1/u: reversed coefficient lists give N(t)/D(t) with D(0) != 0.
  const int d = den_.degree();
  std::vector<Rat> N(count, Rat(0)), D(count, Rat(0));
  for (int i = 0; i <= d && i < count; ++i) {
    N[i] = num_.coeff(d - i);
    D[i] = den_.coeff(d - i);
  }
  Rat d0 = den_.leading();
  std::vector<Rat> out(count, Rat(0));
  for (int k = 0; k < count; ++k) {
    Rat acc = N[k];
    for (int j = 1; j <= k; ++j) acc -= D[j] * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

RatFuncU RatFuncU::reciprocal() const {
  if (is_zero()) throw Error("reciprocal of zero");
  return RatFuncU(den_, num_);
}

RatFuncU operator+(const RatFuncU& a, const RatFuncU& b) {
  return RatFuncU(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncU operator-(const RatFuncU& a, const RatFuncU& b) {
  return RatFuncU(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncU operator*(const RatFuncU& a, const RatFuncU& b) {
  if (a.is_zero() || b.is_zero()) return RatFuncU::zero();
  // Cross-reduce first to keep intermediate degrees down.
  PolyU g1 = poly_gcd(a.num_, b.den_);
  PolyU g2 = poly_gcd(b.num_, a.den_);
  PolyU n1 = g1.degree() > 0 ? PolyU::div_exact(a.num_, g1) : a.num_;
  PolyU d2 = g1.degree() > 0 ? PolyU::div_exact(b.den_, g1) : b.den_;
  PolyU n2 = g2.degree() > 0 ? PolyU::div_exact(b.num_, g2) : b.num_;
  PolyU d1 = g2.degree() > 0 ? PolyU::div_exact(a.den_, g2) : a.den_;
  return RatFuncU(n1 * n2, d1 * d2);
}

RatFuncU operator/(const RatFuncU& a, const RatFuncU& b) { return a * b.reciprocal(); }

}  // namespace yangrep
