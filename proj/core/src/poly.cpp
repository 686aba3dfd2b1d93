#include "yangrep/poly.hpp"

#include <algorithm>

namespace yangrep {

PolyU::PolyU(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
PolyU::PolyU(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

void PolyU::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyU PolyU::one() { return PolyU({Rat(1)}); }

PolyU PolyU::constant(const Rat& c) { return PolyU({c}); }

PolyU PolyU::linear(const Rat& c) { return PolyU({c, Rat(1)}); }

PolyU PolyU::from_roots(const std::vector<Rat>& roots) {
  PolyU p = one();
  for (const auto& r : roots) p = p * PolyU({-r, Rat(1)});
  return p;
}

PolyU PolyU::monomial(int deg, const Rat& c) {
  if (c == 0) return zero();
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return PolyU(std::move(v));
}

bool PolyU::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rat PolyU::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

const Rat& PolyU::leading() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat PolyU::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyU PolyU::operator-() const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x = -x;
  return PolyU(std::move(v));
}

PolyU operator+(const PolyU& a, const PolyU& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return PolyU(std::move(v));
}

PolyU operator-(const PolyU& a, const PolyU& b) { return a + (-b); }

PolyU operator*(const PolyU& a, const PolyU& b) {
  if (a.is_zero() || b.is_zero()) return PolyU::zero();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyU(std::move(v));
}

PolyU PolyU::operator*(const Rat& s) const {
  if (s == 0) return zero();
  std::vector<Rat> v(c_);
  for (auto& x : v) x *= s;
  return PolyU(std::move(v));
}

std::pair<PolyU, PolyU> PolyU::divmod(const PolyU& a, const PolyU& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.degree() < b.degree()) return {zero(), a};
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
  const Rat& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat q = rem[k + b.degree()] / lead;
    quo[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.c_[j];
  }
  return {PolyU(std::move(quo)), PolyU(std::move(rem))};
}

PolyU PolyU::div_exact(const PolyU& a, const PolyU& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

PolyU PolyU::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

PolyU PolyU::shift(const Rat& a) const {
  // Horner in (u + a).
  PolyU acc;
  PolyU lin({a, Rat(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

PolyU PolyU::negate_u() const {
  std::vector<Rat> v(c_);
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return PolyU(std::move(v));
}

PolyU PolyU::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(i);
  return PolyU(std::move(v));
}

std::pair<std::vector<std::pair<Rat, int>>, PolyU> PolyU::rational_roots() const {
  std::vector<std::pair<Rat, int>> roots;
  if (is_zero()) return {roots, *this};
  PolyU p = *this;
  // Strip u^k first.
  int zero_mult = 0;
  while (!p.is_zero() && p.coeff(0) == 0) {
    p = div_exact(p, PolyU({Rat(0), Rat(1)}));
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);
  while (p.degree() >= 1) {
    // Clear denominators; candidate roots are p/q with p | a0, q | lead.
    BigInt lcm(1);
    for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
    std::vector<BigInt> ic;
    for (const auto& c : p.coeffs()) ic.push_back(rat_num(c) * (lcm / rat_den(c)));
    BigInt a0 = ic.front() < 0 ? BigInt(-ic.front()) : ic.front();
    BigInt an = ic.back() < 0 ? BigInt(-ic.back()) : ic.back();
    auto divisors = [](const BigInt& x) {
      std::vector<BigInt> ds;
      for (BigInt d = 1; d * d <= x; ++d) {
        if (x % d == 0) {
          ds.push_back(d);
          if (d * d != x) ds.push_back(x / d);
        }
      }
      std::sort(ds.begin(), ds.end());
      return ds;
    };
    bool found = false;
    for (const auto& pn : divisors(a0)) {
      for (const auto& qd : divisors(an)) {
        if (boost::multiprecision::gcd(pn, qd) != 1) continue;
        for (int sign : {1, -1}) {
          Rat cand = Rat(pn) * sign / Rat(qd);
          if (p.eval(cand) == 0) {
            int mult = 0;
            PolyU lin({-cand, Rat(1)});
            while (true) {
              auto [q, r] = divmod(p, lin);
              if (!r.is_zero()) break;
              p = q;
              ++mult;
            }
            roots.emplace_back(cand, mult);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return {roots, p};
}

PolyU poly_gcd(PolyU a, PolyU b) {
  while (!b.is_zero()) {
    auto [q, r] = PolyU::divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace yangrep
