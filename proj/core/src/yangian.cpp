#include "yangrep/yangian.hpp"

#include <algorithm>
#include <functional>

namespace yangrep {

FactoredSeries FactoredSeries::from_roots(const std::vector<Rat>& cs, int exp) {
  FactoredSeries f;
  for (const auto& c : cs) f.factors.emplace_back(c, exp);
  f.normalize();
  return f;
}

FactoredSeries& FactoredSeries::mul_factor(const Rat& c, int exp) {
  factors.emplace_back(c, exp);
  normalize();
  return *this;
}

FactoredSeries FactoredSeries::operator*(const FactoredSeries& o) const {
  FactoredSeries f(*this);
  f.factors.insert(f.factors.end(), o.factors.begin(), o.factors.end());
  f.normalize();
  return f;
}

FactoredSeries FactoredSeries::inverse() const {
  FactoredSeries f(*this);
  for (auto& [c, e] : f.factors) e = -e;
  return f;
}

FactoredSeries FactoredSeries::negate_u() const {
  FactoredSeries f;
  for (const auto& [c, e] : factors) f.factors.emplace_back(-c, e);
  f.normalize();
  return f;
}

void FactoredSeries::normalize() {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Rat, int>> out;
  for (const auto& [c, e] : factors) {
    if (!out.empty() && out.back().first == c)
      out.back().second += e;
    else
      out.emplace_back(c, e);
  }
  // (1 + 0 u^{-1}) is the constant 1; keep forms canonical.
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.second == 0 || p.first == 0; }),
            out.end());
  factors = std::move(out);
}

ExprPtr expr_eval(std::vector<Rat> hw) {
  auto e = std::make_shared<ExprNode>();
  e->kind = ExprNode::Kind::Eval;
  e->weight = std::move(hw);
  return e;
}

ExprPtr expr_twisted_eval(std::vector<Rat> mu) {
  auto e = std::make_shared<ExprNode>();
  e->kind = ExprNode::Kind::TwistedEval;
  e->weight = std::move(mu);
  return e;
}

ExprPtr expr_spin() {
  auto e = std::make_shared<ExprNode>();
  e->kind = ExprNode::Kind::Spin;
  return e;
}

ExprPtr expr_onedim(Rat gamma) {
  auto e = std::make_shared<ExprNode>();
  e->kind = ExprNode::Kind::OneDim;
  e->gamma = std::move(gamma);
  return e;
}

ExprPtr expr_tensor(std::vector<ExprPtr> factors) {
  auto e = std::make_shared<ExprNode>();
  e->kind = ExprNode::Kind::Tensor;
  e->children = std::move(factors);
  return e;
}

ExprPtr expr_tensor_mixed(ExprPtr left, ExprPtr right) {
  auto e = std::make_shared<ExprNode>();
  e->kind = ExprNode::Kind::TensorMixed;
  e->children = {std::move(left), std::move(right)};
  return e;
}

ExprPtr expr_shift(Rat a, ExprPtr of) {
  auto e = std::make_shared<ExprNode>();
  e->kind = ExprNode::Kind::Shift;
  e->shift_a = std::move(a);
  e->children = {std::move(of)};
  return e;
}

ExprPtr expr_twist(FactoredSeries phi, ExprPtr of) {
  auto e = std::make_shared<ExprNode>();
  e->kind = ExprNode::Kind::Twist;
  e->twist_phi = std::move(phi);
  e->children = {std::move(of)};
  return e;
}

bool is_twisted(Family f) { return f != Family::Y; }

LieAlgebra twisted_algebra(Family f) {
  switch (f) {
    case Family::YPlus:
      return LieAlgebra::O;
    case Family::YMinus:
      return LieAlgebra::SP;
    default:
      throw Error("Y(N) has no twisted algebra");
  }
}

void Action::check_identity_at_infinity() const {
  for (int pi = 0; pi < N(); ++pi)
    for (int pj = 0; pj < N(); ++pj) {
      const RatFuncMat& m = entry(pi, pj);
      for (int r = 0; r < dim; ++r)
        for (const auto& [c, f] : m.row(r)) {
          const Rat v = f.value_at_infinity();
          const Rat want = (pi == pj && r == c) ? Rat(1) : Rat(0);
          if (v != want) throw Error("entry does not tend to delta at infinity");
        }
    }
}

Action eval_module(const LieModule& m, const IndexScheme& scheme) {
  if (m.algebra != LieAlgebra::GL) throw Error("eval_module requires a gl module");
  if (scheme.N != m.N) throw Error("eval_module scheme size mismatch");
  Action x;
  x.family = Family::Y;
  x.scheme = scheme;
  x.dim = m.dim;
  x.entries.reserve(m.N * m.N);
  for (int pi = 0; pi < m.N; ++pi)
    for (int pj = 0; pj < m.N; ++pj)
      x.entries.push_back(RatFuncMat::eval_entry(m.gen(pi, pj), pi == pj));
  x.degree_bound = 1;
  x.basis_weights = m.weights;
  x.provenance = expr_eval([&] {
    std::vector<Rat> hw = m.weights[m.hw_index];
    return hw;
  }());
  return x;
}

Action tensor_action(const std::vector<Action>& factors) {
  if (factors.empty()) throw Error("tensor_action: no factors");
  Action acc = factors[0];
  std::vector<ExprPtr> prov{acc.provenance};
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const Action& b = factors[f];
    if (b.family != Family::Y || acc.family != Family::Y)
      throw Error("tensor_action applies to Y(N) actions");
    if (!(b.scheme == acc.scheme)) throw Error("tensor_action: mismatched N or scheme");
    const int N = acc.N();
    Action out;
    out.family = Family::Y;
    out.scheme = acc.scheme;
    out.dim = acc.dim * b.dim;
    out.entries.assign(N * N, RatFuncMat(out.dim, out.dim));
    for (int pi = 0; pi < N; ++pi)
      for (int pj = 0; pj < N; ++pj) {
        RatFuncMat sum(out.dim, out.dim);
        for (int pa = 0; pa < N; ++pa)
          sum = sum + RatFuncMat::kron(acc.entry(pi, pa), b.entry(pa, pj));
        out.entry(pi, pj) = std::move(sum);
      }
    out.degree_bound = acc.degree_bound + b.degree_bound;
    out.basis_weights.reserve(out.dim);
    for (const auto& wa : acc.basis_weights)
      for (const auto& wb : b.basis_weights) out.basis_weights.push_back(wa + wb);
    prov.push_back(b.provenance);
    acc = std::move(out);
  }
  if (factors.size() > 1) acc.provenance = expr_tensor(std::move(prov));
  return acc;
}

Action shift_action(const Rat& a, const Action& x) {
  Action out(x);
  for (auto& e : out.entries) e = e.shift(a);
  out.provenance = expr_shift(a, x.provenance);
  if (x.underlying)
    out.underlying = std::make_shared<Action>(shift_action(a, *x.underlying));
  return out;
}

RatFuncU factored_to_ratfunc(const FactoredSeries& f) {
  RatFuncU out = RatFuncU::one();
  for (const auto& [c, e] : f.factors) {
    RatFuncU lin = RatFuncU::linear_factor(c);
    for (int k = 0; k < std::abs(e); ++k) out = e > 0 ? out * lin : out / lin;
  }
  return out;
}

Action twist_action(const FactoredSeries& phi, const Action& x) {
  if (is_twisted(x.family)) {
    FactoredSeries mirror = phi.negate_u();
    if (!(mirror == phi)) throw Error("twist of a twisted action requires an even series");
  }
  const RatFuncU f = factored_to_ratfunc(phi);
  Action out(x);
  for (auto& e : out.entries) e = e.scaled(f);
  int extra = std::max(f.num().degree(), f.den().degree());
  out.degree_bound = x.degree_bound + extra;
  out.provenance = expr_twist(phi, x.provenance);
  out.underlying = nullptr;
  return out;
}

namespace {

void permutations_rec(std::vector<int>& perm, std::vector<bool>& used, std::size_t at,
                      const std::function<void(const std::vector<int>&, int)>& cb, int sign) {
  const int n = static_cast<int>(perm.size());
  if (at == perm.size()) {
    cb(perm, sign);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    int inversions = 0;
    for (std::size_t k = 0; k < at; ++k)
      if (perm[k] > v) ++inversions;
    used[v] = true;
    perm[at] = v;
    permutations_rec(perm, used, at + 1, cb, sign * (inversions % 2 == 0 ? 1 : -1));
    used[v] = false;
  }
}

}  // namespace

SparseMat qdet_at(const Action& x, const Rat& u0) {
  if (x.family != Family::Y) throw Error("qdet applies to Y(N) actions");
  const int N = x.N();
  if (N > 4) throw Error("qdet limited to N <= 4");
  // Evaluate all entries at the shifted points once.
  std::vector<std::vector<SparseMat>> at(N);  // at[k][pi*N+pj] = t_{ij}(u0 - k)
  for (int k = 0; k < N; ++k) {
    const Rat point = u0 - k;
    at[k].reserve(N * N);
    for (int pi = 0; pi < N; ++pi)
      for (int pj = 0; pj < N; ++pj) {
        if (x.entry(pi, pj).has_pole_at(point))
          throw Error("qdet: evaluation point " + rat_str(point) + " hits a pole");
        at[k].push_back(x.entry(pi, pj).eval(point));
      }
  }
  SparseMat acc(x.dim, x.dim);
  std::vector<int> perm(N);
  std::vector<bool> used(N, false);
  permutations_rec(perm, used, 0, [&](const std::vector<int>& p, int sign) {
    // Product t_{p(0),0}(u0) ... t_{p(N-1),N-1}(u0-N+1); rightmost acts first.
    SparseMat term = at[0][p[0] * N + 0];
    for (int col = 1; col < N; ++col) term = term * at[col][p[col] * N + col];
    acc = acc + term * Rat(sign);
  }, 1);
  return acc;
}

SparseMat qcomatrix_entry_at(const Action& x, int idx_i, int idx_j, const Rat& u0) {
  if (x.family != Family::Y) throw Error("qcomatrix applies to Y(N) actions");
  const int N = x.N();
  if (N > 3) throw Error("qcomatrix limited to N <= 3");
  const int rm_col = x.scheme.pos_of(idx_i);  // column i removed
  const int rm_row = x.scheme.pos_of(idx_j);  // row j removed
  std::vector<int> cols, rows;
  for (int p = 0; p < N; ++p) {
    if (p != rm_col) cols.push_back(p);
    if (p != rm_row) rows.push_back(p);
  }
  const int M = N - 1;
  SparseMat acc(x.dim, x.dim);
  if (M == 0) {
    return SparseMat::identity(x.dim);
  }
  std::vector<int> perm(M);
  std::vector<bool> used(M, false);
  permutations_rec(perm, used, 0, [&](const std::vector<int>& p, int sign) {
    SparseMat term = x.entry(rows[p[0]], cols[0]).eval(u0);
    for (int c = 1; c < M; ++c) term = term * x.entry(rows[p[c]], cols[c]).eval(u0 - c);
    acc = acc + term * Rat(sign);
  }, 1);
  // Cofactor checkerboard sign; positional parity agrees with the index
  // parity whenever the index set is consecutive, and stays correct for
  // the even symmetric enumeration where 0 is skipped.
  const int par = rm_row + rm_col;
  const int sgn = (par % 2 == 0) ? 1 : -1;
  return acc * Rat(sgn);
}

std::vector<SparseMat> coeff_matrices(const Action& x, int bound) {
  if (bound < 1) throw Error("coeff_matrices: bound must be >= 1");
  const int N = x.N();
  std::vector<SparseMat> out;
  out.reserve(N * N * bound);
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      const RatFuncMat& e = x.entry(pi, pj);
      // Expand each entry once up to the requested order.
      std::vector<SparseMat> per(bound, SparseMat(x.dim, x.dim));
      for (int r = 0; r < x.dim; ++r)
        for (const auto& [c, f] : e.row(r)) {
          auto coeffs = f.series_at_infinity(bound + 1);
          for (int k = 1; k <= bound; ++k)
            if (coeffs[k] != 0) per[k - 1].set(r, c, coeffs[k]);
        }
      for (auto& m : per) out.push_back(std::move(m));
    }
  return out;
}

Action with_scheme(const Action& x, const IndexScheme& scheme) {
  if (scheme.N != x.N()) throw Error("with_scheme: size mismatch");
  Action out(x);
  out.scheme = scheme;
  return out;
}

std::optional<FactoredSeries> factor_ratfunc(const RatFuncU& f) {
  if (f.is_zero()) return std::nullopt;
  auto [nroots, nrest] = f.num().rational_roots();
  auto [droots, drest] = f.den().rational_roots();
  if (nrest.degree() > 0 || drest.degree() > 0) return std::nullopt;
  if (f.num().leading() != f.den().leading()) return std::nullopt;
  FactoredSeries out;
  for (const auto& [r, m] : nroots) out.mul_factor(-r, m);
  for (const auto& [r, m] : droots) out.mul_factor(-r, -m);
  return out;
}

}  // namespace yangrep
