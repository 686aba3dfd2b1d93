#include "yangrep/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "yangrep/classify.hpp"

namespace yangrep {

namespace {

Rat rq(const char* s) { return parse_rat_or_throw(s); }

DenseVec unit_vec(int dim, int idx) {
  DenseVec v(dim, Rat(0));
  v[idx] = Rat(1);
  return v;
}

std::string describe_quad(const Rat& u0, const Rat& v0, int i, int j, int k, int l) {
  std::ostringstream os;
  os << "u0=" << rat_str(u0) << " v0=" << rat_str(v0) << " (i,j,k,l)=(" << i << "," << j << ","
     << k << "," << l << ")";
  return os.str();
}

// Lazily filled product cache for one ordered sample pair.
class ProductCache {
 public:
  ProductCache(const std::vector<SparseMat>& at_a, const std::vector<SparseMat>& at_b)
      : a_(at_a), b_(at_b), cache_(at_a.size() * at_b.size()) {}

  const SparseMat& get(int x, int y) {
    auto& slot = cache_[x * b_.size() + y];
    if (!slot) slot = a_[x] * b_[y];
    return *slot;
  }

 private:
  const std::vector<SparseMat>& a_;
  const std::vector<SparseMat>& b_;
  std::vector<std::optional<SparseMat>> cache_;
};

Action eval_gl2_action(const Rat& a, const Rat& b, bool symmetric) {
  return eval_module(build_gl2(a, b),
                     symmetric ? symmetric_scheme(2) : standard_scheme(2));
}

}  // namespace

bool VerifyReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerifyReport::add(std::string description, bool ok, std::string counterexample) {
  checks.push_back({std::move(description), ok, ok ? std::string{} : std::move(counterexample)});
}

std::vector<std::pair<std::string, Action>> standard_catalog() {
  std::vector<std::pair<std::string, Action>> cat;
  auto gl2 = [&](const char* a, const char* b, bool sym = false) {
    return eval_gl2_action(rq(a), rq(b), sym);
  };
  cat.emplace_back("Y2:L(1,0)", gl2("1", "0"));
  cat.emplace_back("Y2:L(1,0)xL(1,0)", tensor_action({gl2("1", "0"), gl2("1", "0")}));
  cat.emplace_back("Y2:L(2,0)xL(1,-1)", tensor_action({gl2("2", "0"), gl2("1", "-1")}));
  cat.emplace_back("Y2:L(1,0)xL(1/2,-1/2)xL(0,-1)",
                   tensor_action({gl2("1", "0"), gl2("1/2", "-1/2"), gl2("0", "-1")}));
  cat.emplace_back("Y2:shift(1/2,L(1,0))", shift_action(rq("1/2"), gl2("1", "0")));
  {
    FactoredSeries phi;
    phi.mul_factor(Rat(1), -1);
    cat.emplace_back("Y2:twist((1+1/u)^-1,L(1,1))", twist_action(phi, gl2("1", "1")));
  }
  cat.emplace_back("Y3:L(1,1,0)",
                   eval_module(build_glN({Rat(1), Rat(1), Rat(0)}), standard_scheme(3)));
  cat.emplace_back(
      "Y3:L(1,0,0)xL(1,1,0)",
      tensor_action({eval_module(build_glN({Rat(1), Rat(0), Rat(0)}), standard_scheme(3)),
                     eval_module(build_glN({Rat(1), Rat(1), Rat(0)}), standard_scheme(3))}));
  cat.emplace_back("Y-2:L(3/2,-1/2)", restrict_S(gl2("3/2", "-1/2", true), Family::YMinus));
  cat.emplace_back("Y-2:L(1,0)xL(2,-1)",
                   restrict_S(tensor_action({gl2("1", "0", true), gl2("2", "-1", true)}),
                              Family::YMinus));
  cat.emplace_back("Y+2:L(3/2,-1/2)", restrict_S(gl2("3/2", "-1/2", true), Family::YPlus));
  cat.emplace_back("Y+2:L(1,0)xV(-3/2)",
                   tensor_mixed(gl2("1", "0", true), onedim_plus(rq("-3/2"))));
  cat.emplace_back("Y+2:L(3/2,-1/2)xV(1)",
                   tensor_mixed(gl2("3/2", "-1/2", true), onedim_plus(Rat(1))));
  cat.emplace_back("Y+3:L(1,1,0)",
                   restrict_S(eval_module(build_glN({Rat(1), Rat(1), Rat(0)}),
                                          symmetric_scheme(3)),
                              Family::YPlus));
  cat.emplace_back(
      "Y+3:L(2,2,0)xL(1,1,0)",
      restrict_S(tensor_action(
                     {eval_module(build_glN({Rat(2), Rat(2), Rat(0)}), symmetric_scheme(3)),
                      eval_module(build_glN({Rat(1), Rat(1), Rat(0)}), symmetric_scheme(3))}),
                 Family::YPlus));
  cat.emplace_back("sp2-eval:mu=-1",
                   twisted_eval(build_g_rank1(LieAlgebra::SP, 2, Rat(-1)), Family::YMinus));
  cat.emplace_back("o3-spin", twisted_eval(build_spin(3), Family::YPlus));
  return cat;
}

VerifyReport verify_defining(const Action& x, const std::string& name) {
  VerifyReport rep;
  rep.suite = "defining";
  const int N = x.N();
  const int d = std::max(1, x.degree_bound);
  const int npts = 2 * d + 4;  // npts*(npts-1) >= (2d+3)^2 ordered pairs

  bool inf_ok = true;
  std::string inf_ce;
  try {
    x.check_identity_at_infinity();
  } catch (const Error& e) {
    inf_ok = false;
    inf_ce = e.what();
  }
  rep.add(name + ": entries tend to the identity at infinity", inf_ok, inf_ce);

  if (is_twisted(x.family)) {
    const bool sym = symmetry_relation_holds(x);
    rep.add(name + ": symmetry relation (exact rational identity)", sym,
            sym ? "" : "symmetry relation violated");
  }

  const auto pts = admissible_points(x, npts);
  std::vector<std::vector<SparseMat>> eval_at(npts);
  for (int p = 0; p < npts; ++p) {
    eval_at[p].reserve(N * N);
    for (const auto& e : x.entries) eval_at[p].push_back(e.eval(pts[p]));
  }

  bool ok = true;
  std::string ce;
  long pairs = 0;
  const LieAlgebra alg = is_twisted(x.family) ? twisted_algebra(x.family) : LieAlgebra::GL;
  for (int a = 0; a < npts && ok; ++a)
    for (int b = 0; b < npts && ok; ++b) {
      if (a == b) continue;
      ++pairs;
      const Rat &u0 = pts[a], &v0 = pts[b];
      ProductCache uv(eval_at[a], eval_at[b]);
      ProductCache vu(eval_at[b], eval_at[a]);
      auto P = [&](int i, int j) { return x.scheme.pos_of(i) * N + x.scheme.pos_of(j); };
      for (int pi = 0; pi < N && ok; ++pi)
        for (int pj = 0; pj < N && ok; ++pj)
          for (int pk = 0; pk < N && ok; ++pk)
            for (int pl = 0; pl < N && ok; ++pl) {
              const int i = x.scheme.index_at(pi), j = x.scheme.index_at(pj);
              const int k = x.scheme.index_at(pk), l = x.scheme.index_at(pl);
              SparseMat lhs = uv.get(P(i, j), P(k, l)) - vu.get(P(k, l), P(i, j));
              SparseMat rhs(x.dim, x.dim);
              if (x.family == Family::Y) {
                rhs = (uv.get(P(k, j), P(i, l)) - vu.get(P(k, j), P(i, l))) *
                      (Rat(1) / (u0 - v0));
              } else {
                rhs = (uv.get(P(k, j), P(i, l)) - vu.get(P(k, j), P(i, l))) *
                      (Rat(1) / (u0 - v0));
                rhs = rhs - (uv.get(P(i, -k), P(-j, l)) * Rat(theta(alg, k, -j)) -
                             vu.get(P(k, -i), P(-l, j)) * Rat(theta(alg, i, -l))) *
                                (Rat(1) / (u0 + v0));
                rhs = rhs + (uv.get(P(k, -i), P(-j, l)) - vu.get(P(k, -i), P(-j, l))) *
                                (Rat(theta(alg, i, -j)) / (u0 * u0 - v0 * v0));
              }
              if (!(lhs == rhs)) {
                ok = false;
                ce = describe_quad(u0, v0, i, j, k, l);
              }
            }
    }
  rep.samples_used = pairs;
  std::ostringstream desc;
  desc << name << ": commutation relations at " << pairs << " sample pairs";
  rep.add(desc.str(), ok, ce);
  return rep;
}

VerifyReport verify_defining_catalog() {
  VerifyReport rep;
  rep.suite = "defining";
  for (const auto& [name, x] : standard_catalog()) {
    VerifyReport one = verify_defining(x, name);
    rep.samples_used += one.samples_used;
    for (auto& c : one.checks) rep.checks.push_back(std::move(c));
  }
  return rep;
}

VerifyReport verify_qdet_sdet(const Action& x, const std::string& name) {
  VerifyReport rep;
  rep.suite = "qdet_sdet";
  const int N = x.N();
  if (is_twisted(x.family) && !x.underlying)
    throw Error("qdet_sdet requires an underlying Y(N) action");
  const Action& base = x.family == Family::Y ? x : *x.underlying;

  // Points where every needed shifted evaluation avoids poles.
  std::vector<Rat> pts;
  {
    Rat t(N + 1);
    while (static_cast<int>(pts.size()) < 5) {
      bool good = true;
      for (int k = 0; k < N && good; ++k)
        for (const auto& e : base.entries) {
          if (e.has_pole_at(t - k) || e.has_pole_at(-t + N - 1 - k)) {
            good = false;
            break;
          }
        }
      for (const auto& e : x.entries)
        if (good && (e.has_pole_at(t) || e.has_pole_at(-t + N - 1))) good = false;
      if (good) pts.push_back(t);
      t += 1;
    }
  }
  const bool irr = is_irreducible(x);
  const std::vector<Rat> comm_pts = admissible_points(x, 4);

  if (is_twisted(x.family)) {
    // gamma-factor reflection identity at the sample points.
    RatFuncU g = gamma_factor(x.family, N);
    bool gok = true;
    for (const auto& u : pts)
      gok = gok && g.eval_or_throw(u) * g.eval_or_throw(-u + Rat(N) / 2 - 1) == 1;
    rep.add(name + ": gamma factor reflection identity", gok);
  }

  bool scalar_ok = true, central_ok = true, row_ok = true;
  std::string ce_scalar, ce_central, ce_row;
  for (const auto& u0 : pts) {
    SparseMat det = x.family == Family::Y ? qdet_at(x, u0) : sdet_at(x, u0);
    ++rep.samples_used;
    if (irr) {
      Rat c;
      if (!det.is_scalar(&c)) {
        scalar_ok = false;
        ce_scalar = "u0=" + rat_str(u0);
      }
    }
    for (const auto& v0 : comm_pts)
      for (const auto& e : x.entries)
        if (!commutator(det, e.eval(v0)).is_zero()) {
          central_ok = false;
          ce_central = "u0=" + rat_str(u0) + " v0=" + rat_str(v0);
        }
    if (is_twisted(x.family) && N == 3) {
      // Row identity on the highest vector: comatrix_11(u0) s_11(u0-2) xi
      // equals the determinant value on xi.
      auto blocks = singular_eigenspaces(x);
      const DenseVec& xi = blocks[0].basis[0];
      DenseVec lhs = scomatrix3_at(x, 1, 1, u0)
                         .apply(x.entry(x.scheme.pos_of(1), x.scheme.pos_of(1))
                                    .eval(u0 - 2)
                                    .apply(xi));
      DenseVec rhs = det.apply(xi);
      if (!(lhs == rhs)) {
        row_ok = false;
        ce_row = "u0=" + rat_str(u0);
      }
    }
  }
  if (irr)
    rep.add(name + ": determinant acts as a scalar", scalar_ok, ce_scalar);
  rep.add(name + ": determinant is central on sampled entries", central_ok, ce_central);
  if (is_twisted(x.family) && N == 3)
    rep.add(name + ": comatrix row identity on the highest vector", row_ok, ce_row);
  return rep;
}

VerifyReport verify_qdet_sdet_catalog() {
  VerifyReport rep;
  rep.suite = "qdet_sdet";
  for (const auto& [name, x] : standard_catalog()) {
    if (is_twisted(x.family) && !x.underlying) continue;
    if (x.N() > 4) continue;
    VerifyReport one = verify_qdet_sdet(x, name);
    rep.samples_used += one.samples_used;
    for (auto& c : one.checks) rep.checks.push_back(std::move(c));
  }
  return rep;
}

StarContext make_star_context(const std::vector<Rat>& alphas, const std::vector<Rat>& betas) {
  if (alphas.size() != betas.size() || alphas.empty())
    throw Error("star context needs matching nonempty parameter lists");
  StarContext cx;
  cx.alphas = alphas;
  cx.betas = betas;
  std::vector<Action> factors;
  int hw_index = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    LieModule m = build_glN({alphas[i], alphas[i], betas[i]});
    hw_index = hw_index * m.dim + m.hw_index;
    factors.push_back(eval_module(m, symmetric_scheme(3)));
  }
  Action tensor = factors.size() == 1 ? factors[0] : tensor_action(factors);
  cx.action = restrict_S(tensor, Family::YPlus);
  cx.xi = unit_vec(cx.action.dim, hw_index);

  cx.mu0 = RatFuncU::one();
  cx.mu1 = RatFuncU::one();
  cx.mu0_star = RatFuncU::one();
  cx.mu1_star = RatFuncU::one();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const Rat &a = alphas[i], &b = betas[i];
    cx.mu0 = cx.mu0 * RatFuncU::linear_factor(a) * RatFuncU::linear_factor(-a);
    cx.mu1 = cx.mu1 * RatFuncU::linear_factor(-a) * RatFuncU::linear_factor(b);
    const Rat as = Rat(1) / 2 - b, bs = Rat(1) / 2 - a;
    cx.alpha_star.push_back(as);
    cx.beta_star.push_back(bs);
    cx.mu0_star = cx.mu0_star * RatFuncU::linear_factor(as) * RatFuncU::linear_factor(-as);
    cx.mu1_star = cx.mu1_star * RatFuncU::linear_factor(-as) * RatFuncU::linear_factor(bs);
  }
  const int k = cx.k();
  const RatFuncU u2k(PolyU::monomial(2 * k, Rat(1)), PolyU::one());
  auto clear = [&](const RatFuncU& f) {
    RatFuncU g = f * u2k;
    if (g.den().degree() != 0 || !g.den().is_one())
      throw Error("cleared highest-weight component is not polynomial");
    return g.num();
  };
  cx.a0 = clear(cx.mu0);
  cx.a1 = clear(cx.mu1);
  cx.a1_star = clear(cx.mu1_star);
  // psi0(u) = mu*_0(u) / (mu_1(u - 1/2) mu_1(-u - 1/2))
  cx.psi0 = cx.mu0_star / (cx.mu1.shift(rq("-1/2")) * cx.mu1.negate_u().shift(rq("1/2")));
  return cx;
}

namespace {

// Polynomial operator u^{2k} s_ij(u) on a star context.
RatFuncMat polynomial_entry(const StarContext& cx, int idx_i, int idx_j) {
  const RatFuncU u2k(PolyU::monomial(2 * cx.k(), Rat(1)), PolyU::one());
  RatFuncMat m = cx.action
                     .entry(cx.action.scheme.pos_of(idx_i), cx.action.scheme.pos_of(idx_j))
                     .scaled(u2k);
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, f] : m.row(r))
      if (f.den().degree() != 0) throw Error("cleared generator entry is not polynomial");
  return m;
}

// Star polynomial operator u^{2k} psi0(u) comatrix_{ij}(-u + 1/2) at u0.
// The (-1,1) entry comes from the exact comatrix solve, the explicit
// bilinear forms cover the rest.
SparseMat star_op_at(const StarContext& cx, int idx_i, int idx_j, const Rat& u0,
                     std::map<Rat, std::map<std::pair<int, int>, SparseMat>>* solve_cache) {
  const Rat w = -u0 + rq("1/2");
  const Rat pref = cx.psi0.eval_or_throw(u0);
  Rat u2k(1);
  for (int i = 0; i < 2 * cx.k(); ++i) u2k *= u0;
  SparseMat base(0, 0);
  if ((idx_i == 0 && idx_j == 0) || (idx_i == -1 && idx_j == 0) ||
      (idx_i == 1 && idx_j == 1)) {
    base = scomatrix3_at(cx.action, idx_i, idx_j, w);
  } else {
    auto it = solve_cache->find(w);
    if (it == solve_cache->end())
      it = solve_cache->emplace(w, scomatrix_solve_at(cx.action, w)).first;
    base = it->second.at({idx_i, idx_j});
  }
  return base * (pref * u2k);
}

bool star_point_admissible(const StarContext& cx, const Rat& u0,
                           std::map<Rat, std::map<std::pair<int, int>, SparseMat>>* cache) {
  const Rat w = -u0 + rq("1/2");
  if (!cx.psi0.eval(u0) || cx.psi0.eval_or_throw(u0) == 0) return false;
  for (const auto& e : cx.action.entries)
    if (e.has_pole_at(-w) || e.has_pole_at(w - 1) || e.has_pole_at(w - 2)) return false;
  // The comatrix solve needs invertibility at w - 2; probe and keep it.
  try {
    if (!cache->count(w)) cache->emplace(w, scomatrix_solve_at(cx.action, w));
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<Rat> star_points(const StarContext& cx, int count,
                             const std::function<bool(const Rat&)>& extra,
                             std::map<Rat, std::map<std::pair<int, int>, SparseMat>>* cache) {
  std::vector<Rat> pts;
  Rat t(2);
  int guard = 0;
  while (static_cast<int>(pts.size()) < count) {
    if (++guard > 200) throw Error("could not find enough admissible star sample points");
    if ((!extra || extra(t)) && star_point_admissible(cx, t, cache)) pts.push_back(t);
    t += 1;
  }
  return pts;
}

}  // namespace

VerifyReport verify_star_hw(const std::vector<Rat>& alphas, const std::vector<Rat>& betas) {
  VerifyReport rep;
  rep.suite = "star_hw";
  StarContext cx = make_star_context(alphas, betas);
  std::map<Rat, std::map<std::pair<int, int>, SparseMat>> cache;
  const auto pts = star_points(cx, 8, nullptr, &cache);
  bool e00 = true, e11 = true, ann_m10 = true, ann_m11 = true;
  std::string ce00, ce11, cem10, cem11;
  for (const auto& u0 : pts) {
    ++rep.samples_used;
    Rat u2k(1);
    for (int i = 0; i < 2 * cx.k(); ++i) u2k *= u0;
    DenseVec v00 = star_op_at(cx, 0, 0, u0, &cache).apply(cx.xi);
    if (!(v00 == scale(cx.xi, cx.mu0_star.eval_or_throw(u0) * u2k))) {
      e00 = false;
      ce00 = "u0=" + rat_str(u0);
    }
    DenseVec v11 = star_op_at(cx, 1, 1, u0, &cache).apply(cx.xi);
    if (!(v11 == scale(cx.xi, cx.mu1_star.eval_or_throw(u0) * u2k))) {
      e11 = false;
      ce11 = "u0=" + rat_str(u0);
    }
    if (!is_zero_vec(star_op_at(cx, -1, 0, u0, &cache).apply(cx.xi))) {
      ann_m10 = false;
      cem10 = "u0=" + rat_str(u0);
    }
    if (!is_zero_vec(star_op_at(cx, -1, 1, u0, &cache).apply(cx.xi))) {
      ann_m11 = false;
      cem11 = "u0=" + rat_str(u0);
    }
  }
  rep.add("star action: highest vector eigenvalue for the (0,0) entry", e00, ce00);
  rep.add("star action: highest vector eigenvalue for the (1,1) entry", e11, ce11);
  rep.add("star action: raising entry (-1,0) annihilates the highest vector", ann_m10, cem10);
  rep.add("star action: raising entry (-1,1) annihilates the highest vector", ann_m11, cem11);
  return rep;
}

VerifyReport verify_lowering_chain(const Rat& alpha, const Rat& beta, int p_max) {
  VerifyReport rep;
  rep.suite = "prop62";
  StarContext cx = make_star_context({alpha}, {beta});
  for (int p = 1; p <= p_max; ++p)
    if (alpha - p == -alpha)
      throw Error("degenerate parameters: alpha - p equals -alpha");

  RatFuncMat S10 = polynomial_entry(cx, 1, 0);
  RatFuncMat S00 = polynomial_entry(cx, 0, 0);
  RatFuncMat Sm10 = polynomial_entry(cx, -1, 0);

  std::vector<DenseVec> eta{cx.xi};
  for (int p = 1; p <= p_max; ++p)
    eta.push_back(S10.eval(-alpha + p - 1).apply(eta.back()));
  {
    // The lowering coefficient forces eta_p != 0 while every factor
    // a1(-alpha+q-1), q <= p, stays nonzero; beyond that the chain may die.
    bool nz = true;
    std::string ce;
    bool alive = true;
    for (int p = 1; p <= p_max; ++p) {
      alive = alive && cx.a1.eval(-alpha + p - 1) != 0;
      if (alive && is_zero_vec(eta[p])) {
        nz = false;
        ce = "p=" + std::to_string(p);
      }
    }
    rep.add("chain vectors are nonzero while the lowering coefficients are", nz, ce);
  }

  const Rat beta_star = Rat(1) / 2 - alpha;
  std::map<Rat, std::map<std::pair<int, int>, SparseMat>> cache;
  auto pts = star_points(cx, 6, [&](const Rat& t) {
    return t != alpha && t != -alpha && t != -beta_star;
  }, &cache);

  bool ok13 = true, ok14 = true, ok15 = true, ok16 = true;
  std::string ce13, ce14, ce15, ce16;
  for (int p = 0; p <= p_max; ++p) {
    for (const auto& u0 : pts) {
      ++rep.samples_used;
      // Diagonal eigenvalue of the (0,0) polynomial operator.
      {
        const Rat coeff = cx.a0.eval(u0) * (u0 * u0 - (alpha - p) * (alpha - p)) /
                          (u0 * u0 - alpha * alpha);
        if (!(S00.eval(u0).apply(eta[p]) == scale(eta[p], coeff))) {
          ok13 = false;
          ce13 = "p=" + std::to_string(p) + " u0=" + rat_str(u0);
        }
      }
      // Lowering formula for the (-1,0) polynomial operator.
      if (p >= 1) {
        const Rat coeff = Rat(p) * cx.a0.eval(u0) * cx.a1.eval(-alpha + p - 1) *
                          (u0 + alpha - p) / (u0 * u0 - alpha * alpha);
        if (!(Sm10.eval(u0).apply(eta[p]) == scale(eta[p - 1], coeff))) {
          ok14 = false;
          ce14 = "p=" + std::to_string(p) + " u0=" + rat_str(u0);
        }
      } else {
        if (!is_zero_vec(Sm10.eval(u0).apply(eta[0]))) {
          ok14 = false;
          ce14 = "p=0 u0=" + rat_str(u0);
        }
      }
      // Star annihilation of the (-1,1) entry.
      if (!is_zero_vec(star_op_at(cx, -1, 1, u0, &cache).apply(eta[p]))) {
        ok15 = false;
        ce15 = "p=" + std::to_string(p) + " u0=" + rat_str(u0);
      }
      // Star eigenvalue of the (1,1) entry.
      {
        const Rat coeff =
            cx.a1_star.eval(u0) * (u0 + beta_star + p) / (u0 + beta_star);
        if (!(star_op_at(cx, 1, 1, u0, &cache).apply(eta[p]) == scale(eta[p], coeff))) {
          ok16 = false;
          ce16 = "p=" + std::to_string(p) + " u0=" + rat_str(u0);
        }
      }
    }
  }
  rep.add("diagonal (0,0) eigenvalue formula on the chain", ok13, ce13);
  rep.add("lowering (-1,0) coefficient formula on the chain", ok14, ce14);
  rep.add("star raising (-1,1) annihilates the chain", ok15, ce15);
  rep.add("star diagonal (1,1) eigenvalue formula on the chain", ok16, ce16);
  return rep;
}

VerifyReport verify_singular_chains(const std::vector<Rat>& alphas,
                                    const std::vector<Rat>& betas,
                                    const std::vector<int>& ps) {
  VerifyReport rep;
  rep.suite = "prop63_64";
  if (alphas.size() != ps.size()) throw Error("parameter and index lists must match");
  StarContext cx = make_star_context(alphas, betas);
  const int k = cx.k();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (alphas[i] == alphas[j]) throw Error("distinct alpha parameters required");

  RatFuncMat S10 = polynomial_entry(cx, 1, 0);
  RatFuncMat S00 = polynomial_entry(cx, 0, 0);
  RatFuncMat Sm10 = polynomial_entry(cx, -1, 0);

  // eta indexed by the lowering counts; built recursively as needed.
  std::map<std::vector<int>, DenseVec> etas;
  std::function<const DenseVec&(const std::vector<int>&)> eta =
      [&](const std::vector<int>& q) -> const DenseVec& {
    auto it = etas.find(q);
    if (it != etas.end()) return it->second;
    DenseVec v;
    if (std::all_of(q.begin(), q.end(), [](int a) { return a == 0; })) {
      v = cx.xi;
    } else {
      // Apply the leftmost block with a nonzero count; blocks commute on
      // the chain vectors (checked separately below).
      int i = 0;
      while (q[i] == 0) ++i;
      std::vector<int> prev = q;
      prev[i] -= 1;
      v = S10.eval(-alphas[i] + q[i] - 1).apply(eta(prev));
    }
    return etas.emplace(q, std::move(v)).first->second;
  };

  const DenseVec& top = eta(ps);
  rep.add("chain vector eta_p is nonzero", !is_zero_vec(top));

  std::map<Rat, std::map<std::pair<int, int>, SparseMat>> cache;
  auto pts = star_points(cx, 6, [&](const Rat& t) {
    for (int i = 0; i < k; ++i) {
      if (t == alphas[i] || t == -alphas[i]) return false;
      if (t == -cx.beta_star[i]) return false;
      if (t == -(alphas[i] - ps[i]) || t == alphas[i] - ps[i]) return false;
    }
    return true;
  }, &cache);

  // Eigenvalue of the (0,0) polynomial operator.
  {
    bool ok = true;
    std::string ce;
    for (const auto& u0 : pts) {
      ++rep.samples_used;
      Rat coeff(1);
      for (int i = 0; i < k; ++i)
        coeff *= u0 * u0 - (alphas[i] - ps[i]) * (alphas[i] - ps[i]);
      if (!(S00.eval(u0).apply(top) == scale(top, coeff))) {
        ok = false;
        ce = "u0=" + rat_str(u0);
      }
    }
    rep.add("diagonal (0,0) eigenvalue product formula", ok, ce);
  }

  // Polynomial division of the normalized lowering series and its values.
  {
    std::vector<RatFuncU> image = Sm10.apply(top);
    PolyU divisor = PolyU::one();
    for (int i = 0; i < k; ++i) divisor = divisor * PolyU::linear(alphas[i] - ps[i]);
    bool divides = true;
    std::vector<PolyU> reduced(image.size());
    for (std::size_t r = 0; r < image.size(); ++r) {
      if (image[r].den().degree() != 0) {
        divides = false;
        break;
      }
      auto [q, rem] = PolyU::divmod(image[r].num() * (Rat(1) / image[r].den().coeff(0)), divisor);
      if (!rem.is_zero()) {
        divides = false;
        break;
      }
      reduced[r] = q;
    }
    rep.add("normalized lowering image is polynomial", divides);

    if (divides) {
      bool ok = true;
      std::string ce;
      for (int i = 0; i < k; ++i) {
        if (ps[i] == 0) continue;
        const Rat point = alphas[i] - ps[i];
        DenseVec val(reduced.size(), Rat(0));
        for (std::size_t r = 0; r < reduced.size(); ++r) val[r] = reduced[r].eval(point);
        std::vector<int> down = ps;
        down[i] -= 1;
        Rat coeff = -cx.a1.eval(-alphas[i] + ps[i] - 1);
        for (int j = 0; j < k; ++j) coeff *= alphas[i] - alphas[j] - ps[i];
        if (!(val == scale(eta(down), coeff))) {
          ok = false;
          ce = "i=" + std::to_string(i);
        }
      }
      rep.add("normalized lowering special values", ok, ce);
    }
  }

  // Star annihilation and eigenvalue.
  {
    bool ann = true, eig = true;
    std::string cea, cee;
    for (const auto& u0 : pts) {
      if (!is_zero_vec(star_op_at(cx, -1, 1, u0, &cache).apply(top))) {
        ann = false;
        cea = "u0=" + rat_str(u0);
      }
      Rat coeff(1);
      for (int i = 0; i < k; ++i)
        coeff *= (u0 - cx.alpha_star[i]) * (u0 + cx.beta_star[i] + ps[i]);
      if (!(star_op_at(cx, 1, 1, u0, &cache).apply(top) == scale(top, coeff))) {
        eig = false;
        cee = "u0=" + rat_str(u0);
      }
    }
    rep.add("star raising (-1,1) annihilates the chain vector", ann, cea);
    rep.add("star diagonal (1,1) eigenvalue product formula", eig, cee);
  }

  // Exchange identity: lowering evaluations at the eigenvalue roots commute.
  {
    const Rat g1 = alphas[0] - ps[0], g2 = alphas[1] - ps[1];
    DenseVec lhs = S10.eval(g1).apply(S10.eval(g2).apply(top));
    DenseVec rhs = S10.eval(g2).apply(S10.eval(g1).apply(top));
    rep.add("lowering operators exchange at the eigenvalue roots", lhs == rhs);
  }
  return rep;
}

VerifyReport verify_reducible_restriction(const Rat& gamma1, const Rat& gamma2) {
  VerifyReport rep;
  rep.suite = "example57";
  if (!is_half_integer(gamma1) || !is_half_integer(gamma2) || gamma1 < gamma2 ||
      !is_nonneg_integer(gamma1 + gamma2) || gamma2 < Rat(1) / 2)
    throw Error("parameters must be half-integers with gamma1 >= gamma2 >= 1/2");

  Action x = restrict_S(eval_gl2_action(gamma1, -gamma2, true), Family::YPlus);
  const int dim = x.dim;
  const long part = rat_to_long(gamma2 + rq("1/2"));
  const long top2 = rat_to_long(gamma1 + rq("1/2"));

  std::vector<DenseVec> b1, b2;
  for (long i = 0; i < part; ++i) b1.push_back(unit_vec(dim, static_cast<int>(i)));
  for (long i = top2; i < dim; ++i) b2.push_back(unit_vec(dim, static_cast<int>(i)));
  Subspace l1 = make_subspace(dim, b1), l2 = make_subspace(dim, b2);

  // Invariance under every coefficient matrix.
  auto invariant = [&](const Subspace& w) {
    for (const auto& m : coeff_matrices(x, 2 * x.degree_bound))
      for (const auto& b : w.basis)
        if (!w.contains(m.apply(b))) return false;
    return true;
  };
  rep.add("lower span is invariant", invariant(l1));
  rep.add("upper span is invariant", invariant(l2));
  rep.add("parts have the stated dimensions",
          l1.dim() == part && l2.dim() == part &&
              dim - 2 * static_cast<int>(part) == rat_to_long(gamma1 - gamma2));

  // Highest weights of the parts match the predicted mixed tensor products.
  Action on_l1 = restrict_action(x, l1);
  Action on_l2 = restrict_action(x, l2);
  auto hw_of = [](const Action& y) {
    auto blocks = singular_eigenspaces(y);
    return extract_hw(y, blocks[0].basis[0]).components[0];
  };
  const RatFuncU hw1 = hw_of(on_l1);
  const RatFuncU expect1 =
      RatFuncU::linear_factor(-gamma1) * RatFuncU::linear_factor(-gamma2);
  rep.add("lower part highest weight matches L(g2,1/2) x V(-g1)", hw1 == expect1);
  const RatFuncU hw2 = hw_of(on_l2);
  const RatFuncU expect2 =
      RatFuncU::linear_factor(-gamma2) * RatFuncU::linear_factor(gamma1 + 1);
  rep.add("upper part highest weight matches L(g2,1/2) x V(g1+1)", hw2 == expect2);

  // The mixed tensor products themselves carry the same weights/dimensions.
  {
    Action t1 = tensor_mixed(eval_gl2_action(gamma2, rq("1/2"), true), onedim_plus(-gamma1));
    Action t2 = tensor_mixed(eval_gl2_action(gamma2, rq("1/2"), true),
                             onedim_plus(gamma1 + 1));
    rep.add("predicted lower tensor agrees in dimension and weight",
            t1.dim == l1.dim() && hw_of(t1) == expect1);
    rep.add("predicted upper tensor agrees in dimension and weight",
            t2.dim == l2.dim() && hw_of(t2) == expect2);
  }

  // Quotient by the direct sum: dimension and highest weight.
  Subspace sum = sum_subspaces(l1, l2);
  if (dim - sum.dim() > 0) {
    Action q = quotient_action(x, sum);
    const RatFuncU hwq = hw_of(q);
    const RatFuncU expectq =
        RatFuncU::linear_factor(gamma2 + 1) * RatFuncU::linear_factor(-gamma1);
    rep.add("quotient dimension equals g1 - g2",
            q.dim == rat_to_long(gamma1 - gamma2));
    rep.add("quotient highest weight matches the restriction of L(g1, g2+1)",
            hwq == expectq);
  } else {
    rep.add("quotient dimension equals g1 - g2", rat_to_long(gamma1 - gamma2) == 0);
  }
  rep.samples_used = dim;
  return rep;
}

}  // namespace yangrep
