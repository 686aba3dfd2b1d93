#include "yangrep/twisted.hpp"

namespace yangrep {

namespace {

/// 1 / (2u) as a rational function.
RatFuncU half_u_inv() { return RatFuncU(PolyU::constant(Rat(1) / 2), PolyU({Rat(0), Rat(1)})); }

int theta_of(Family fam, int i, int j) { return theta(twisted_algebra(fam), i, j); }

void require_symmetric(const Action& x, const char* what) {
  if (!x.scheme.symmetric) throw Error(std::string(what) + " requires the symmetric index scheme");
}

}  // namespace

bool symmetry_relation_holds(const Action& x) {
  if (!is_twisted(x.family)) throw Error("symmetry relation applies to twisted actions");
  const int N = x.N();
  const int sgn = x.family == Family::YPlus ? 1 : -1;
  const RatFuncU h = half_u_inv();
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      const int i = x.scheme.index_at(pi), j = x.scheme.index_at(pj);
      const RatFuncMat lhs =
          x.entry(x.scheme.pos_of(-j), x.scheme.pos_of(-i)).negate_u().scaled(
              RatFuncU(Rat(theta_of(x.family, i, j))));
      const RatFuncMat& s = x.entry(pi, pj);
      RatFuncMat delta = (s - s.negate_u()).scaled(h);
      const RatFuncMat rhs = sgn > 0 ? s + delta : s - delta;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Action restrict_S(const Action& x, Family family) {
  if (x.family != Family::Y) throw Error("restrict_S applies to Y(N) actions");
  require_symmetric(x, "restrict_S");
  if (!is_twisted(family)) throw Error("restrict_S: target must be a twisted family");
  if (family == Family::YMinus && x.N() % 2 == 1)
    throw Error("the symplectic family needs even N");
  const int N = x.N();
  Action out;
  out.family = family;
  out.scheme = x.scheme;
  out.dim = x.dim;
  out.entries.assign(N * N, RatFuncMat(x.dim, x.dim));
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      const int i = x.scheme.index_at(pi), j = x.scheme.index_at(pj);
      RatFuncMat sum(x.dim, x.dim);
      for (int pa = 0; pa < N; ++pa) {
        const int a = x.scheme.index_at(pa);
        const RatFuncMat prod =
            x.entry(pi, pa) * x.entry(x.scheme.pos_of(-j), x.scheme.pos_of(-a)).negate_u();
        sum = sum + prod.scaled(RatFuncU(Rat(theta_of(family, a, j))));
      }
      out.entry(pi, pj) = std::move(sum);
    }
  out.degree_bound = 2 * x.degree_bound;
  const int n = N / 2;
  out.basis_weights.reserve(x.dim);
  for (const auto& lw : x.basis_weights) {
    DenseVec mu(n, Rat(0));
    for (int i = 1; i <= n; ++i)
      mu[i - 1] = lw[x.scheme.pos_of(i)] - lw[x.scheme.pos_of(-i)];
    out.basis_weights.push_back(std::move(mu));
  }
  out.underlying = std::make_shared<Action>(x);
  out.provenance = x.provenance;
  if (!symmetry_relation_holds(out))
    throw Error("symmetry relation failed for a restricted action (internal error)");
  return out;
}

Action twisted_eval(const LieModule& m, Family family, ExprPtr provenance) {
  if (!is_twisted(family)) throw Error("twisted_eval: twisted family required");
  if (m.algebra != twisted_algebra(family))
    throw Error("twisted_eval: module algebra does not match the family");
  const int N = m.N;
  Action out;
  out.family = family;
  out.scheme = symmetric_scheme(N);
  out.dim = m.dim;
  const Rat half = family == Family::YPlus ? Rat(1) / 2 : Rat(-1) / 2;
  // 1 / (u +- 1/2)
  const RatFuncU pole(PolyU::one(), PolyU({half, Rat(1)}));
  out.entries.reserve(N * N);
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      RatFuncMat e = RatFuncMat::from_sparse(m.gen(pi, pj)).scaled(pole);
      if (pi == pj)
        for (int d = 0; d < m.dim; ++d) e.add_at(d, d, RatFuncU::one());
      out.entries.push_back(std::move(e));
    }
  out.degree_bound = 1;
  out.basis_weights = m.weights;
  out.provenance = provenance ? provenance : expr_twisted_eval(m.weights[m.hw_index]);
  if (!symmetry_relation_holds(out))
    throw Error("symmetry relation failed for a twisted evaluation (internal error)");
  return out;
}

Action onedim_plus(const Rat& gamma) {
  Action out;
  out.family = Family::YPlus;
  out.scheme = symmetric_scheme(2);
  out.dim = 1;
  const RatFuncU s11(PolyU::linear(gamma), PolyU::linear(Rat(1) / 2));
  // Determined by the symmetry relation:
  // s_{-1,-1}(u) = g(-u) with g(u) = s11(u) + (s11(u) - s11(-u)) / (2u).
  const RatFuncU g = s11 + (s11 - s11.negate_u()) * half_u_inv();
  const RatFuncU smm = g.negate_u();
  out.entries.assign(4, RatFuncMat(1, 1));
  RatFuncMat m00(1, 1), m11(1, 1);
  m00.set(0, 0, smm);
  m11.set(0, 0, s11);
  out.entry(0, 0) = std::move(m00);
  out.entry(1, 1) = std::move(m11);
  out.degree_bound = 1;
  out.basis_weights = {{gamma - Rat(1) / 2}};
  out.provenance = expr_onedim(gamma);
  if (gamma == Rat(1) / 2) {
    // Trivial representation, the restriction of the trivial Y(2) action.
    LieModule trivial = build_gl2(Rat(0), Rat(0));
    out.underlying =
        std::make_shared<Action>(eval_module(trivial, symmetric_scheme(2)));
  }
  if (!symmetry_relation_holds(out))
    throw Error("symmetry relation failed for a one-dimensional module (internal error)");
  return out;
}

Action tensor_mixed(const Action& left, const Action& right) {
  if (left.family != Family::Y) throw Error("tensor_mixed: left factor must be a Y(N) action");
  if (!is_twisted(right.family)) throw Error("tensor_mixed: right factor must be twisted");
  require_symmetric(left, "tensor_mixed");
  if (left.N() != right.N()) throw Error("tensor_mixed: mismatched N");
  const int N = left.N();
  const Family fam = right.family;
  Action out;
  out.family = fam;
  out.scheme = left.scheme;
  out.dim = left.dim * right.dim;
  out.entries.assign(N * N, RatFuncMat(out.dim, out.dim));
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      const int j = left.scheme.index_at(pj);
      RatFuncMat sum(out.dim, out.dim);
      for (int pa = 0; pa < N; ++pa)
        for (int pb = 0; pb < N; ++pb) {
          const int b = left.scheme.index_at(pb);
          if (right.entry(pa, pb).is_zero()) continue;
          const RatFuncMat tprod =
              left.entry(pi, pa) *
              left.entry(left.scheme.pos_of(-j), left.scheme.pos_of(-b)).negate_u();
          sum = sum + RatFuncMat::kron(tprod, right.entry(pa, pb))
                          .scaled(RatFuncU(Rat(theta_of(fam, b, j))));
        }
      out.entry(pi, pj) = std::move(sum);
    }
  out.degree_bound = 2 * left.degree_bound + right.degree_bound;
  const int n = N / 2;
  out.basis_weights.reserve(out.dim);
  for (const auto& lw : left.basis_weights)
    for (const auto& rw : right.basis_weights) {
      DenseVec mu(n, Rat(0));
      for (int i = 1; i <= n; ++i)
        mu[i - 1] = lw[left.scheme.pos_of(i)] - lw[left.scheme.pos_of(-i)] + rw[i - 1];
      out.basis_weights.push_back(std::move(mu));
    }
  if (right.underlying)
    out.underlying = std::make_shared<Action>(tensor_action({left, *right.underlying}));
  out.provenance = expr_tensor_mixed(left.provenance, right.provenance);
  if (!symmetry_relation_holds(out))
    throw Error("symmetry relation failed for a mixed tensor (internal error)");
  return out;
}

RatFuncU gamma_factor(Family family, int N) {
  if (family == Family::YPlus) return RatFuncU::one();
  if (family == Family::YMinus)
    return RatFuncU(PolyU({Rat(1) / 2, Rat(1)}), PolyU({Rat(1 - N) / 2, Rat(1)}));
  throw Error("gamma_factor: twisted family required");
}

SparseMat sdet_at(const Action& x, const Rat& u0) {
  if (!is_twisted(x.family)) throw Error("sdet applies to twisted actions");
  if (!x.underlying) throw Error("sdet: no underlying Y(N) action recorded");
  const int N = x.N();
  const Rat g = gamma_factor(x.family, N).eval_or_throw(u0);
  const SparseMat a = qdet_at(*x.underlying, u0);
  const SparseMat b = qdet_at(*x.underlying, -u0 + N - 1);
  return (a * b) * g;
}

Rat sdet_scalar(const Action& x, const Rat& u0) {
  Rat c;
  if (!sdet_at(x, u0).is_scalar(&c))
    throw Error("determinant does not act as a scalar at u0 = " + rat_str(u0));
  return c;
}

Action sharp_conjugate(const Action& x) {
  if (x.family != Family::YPlus) throw Error("sharp conjugation needs the orthogonal family");
  if (x.N() % 2 == 1) throw Error("sharp conjugation needs even N");
  const int N = x.N();
  auto swap_idx = [](int i) { return (i == 1 || i == -1) ? -i : i; };
  Action out(x);
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      const int i = x.scheme.index_at(pi), j = x.scheme.index_at(pj);
      out.entry(pi, pj) =
          x.entry(x.scheme.pos_of(swap_idx(i)), x.scheme.pos_of(swap_idx(j)));
    }
  for (auto& w : out.basis_weights) w[0] = -w[0];
  out.underlying = nullptr;
  out.provenance = nullptr;
  return out;
}

SparseMat scomatrix3_at(const Action& x, int idx_i, int idx_j, const Rat& u0) {
  if (x.family != Family::YPlus || x.N() != 3)
    throw Error("the explicit comatrix entries are for the orthogonal family, N = 3");
  auto S = [&](int i, int j, const Rat& point) {
    const RatFuncMat& e = x.entry(x.scheme.pos_of(i), x.scheme.pos_of(j));
    if (e.has_pole_at(point)) throw Error("comatrix: evaluation point hits a pole");
    return e.eval(point);
  };
  if (idx_i == 0 && idx_j == 0)
    return S(1, 1, -u0) * S(1, 1, u0 - 1) - S(1, -1, -u0) * S(-1, 1, u0 - 1);
  if (idx_i == -1 && idx_j == 0)
    return S(0, -1, -u0) * S(-1, 1, u0 - 1) - S(0, 1, -u0) * S(1, 1, u0 - 1);
  if (idx_i == 1 && idx_j == 1)
    return S(1, 1, -u0) * S(0, 0, u0 - 1) - S(1, 0, -u0) * S(-1, 0, u0 - 1);
  throw Error("comatrix entry not among (0,0), (-1,0), (1,1)");
}

std::map<std::pair<int, int>, SparseMat> scomatrix_solve_at(const Action& x, const Rat& u0) {
  if (!is_twisted(x.family)) throw Error("comatrix solve applies to twisted actions");
  const int N = x.N(), d = x.dim;
  const SparseMat det = sdet_at(x, u0);
  const Rat point = u0 - N + 1;
  // Dense augmented [A | I] for A[(k,w),(j,z)] = s_{kj}(point)[w,z].
  const int big = N * d;
  std::vector<DenseVec> rows(big, DenseVec(2 * big, Rat(0)));
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < N; ++j) {
      const RatFuncMat& e = x.entry(k, j);
      if (e.has_pole_at(point)) throw Error("comatrix solve: pole at u0 - N + 1");
      const SparseMat m = e.eval(point);
      for (int w = 0; w < d; ++w)
        for (const auto& [z, v] : m.row(w)) rows[k * d + w][j * d + z] = v;
    }
  for (int i = 0; i < big; ++i) rows[i][big + i] = Rat(1);
  rref(rows);
  if (static_cast<int>(rows.size()) != big)
    throw Error("comatrix solve: S(u0 - N + 1) is singular at this point");
  for (int i = 0; i < big; ++i)
    for (int c = 0; c < big; ++c)
      if ((rows[i][c] != 0) != (c == i))
        throw Error("comatrix solve: S(u0 - N + 1) is singular at this point");
  std::map<std::pair<int, int>, SparseMat> out;
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      SparseMat binv(d, d);
      for (int w = 0; w < d; ++w)
        for (int z = 0; z < d; ++z) {
          const Rat& v = rows[pi * d + w][big + pj * d + z];
          if (v != 0) binv.set(w, z, v);
        }
      out[{x.scheme.index_at(pi), x.scheme.index_at(pj)}] = det * binv;
    }
  return out;
}

}  // namespace yangrep
