#include "yangrep/analysis.hpp"

#include <algorithm>
#include <map>

namespace yangrep {

namespace {

std::vector<SparseMat> coeff_mats_for(const Action& x, bool upper_only, bool diagonal_only) {
  const int bound = 2 * std::max(1, x.degree_bound);
  const int N = x.N();
  std::vector<SparseMat> out;
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      if (upper_only && !(pi < pj)) continue;
      if (diagonal_only && pi != pj) continue;
      const RatFuncMat& e = x.entry(pi, pj);
      std::vector<SparseMat> per(bound, SparseMat(x.dim, x.dim));
      for (int r = 0; r < x.dim; ++r)
        for (const auto& [c, f] : e.row(r)) {
          auto coeffs = f.series_at_infinity(bound + 1);
          for (int k = 1; k <= bound; ++k)
            if (coeffs[k] != 0) per[k - 1].set(r, c, coeffs[k]);
        }
      for (auto& m : per)
        if (!m.is_zero()) out.push_back(std::move(m));
    }
  return out;
}

DenseVec weight_of_vector(const Action& x, const DenseVec& v) {
  DenseVec w;
  bool found = false;
  for (int i = 0; i < x.dim; ++i) {
    if (v[i] == 0) continue;
    if (!found) {
      w = x.basis_weights[i];
      found = true;
    } else if (!(x.basis_weights[i] == w)) {
      throw Error("vector is not weight-homogeneous");
    }
  }
  if (!found) throw Error("zero vector has no weight");
  return w;
}

// Characteristic polynomial of a small dense matrix (Faddeev-LeVerrier).
PolyU char_poly(const std::vector<DenseVec>& m) {
  const int k = static_cast<int>(m.size());
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = Rat(1);
  std::vector<DenseVec> cur(k, DenseVec(k, Rat(0)));
  for (int i = 0; i < k; ++i) cur[i][i] = Rat(1);  // identity
  for (int j = 1; j <= k; ++j) {
    // cur = M * (previous cur); first step multiplies the identity.
    std::vector<DenseVec> next(k, DenseVec(k, Rat(0)));
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) {
        Rat acc2(0);
        for (int t = 0; t < k; ++t) acc2 += m[r][t] * cur[t][s];
        next[r][s] = acc2;
      }
    Rat tr(0);
    for (int r = 0; r < k; ++r) tr += next[r][r];
    const Rat cj = -tr / j;
    c[k - j] = cj;
    for (int r = 0; r < k; ++r) next[r][r] += cj;
    cur = std::move(next);
  }
  return PolyU(std::move(c));
}

// Matrix of `op` restricted to the subspace (columns are coordinates).
std::vector<DenseVec> op_on_subspace(const SparseMat& op, const Subspace& v) {
  const int k = v.dim();
  std::vector<DenseVec> m(k, DenseVec(k, Rat(0)));
  for (int j = 0; j < k; ++j) {
    auto coords = v.coords(op.apply(v.basis[j]));
    if (!coords) throw Error("subspace not invariant under a diagonal operator");
    for (int i = 0; i < k; ++i) m[i][j] = (*coords)[i];
  }
  return m;
}

DenseVec lift(const Subspace& v, const DenseVec& coords) {
  DenseVec out(v.ambient, Rat(0));
  for (int i = 0; i < v.dim(); ++i)
    if (coords[i] != 0) out = out + scale(v.basis[i], coords[i]);
  return out;
}

}  // namespace

std::vector<Rat> admissible_points(const Action& x, int count, const Rat& start) {
  std::vector<Rat> pts;
  Rat t = start;
  while (static_cast<int>(pts.size()) < count) {
    bool ok = true;
    for (const auto& e : x.entries)
      if (e.has_pole_at(t)) {
        ok = false;
        break;
      }
    if (ok) pts.push_back(t);
    t += 1;
  }
  return pts;
}

Subspace singular_space(const Action& x) {
  auto uppers = coeff_mats_for(x, true, false);
  if (uppers.empty()) return make_subspace(x.dim, [&] {
    std::vector<DenseVec> full;
    for (int i = 0; i < x.dim; ++i) {
      DenseVec e(x.dim, Rat(0));
      e[i] = Rat(1);
      full.push_back(std::move(e));
    }
    return full;
  }());
  auto basis = intersect_kernels(uppers);
  return Subspace{x.dim, std::move(basis)};
}

std::vector<int> hw_component_positions(const Action& x) {
  std::vector<int> pos;
  if (x.family == Family::Y) {
    for (int p = 0; p < x.N(); ++p) pos.push_back(p);
  } else {
    const int n = x.scheme.n();
    if (x.scheme.odd()) pos.push_back(x.scheme.pos_of(0));
    for (int i = 1; i <= n; ++i) pos.push_back(x.scheme.pos_of(i));
  }
  return pos;
}

HighestWeight extract_hw(const Action& x, const DenseVec& v) {
  if (is_zero_vec(v)) throw Error("extract_hw: zero vector");
  const int d = std::max(1, x.degree_bound);
  HighestWeight out;
  int ref = 0;
  while (v[ref] == 0) ++ref;
  const auto pts = admissible_points(x, 2 * d + 3);
  for (int p : hw_component_positions(x)) {
    const RatFuncMat& e = x.entry(p, p);
    std::vector<std::pair<Rat, Rat>> samples;
    for (const auto& t : pts) {
      DenseVec w = e.eval(t).apply(v);
      const Rat ratio = w[ref] / v[ref];
      if (!(w == scale(v, ratio)))
        throw Error("extract_hw: vector is not an eigenvector of a diagonal entry");
      samples.emplace_back(t, ratio);
    }
    RatFuncU f = interpolate_ratfunc(samples, d, d);
    out.factored.push_back(factor_ratfunc(f));
    out.components.push_back(std::move(f));
  }
  return out;
}

Subspace cyclic_span(const Action& x, const DenseVec& v) {
  if (is_zero_vec(v)) throw Error("cyclic_span: zero vector");
  return subspace_closure({v}, coeff_mats_for(x, false, false));
}

bool is_irreducible(const Action& x) {
  Subspace s = singular_space(x);
  if (s.dim() != 1) return false;
  return cyclic_span(x, s.basis[0]).dim() == x.dim;
}

std::vector<Subspace> singular_eigenspaces(const Action& x) {
  Subspace s = singular_space(x);
  // Split by weight first: the reduced kernel basis is weight-homogeneous.
  std::map<DenseVec, std::vector<DenseVec>> by_weight;
  for (const auto& b : s.basis) by_weight[weight_of_vector(x, b)].push_back(b);
  std::vector<Subspace> blocks;
  for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it)
    blocks.push_back(make_subspace(x.dim, it->second));

  for (const auto& op : coeff_mats_for(x, false, true)) {
    std::vector<Subspace> next;
    for (const auto& v : blocks) {
      if (v.dim() == 1) {
        next.push_back(v);
        continue;
      }
      auto m = op_on_subspace(op, v);
      auto [roots, rest] = char_poly(m).rational_roots();
      if (rest.degree() > 0)
        throw Error("singular space splitting met a non-rational eigenvalue");
      for (const auto& [lam, mult] : roots) {
        (void)mult;
        // True eigenspace of m for lam, lifted back to the ambient space.
        SparseMat shifted(v.dim(), v.dim());
        for (int r = 0; r < v.dim(); ++r)
          for (int c = 0; c < v.dim(); ++c) {
            Rat val = m[r][c] - (r == c ? lam : Rat(0));
            if (val != 0) shifted.set(r, c, val);
          }
        auto ker = kernel(shifted);
        if (ker.empty()) continue;
        std::vector<DenseVec> lifted;
        for (const auto& kv : ker) lifted.push_back(lift(v, kv));
        next.push_back(make_subspace(x.dim, std::move(lifted)));
      }
    }
    blocks = std::move(next);
  }
  // The highest line is extremal in the root order. For Y(N) the raising
  // operators raise earlier weight coordinates (lexicographically largest
  // weight wins); for the twisted families they lower the coordinate sum,
  // so the highest line has the smallest sum.
  auto key_less = [&](const Subspace& a, const Subspace& b) {
    const DenseVec wa = weight_of_vector(x, a.basis[0]);
    const DenseVec wb = weight_of_vector(x, b.basis[0]);
    if (x.family == Family::Y) return wa > wb;
    Rat sa(0), sb(0);
    for (const auto& c : wa) sa += c;
    for (const auto& c : wb) sb += c;
    if (sa != sb) return sa < sb;
    return wa > wb;
  };
  std::sort(blocks.begin(), blocks.end(), key_less);
  return blocks;
}

Action restrict_action(const Action& x, const Subspace& w) {
  const int m = w.dim();
  SparseMat proj(m, x.dim);  // coordinate extraction at pivot columns
  auto piv = w.pivots();
  for (int k = 0; k < m; ++k) proj.set(k, piv[k], Rat(1));
  SparseMat incl(x.dim, m);
  for (int k = 0; k < m; ++k)
    for (int r = 0; r < x.dim; ++r)
      if (w.basis[k][r] != 0) incl.set(r, k, w.basis[k][r]);
  Action out;
  out.family = x.family;
  out.scheme = x.scheme;
  out.dim = m;
  out.degree_bound = x.degree_bound;
  out.entries.reserve(x.entries.size());
  for (const auto& e : x.entries) out.entries.push_back(e.conjugate(proj, incl));
  out.basis_weights.reserve(m);
  for (int k = 0; k < m; ++k) out.basis_weights.push_back(weight_of_vector(x, w.basis[k]));
  return out;
}

Action quotient_action(const Action& x, const Subspace& k, SparseMat* quot_map) {
  const int m = x.dim - k.dim();
  auto piv = k.pivots();
  std::vector<bool> is_piv(x.dim, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> rep;  // coordinates representing the quotient
  for (int i = 0; i < x.dim; ++i)
    if (!is_piv[i]) rep.push_back(i);
  // Reduce-mod-K matrix followed by coordinate selection.
  SparseMat reduce(x.dim, x.dim);
  for (int i = 0; i < x.dim; ++i) reduce.set(i, i, Rat(1));
  for (int j = 0; j < k.dim(); ++j)
    for (int r = 0; r < x.dim; ++r)
      if (k.basis[j][r] != 0) reduce.add_at(r, piv[j], -k.basis[j][r]);
  SparseMat select(m, x.dim);
  for (int i = 0; i < m; ++i) select.set(i, rep[i], Rat(1));
  SparseMat qmap = select * reduce;
  SparseMat lift_mat(x.dim, m);
  for (int i = 0; i < m; ++i) lift_mat.set(rep[i], i, Rat(1));
  Action out;
  out.family = x.family;
  out.scheme = x.scheme;
  out.dim = m;
  out.degree_bound = x.degree_bound;
  out.entries.reserve(x.entries.size());
  for (const auto& e : x.entries) out.entries.push_back(e.conjugate(qmap, lift_mat));
  out.basis_weights.reserve(m);
  for (int i = 0; i < m; ++i) out.basis_weights.push_back(x.basis_weights[rep[i]]);
  if (quot_map) *quot_map = std::move(qmap);
  return out;
}

std::pair<Action, int> irreducible_quotient(const Action& x, const DenseVec& xi) {
  {
    Subspace s = singular_space(x);
    if (!s.contains(xi)) throw Error("irreducible_quotient: vector is not singular");
  }
  Action cur = x;
  DenseVec v = xi;
  int guard = 0;
  while (true) {
    if (++guard > x.dim + 2) throw Error("irreducible_quotient failed to converge");
    Subspace w = cyclic_span(cur, v);
    if (w.dim() < cur.dim) {
      auto coords = w.coords(v);
      cur = restrict_action(cur, w);
      v = *coords;
    }
    if (is_irreducible(cur)) return {cur, cur.dim};
    Subspace bad{cur.dim, {}};
    for (const auto& block : singular_eigenspaces(cur)) {
      for (const auto& cand : block.basis) {
        // Skip candidates proportional to v.
        std::vector<DenseVec> pair{v, cand};
        rref(pair);
        if (pair.size() < 2) continue;
        Subspace span = cyclic_span(cur, cand);
        if (!span.contains(v)) bad = sum_subspaces(bad, span);
      }
    }
    if (bad.dim() == 0)
      throw Error("irreducible_quotient: no removable submodule found (internal error)");
    SparseMat qmap;
    Action next = quotient_action(cur, bad, &qmap);
    v = qmap.apply(v);
    cur = std::move(next);
  }
}

std::vector<std::pair<DenseVec, int>> weight_spaces(const Action& x) {
  std::map<DenseVec, int> hist;
  for (const auto& w : x.basis_weights) ++hist[w];
  return {hist.begin(), hist.end()};
}

AnalysisReport analyze(const Action& x) {
  AnalysisReport rep;
  rep.coefficient_bound = 2 * std::max(1, x.degree_bound);
  Subspace s = singular_space(x);
  rep.singular_dim = s.dim();
  auto blocks = singular_eigenspaces(x);
  if (blocks.empty()) throw Error("no singular eigenvector found");
  const DenseVec& hwv = blocks[0].basis[0];
  rep.hw = extract_hw(x, hwv);
  rep.irreducible = rep.singular_dim == 1 && cyclic_span(x, hwv).dim() == x.dim;
  rep.quotient_dim = rep.irreducible ? x.dim : irreducible_quotient(x, hwv).second;
  rep.weight_multiplicities = weight_spaces(x);
  return rep;
}

}  // namespace yangrep
