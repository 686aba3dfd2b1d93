#include "yangrep/classify.hpp"

#include <algorithm>
#include <functional>

#include "yangrep/yangian.hpp"

namespace yangrep {

namespace {

Rat rat_floor(const Rat& x) {
  BigInt n = rat_num(x), d = rat_den(x);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return Rat(q);
}

/// Coset representative of c in Q / Z, in [0, 1).
Rat coset_rep(const Rat& c) { return c - rat_floor(c); }

using SignedMult = std::map<Rat, int>;

/// Signed root multiplicities of a factored series viewed as a rational
/// function: prod (u+c)^{e(c)} (the u-power balances out to c = 0).
SignedMult signed_mults(const FactoredSeries& f) {
  SignedMult h;
  int total = 0;
  for (const auto& [c, e] : f.factors) {
    h[c] += e;
    total += e;
  }
  h[Rat(0)] -= total;
  for (auto it = h.begin(); it != h.end();)
    it = it->second == 0 ? h.erase(it) : std::next(it);
  return h;
}

/// Solves h(c) = m(c-1) - m(c) for a nonnegative finitely supported m
/// (telescoping within each Z-coset); nullopt when impossible.
std::optional<RootMultiset> telescope(const SignedMult& h) {
  std::map<Rat, std::vector<std::pair<Rat, int>>> cosets;
  for (const auto& [c, e] : h) cosets[coset_rep(c)].emplace_back(c, e);
  RootMultiset m;
  for (auto& [rep, items] : cosets) {
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    int sum = 0;
    for (const auto& [c, e] : items) sum += e;
    if (sum != 0) return std::nullopt;
    // Walk downward: m(c) = m(c+1) + h(c+1).
    Rat c = items.front().first - 1;
    const Rat stop = items.back().first;
    int run = items.front().second;
    std::size_t next = 1;
    while (c >= stop) {
      if (run < 0) return std::nullopt;
      if (run > 0) m.add(c, run);
      if (next < items.size() && items[next].first == c) {
        run += items[next].second;
        ++next;
      }
      c -= 1;
    }
    if (run != 0) return std::nullopt;  // defensive; sum == 0 already implies this
  }
  return m;
}

/// Verifies ratio == P(u+1)/P(u) exactly.
bool verify_arrow(const RatFuncU& ratio, const RootMultiset& p) {
  const PolyU pp = p.to_poly();
  return ratio == RatFuncU(pp.shift(Rat(1)), pp);
}

std::optional<RootMultiset> arrow_of_ratio(const FactoredSeries& ratio) {
  auto m = telescope(signed_mults(ratio));
  if (!m) return std::nullopt;
  if (!verify_arrow(factored_to_ratfunc(ratio), *m))
    throw Error("arrow witness failed the polynomial identity (internal error)");
  return m;
}

/// (2u-1)/(2u+1) as extra linear factors (u-1/2)/(u+1/2).
FactoredSeries contraction_factor() {
  FactoredSeries f;
  f.mul_factor(Rat(-1) / 2, 1);
  f.mul_factor(Rat(1) / 2, -1);
  return f;
}

std::optional<RootMultiset> sym_arrow_of_ratio(const FactoredSeries& ratio) {
  auto m = arrow_of_ratio(ratio);
  if (!m || !m->center_symmetric()) return std::nullopt;
  return m;
}

}  // namespace

StringAB::StringAB(Rat a, Rat b) : alpha(std::move(a)), beta(std::move(b)) {
  if (!is_nonneg_integer(alpha - beta))
    throw Error("string requires alpha - beta to be a nonnegative integer");
}

int StringAB::length() const { return static_cast<int>(rat_to_long(alpha - beta)); }

bool StringAB::contains(const Rat& x) const {
  return !empty() && is_integer(x - beta) && x >= beta && x <= alpha - 1;
}

bool StringAB::subset_of(const StringAB& o) const {
  if (empty()) return true;
  if (o.empty()) return false;
  if (!is_integer(beta - o.beta)) return false;
  return beta >= o.beta && alpha <= o.alpha;
}

bool general_position(const StringAB& s1, const StringAB& s2) {
  if (s1.subset_of(s2) || s2.subset_of(s1)) return true;
  // Neither empty here. Union is a string iff same coset and the intervals
  // overlap or are adjacent.
  if (!is_integer(s1.beta - s2.beta)) return true;
  const Rat lo = std::max(s1.beta, s2.beta);
  const Rat hi = std::min(s1.alpha, s2.alpha) - 1;
  const bool union_is_string = lo <= hi + 1;
  return !union_is_string;
}

int RootMultiset::degree() const {
  int d = 0;
  for (const auto& [c, m] : mult) d += m;
  return d;
}

void RootMultiset::add(const Rat& c, int m) {
  if (m == 0) return;
  auto it = mult.find(c);
  if (it == mult.end()) {
    if (m < 0) throw Error("negative root multiplicity");
    mult[c] = m;
  } else {
    it->second += m;
    if (it->second < 0) throw Error("negative root multiplicity");
    if (it->second == 0) mult.erase(it);
  }
}

PolyU RootMultiset::to_poly() const {
  PolyU p = PolyU::one();
  for (const auto& [c, m] : mult)
    for (int i = 0; i < m; ++i) p = p * PolyU::linear(c);
  return p;
}

bool RootMultiset::center_symmetric() const {
  if (degree() % 2 != 0) return false;  // odd degree flips sign under u -> -u+1
  for (const auto& [c, m] : mult) {
    auto it = mult.find(Rat(-1) - c);
    if (it == mult.end() || it->second != m) return false;
  }
  return true;
}

Rat RootMultiset::eval(const Rat& u) const { return to_poly().eval(u); }

RatFuncU ratio_of(const FactoredSeries& num, const FactoredSeries& den) {
  return factored_to_ratfunc(num * den.inverse());
}

bool factored_is_even(const FactoredSeries& f) {
  const RatFuncU g = factored_to_ratfunc(f);
  return g == g.negate_u();
}

bool even_equivalent(const FactoredSeries& mu, const FactoredSeries& nu) {
  const RatFuncU m = factored_to_ratfunc(mu), n = factored_to_ratfunc(nu);
  return m * n.negate_u() == m.negate_u() * n;
}

std::optional<RootMultiset> arrow(const FactoredSeries& l1, const FactoredSeries& l2) {
  return arrow_of_ratio(l1 * l2.inverse());
}

std::optional<RootMultiset> sym_arrow(const FactoredSeries& mu) {
  return sym_arrow_of_ratio(mu.negate_u() * mu.inverse());
}

std::optional<std::pair<RootMultiset, Rat>> gamma_solver(const FactoredSeries& mu) {
  // Absorb (2u+1)/(2u-1) into the ratio first.
  FactoredSeries base = mu.negate_u() * mu.inverse() * contraction_factor();
  SignedMult h = signed_mults(base);
  // Candidate gammas: 0, and every point of the integer hull of each coset
  // of the support, with both signs.
  std::vector<Rat> cands{Rat(0)};
  {
    std::map<Rat, std::pair<Rat, Rat>> hulls;
    for (const auto& [c, e] : h) {
      auto rep = coset_rep(c);
      auto it = hulls.find(rep);
      if (it == hulls.end())
        hulls[rep] = {c, c};
      else {
        it->second.first = std::min(it->second.first, c);
        it->second.second = std::max(it->second.second, c);
      }
    }
    for (const auto& [rep, hull] : hulls)
      for (Rat c = hull.first; c <= hull.second; c += 1) {
        cands.push_back(c);
        cands.push_back(-c);
      }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  std::optional<std::pair<RootMultiset, Rat>> found;
  const RatFuncU target = ratio_of(mu.negate_u(), mu);
  for (const auto& g : cands) {
    SignedMult hp = h;
    hp[g] -= 1;
    hp[-g] += 1;
    for (auto it = hp.begin(); it != hp.end();)
      it = it->second == 0 ? hp.erase(it) : std::next(it);
    auto m = telescope(hp);
    if (!m || !m->center_symmetric()) continue;
    if (m->mult.count(g)) continue;  // P(-gamma) must stay nonzero
    // Verify the full identity.
    const PolyU pp = m->to_poly();
    const RatFuncU lhs = target;
    const RatFuncU rhs = RatFuncU(pp.shift(Rat(1)) * PolyU::linear(g) * PolyU({Rat(1) / 2, Rat(1)}),
                                  pp * PolyU::linear(-g) * PolyU({Rat(-1) / 2, Rat(1)}));
    if (!(lhs == rhs)) continue;
    if (found && !(found->first == *m && found->second == g))
      throw Error("gamma solver found two distinct valid pairs (uniqueness violated)");
    found = {{*m, g}};
  }
  return found;
}

FactoredSeries sharp_weight(const std::vector<Rat>& gammas) {
  if (gammas.empty() || gammas.size() % 2 == 0)
    throw Error("sharp_weight expects an odd number of parameters");
  const int k = static_cast<int>(gammas.size() / 2);
  for (int i = 0; i < k; ++i)
    if (!is_nonneg_integer(gammas[2 * i] + gammas[2 * i + 1]))
      throw Error("sharp_weight: pair sums must be nonnegative integers");
  // Ordering condition: each front pair realizes the minimal nonnegative
  // integer sum among the remaining entries.
  for (int i = 0; i < k; ++i) {
    const Rat front = gammas[2 * i] + gammas[2 * i + 1];
    for (std::size_t p = 2 * i; p < gammas.size(); ++p)
      for (std::size_t q = p + 1; q < gammas.size(); ++q) {
        const Rat s = gammas[p] + gammas[q];
        if (is_nonneg_integer(s) && s < front)
          throw Error("sharp_weight: ordering condition violated");
      }
  }
  FactoredSeries f;
  for (int j = 0; j < 2 * k; ++j) f.mul_factor(-gammas[j], 1);
  f.mul_factor(gammas.back() + 1, 1);
  f.mul_factor(Rat(1) / 2, -1);
  return f;
}

ReorderResult reorder(ReorderKind kind, const std::vector<Rat>& alphas,
                      const std::vector<Rat>& betas) {
  ReorderResult out;
  if (kind == ReorderKind::Difference) {
    if (alphas.size() != betas.size()) throw Error("reorder: length mismatch");
    std::vector<Rat> as = alphas, bs = betas;
    while (!as.empty()) {
      int bp = -1, bq = -1;
      for (std::size_t p = 0; p < as.size(); ++p)
        for (std::size_t q = 0; q < bs.size(); ++q) {
          if (!is_nonneg_integer(as[p] - bs[q])) continue;
          if (bp < 0 || as[p] - bs[q] < as[bp] - bs[bq]) {
            bp = static_cast<int>(p);
            bq = static_cast<int>(q);
          }
        }
      if (bp < 0) {
        out.first.insert(out.first.end(), as.begin(), as.end());
        out.second.insert(out.second.end(), bs.begin(), bs.end());
        break;
      }
      out.first.push_back(as[bp]);
      out.second.push_back(bs[bq]);
      as.erase(as.begin() + bp);
      bs.erase(bs.begin() + bq);
    }
    return out;
  }
  std::vector<Rat> gs = alphas;
  const std::size_t stop = kind == ReorderKind::SumOdd ? 1 : 0;
  while (gs.size() > stop) {
    int bp = -1, bq = -1;
    for (std::size_t p = 0; p < gs.size(); ++p)
      for (std::size_t q = p + 1; q < gs.size(); ++q) {
        if (!is_nonneg_integer(gs[p] + gs[q])) continue;
        if (bp < 0 || gs[p] + gs[q] < gs[bp] + gs[bq]) {
          bp = static_cast<int>(p);
          bq = static_cast<int>(q);
        }
      }
    if (bp < 0) break;
    out.first.push_back(gs[bp]);
    out.first.push_back(gs[bq]);
    gs.erase(gs.begin() + bq);  // q > p, erase later index first
    gs.erase(gs.begin() + bp);
  }
  out.first.insert(out.first.end(), gs.begin(), gs.end());
  return out;
}

ClassificationResult fd_Y(const std::vector<FactoredSeries>& hw) {
  ClassificationResult res;
  res.finite_dim = true;
  for (std::size_t i = 0; i + 1 < hw.size(); ++i) {
    auto p = arrow(hw[i], hw[i + 1]);
    if (!p) {
      res.finite_dim = false;
      res.witnesses.clear();
      return res;
    }
    res.witnesses.push_back(std::move(*p));
  }
  return res;
}

ClassificationResult fd_Yminus(const std::vector<FactoredSeries>& hw) {
  ClassificationResult res;
  if (hw.empty()) throw Error("fd_Yminus: empty highest weight");
  auto p1 = sym_arrow(hw[0]);
  if (!p1) return res;
  res.witnesses.push_back(std::move(*p1));
  for (std::size_t i = 0; i + 1 < hw.size(); ++i) {
    auto p = arrow(hw[i], hw[i + 1]);
    if (!p) {
      res.witnesses.clear();
      return res;
    }
    res.witnesses.push_back(std::move(*p));
  }
  res.finite_dim = true;
  return res;
}

ClassificationResult fd_Yplus_even(const std::vector<FactoredSeries>& hw) {
  ClassificationResult res;
  if (hw.size() < 2) throw Error("fd_Yplus_even needs n >= 2 components");
  auto g = gamma_solver(hw[0]);
  if (!g) return res;  // the sharp transform of mu_1 is not well-defined
  res.gamma = g->second;
  const FactoredSeries& mu1 = hw[0];
  FactoredSeries sharp = mu1;
  sharp.mul_factor(g->second + 1, 1);
  sharp.mul_factor(-g->second, -1);

  auto tail = [&](const FactoredSeries& first) -> std::optional<std::vector<RootMultiset>> {
    std::vector<RootMultiset> ps;
    const FactoredSeries* prev = &first;
    for (std::size_t i = 1; i < hw.size(); ++i) {
      auto p = arrow(*prev, hw[i]);
      if (!p) return std::nullopt;
      ps.push_back(std::move(*p));
      prev = &hw[i];
    }
    return ps;
  };

  struct Branch {
    FactoredSeries head_ratio;
    const FactoredSeries* chain_head;
  };
  const FactoredSeries plain_ratio = mu1.negate_u() * mu1.inverse();
  const FactoredSeries sharp_ratio = sharp.negate_u() * sharp.inverse();
  const std::vector<Branch> branches = {
      {plain_ratio, &mu1},
      {plain_ratio * contraction_factor(), &mu1},
      {sharp_ratio, &sharp},
      {sharp_ratio * contraction_factor(), &sharp},
  };
  for (int b = 0; b < 4; ++b) {
    auto p1 = sym_arrow_of_ratio(branches[b].head_ratio);
    if (!p1) continue;
    auto ps = tail(*branches[b].chain_head);
    if (!ps) continue;
    res.finite_dim = true;
    int eps = b + 1;
    if (eps == 3 && p1->eval(Rat(1) / 2) != 0) eps = 1;
    res.epsilon = eps;
    res.witnesses.push_back(std::move(*p1));
    for (auto& p : *ps) res.witnesses.push_back(std::move(p));
    return res;
  }
  return res;
}

namespace {

bool perfect_matching(const std::vector<std::vector<int>>& adj, int nright) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> match_right(nright, -1);
  std::function<bool(int, std::vector<bool>&)> try_kuhn = [&](int v, std::vector<bool>& used) {
    for (int to : adj[v]) {
      if (used[to]) continue;
      used[to] = true;
      if (match_right[to] < 0 || try_kuhn(match_right[to], used)) {
        match_right[to] = v;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<bool> used(nright, false);
    if (try_kuhn(v, used)) ++matched;
  }
  return matched == n;
}

}  // namespace

ClassificationResult fd_Yplus3(const std::vector<Rat>& alphas, const std::vector<Rat>& betas) {
  if (alphas.size() != betas.size()) throw Error("fd_Yplus3: length mismatch");
  const int k = static_cast<int>(alphas.size());
  ClassificationResult res;
  auto pairs_adj = [&](const std::vector<int>& ai, const std::vector<int>& bi) {
    std::vector<std::vector<int>> adj(ai.size());
    for (std::size_t p = 0; p < ai.size(); ++p)
      for (std::size_t q = 0; q < bi.size(); ++q)
        if (is_nonneg_integer(alphas[ai[p]] - betas[bi[q]])) adj[p].push_back(static_cast<int>(q));
    return adj;
  };
  std::vector<int> all(k);
  for (int i = 0; i < k; ++i) all[i] = i;
  if (perfect_matching(pairs_adj(all, all), k)) {
    res.finite_dim = true;
    res.branch = "integral_pairs";
    return res;
  }
  for (int a = 0; a < k; ++a) {
    if (!is_half_integer(alphas[a]) || alphas[a] < Rat(1) / 2) continue;
    for (int b = 0; b < k; ++b) {
      if (!is_nonneg_integer(-betas[b])) continue;
      std::vector<int> ai, bi;
      for (int i = 0; i < k; ++i) {
        if (i != a) ai.push_back(i);
        if (i != b) bi.push_back(i);
      }
      if (perfect_matching(pairs_adj(ai, bi), k - 1)) {
        res.finite_dim = true;
        res.branch = "half_integral_last";
        return res;
      }
    }
  }
  return res;
}

ClassificationResult fd_Yplus_odd(const FactoredSeries& mu0,
                                  const std::vector<FactoredSeries>& mu) {
  if (!factored_is_even(mu0)) throw Error("fd_Yplus_odd: mu_0 must be an even series");
  if (mu.empty()) throw Error("fd_Yplus_odd: needs at least one further component");
  ClassificationResult res;
  auto chain = [&](const FactoredSeries& head) -> std::optional<std::vector<RootMultiset>> {
    std::vector<RootMultiset> ps;
    auto p = arrow(head, mu[0]);
    if (!p) return std::nullopt;
    ps.push_back(std::move(*p));
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
      auto q = arrow(mu[i], mu[i + 1]);
      if (!q) return std::nullopt;
      ps.push_back(std::move(*q));
    }
    return ps;
  };
  if (auto ps = chain(mu0)) {
    res.finite_dim = true;
    res.epsilon = 1;
    res.witnesses = std::move(*ps);
    return res;
  }
  // 2u/(2u+1) = (1 + 0 u^{-1}) (1 + u^{-1}/2)^{-1}
  FactoredSeries shifted = mu0;
  shifted.mul_factor(Rat(0), 1);
  shifted.mul_factor(Rat(1) / 2, -1);
  if (auto ps = chain(shifted)) {
    res.finite_dim = true;
    res.epsilon = 2;
    res.witnesses = std::move(*ps);
    return res;
  }
  return res;
}

bool crit_strings(StringCriterion variant, const std::vector<std::pair<Rat, Rat>>& pairs,
                  const std::optional<Rat>& gamma) {
  switch (variant) {
    case StringCriterion::TensorPairs: {
      std::vector<StringAB> ss;
      for (const auto& [a, b] : pairs) ss.emplace_back(a, b);
      for (std::size_t i = 0; i < ss.size(); ++i)
        for (std::size_t j = i + 1; j < ss.size(); ++j)
          if (!general_position(ss[i], ss[j])) return false;
      return true;
    }
    case StringCriterion::SymplecticRestriction: {
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
          StringAB s1(pairs[i].second, -pairs[i].first);
          StringAB s2(pairs[j].first, -pairs[j].second);
          if (!general_position(s1, s2)) return false;
        }
      return true;
    }
    case StringCriterion::OrthogonalMixed: {
      if (!gamma) throw Error("crit_strings: the mixed criterion needs gamma");
      if (!crit_strings(StringCriterion::SymplecticRestriction, pairs)) return false;
      for (const auto& [g1, g2] : pairs) {
        if (StringAB(g1, -g2).contains(*gamma)) return false;
        if (StringAB(g2, -g1).contains(*gamma)) return false;
      }
      return true;
    }
  }
  throw Error("unknown string criterion");
}

}  // namespace yangrep
