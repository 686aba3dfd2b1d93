#include "yangrep/lie_module.hpp"

#include <algorithm>
#include <numeric>

#include "yangrep/linalg.hpp"

namespace yangrep {

int IndexScheme::index_at(int pos) const {
  if (pos < 0 || pos >= N) throw Error("index position out of range");
  if (!symmetric) return pos + 1;
  if (odd()) return pos - n();
  return pos < n() ? pos - n() : pos - n() + 1;
}

int IndexScheme::pos_of(int index) const {
  if (!symmetric) {
    if (index < 1 || index > N) throw Error("index out of range");
    return index - 1;
  }
  if (odd()) {
    if (index < -n() || index > n()) throw Error("index out of range");
    return index + n();
  }
  if (index == 0 || index < -n() || index > n()) throw Error("index out of range");
  return index < 0 ? index + n() : index + n() - 1;
}

int IndexScheme::neg_pos(int pos) const {
  if (!symmetric) throw Error("negation undefined for the standard scheme");
  return N - 1 - pos;
}

std::vector<int> IndexScheme::all_indices() const {
  std::vector<int> out(N);
  for (int p = 0; p < N; ++p) out[p] = index_at(p);
  return out;
}

IndexScheme standard_scheme(int N) { return IndexScheme{N, false}; }
IndexScheme symmetric_scheme(int N) { return IndexScheme{N, true}; }

int theta(LieAlgebra fam, int i, int j) {
  switch (fam) {
    case LieAlgebra::O:
      return 1;
    case LieAlgebra::SP:
      return (i < 0 ? -1 : 1) * (j < 0 ? -1 : 1);
    default:
      throw Error("theta undefined for gl");
  }
}

const SparseMat& LieModule::gen(int pos_i, int pos_j) const {
  auto it = gens.find({pos_i, pos_j});
  if (it == gens.end()) throw Error("missing generator matrix");
  return it->second;
}

LieModule build_gl2(const Rat& alpha, const Rat& beta) {
  const Rat diff = alpha - beta;
  if (!is_nonneg_integer(diff))
    throw Error("gl(2) weight (" + rat_str(alpha) + "," + rat_str(beta) +
                ") is not dominant integral");
  const int m = static_cast<int>(rat_to_long(diff));
  const int dim = m + 1;
  LieModule mod;
  mod.algebra = LieAlgebra::GL;
  mod.N = 2;
  mod.dim = dim;
  SparseMat e11(dim, dim), e22(dim, dim), e12(dim, dim), e21(dim, dim);
  for (int r = 0; r <= m; ++r) {
    e11.set(r, r, alpha - r);
    e22.set(r, r, beta + r);
    if (r >= 1) e12.set(r - 1, r, Rat(r) * (diff - r + 1));
    if (r < m) e21.set(r + 1, r, Rat(1));
    mod.weights.push_back({alpha - r, beta + r});
  }
  mod.gens[{0, 0}] = std::move(e11);
  mod.gens[{0, 1}] = std::move(e12);
  mod.gens[{1, 0}] = std::move(e21);
  mod.gens[{1, 1}] = std::move(e22);
  mod.hw_index = 0;
  return mod;
}

Rat weyl_dim_gl(const std::vector<Rat>& lambda) {
  const int N = static_cast<int>(lambda.size());
  Rat d(1);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      d *= (lambda[i] - lambda[j] + (j - i)) / Rat(j - i);
  return d;
}

Rat weyl_dim_g(LieAlgebra alg, int N, const std::vector<Rat>& mu) {
  const int n = N / 2;
  if (static_cast<int>(mu.size()) != n) throw Error("weyl_dim_g: weight length mismatch");
  if (alg == LieAlgebra::O && N == 2) return Rat(1);
  // Standard-convention weight: lambda_i = -mu_{n+1-i}, must be dominant.
  std::vector<Rat> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = -mu[n - 1 - i];
  for (int i = 0; i + 1 < n; ++i)
    if (lam[i] < lam[i + 1]) throw Error("weyl_dim_g: unsorted weight");
  std::vector<Rat> l(n), m(n);
  const bool odd = N % 2 == 1;
  for (int i = 0; i < n; ++i) {
    Rat rho = alg == LieAlgebra::SP ? Rat(n - i) : (odd ? Rat(2 * (n - i) - 1) / 2 : Rat(n - i - 1));
    l[i] = lam[i] + rho;
    m[i] = rho;
  }
  Rat d(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= (l[i] * l[i] - l[j] * l[j]) / (m[i] * m[i] - m[j] * m[j]);
  if (alg == LieAlgebra::SP || odd)
    for (int i = 0; i < n; ++i) d *= l[i] / m[i];
  return d;
}

namespace {

// E_{pq} acting on the d-fold tensor power of the vector representation.
SparseMat tensor_power_gen(int N, int d, int p, int q) {
  int dim = 1;
  for (int s = 0; s < d; ++s) dim *= N;
  SparseMat out(dim, dim);
  for (int word = 0; word < dim; ++word) {
    int stride = dim / N;
    for (int s = 0; s < d; ++s) {
      const int digit = (word / stride) % N;
      if (digit == q) out.add_at(word + (p - q) * stride, word, Rat(1));
      stride /= N;
    }
  }
  return out;
}

DenseVec young_column_vector(int N, int d, const std::vector<int>& heights) {
  int dim = 1;
  for (int s = 0; s < d; ++s) dim *= N;
  DenseVec v(dim, Rat(0));
  // Per column of height h: sum over permutations of (0..h-1) with sign,
  // placed in consecutive slots; combined multiplicatively across columns.
  struct Term {
    long index;
    int sign;
  };
  std::vector<Term> terms{{0, 1}};
  int slot = 0;
  for (int h : heights) {
    std::vector<int> perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Term> col;
    do {
      int sign = 1;
      for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
          if (perm[i] > perm[j]) sign = -sign;
      long idx = 0;
      for (int i = 0; i < h; ++i) idx = idx * N + perm[i];
      col.push_back({idx, sign});
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Term> next;
    long col_width = 1;
    for (int i = 0; i < h; ++i) col_width *= N;
    for (const auto& t : terms)
      for (const auto& c : col) next.push_back({t.index * col_width + c.index, t.sign * c.sign});
    terms = std::move(next);
    slot += h;
  }
  (void)slot;
  long tail = 1;
  for (int s = std::accumulate(heights.begin(), heights.end(), 0); s < d; ++s) tail *= N;
  for (const auto& t : terms) v[t.index * tail] += Rat(t.sign);
  return v;
}

}  // namespace

LieModule build_glN(const std::vector<Rat>& lambda) {
  const int N = static_cast<int>(lambda.size());
  if (N < 1) throw Error("empty weight");
  for (int i = 0; i + 1 < N; ++i)
    if (!is_nonneg_integer(lambda[i] - lambda[i + 1]))
      throw Error("gl(N) weight is not dominant integral");
  const Rat c = lambda[N - 1];
  std::vector<int> part(N);
  int d = 0;
  for (int i = 0; i < N; ++i) {
    part[i] = static_cast<int>(rat_to_long(lambda[i] - c));
    d += part[i];
  }
  LieModule mod;
  mod.algebra = LieAlgebra::GL;
  mod.N = N;
  if (d == 0) {
    mod.dim = 1;
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        SparseMat m(1, 1);
        if (p == q) m.set(0, 0, c);
        mod.gens[{p, q}] = std::move(m);
      }
    mod.weights.push_back(DenseVec(lambda));
    mod.hw_index = 0;
    return mod;
  }

  std::vector<int> heights;
  for (int col = 1; col <= part[0]; ++col) {
    int h = 0;
    for (int i = 0; i < N; ++i)
      if (part[i] >= col) ++h;
    heights.push_back(h);
  }
  std::vector<SparseMat> gens_big;
  gens_big.reserve(N * N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) gens_big.push_back(tensor_power_gen(N, d, p, q));
  DenseVec seed = young_column_vector(N, d, heights);
  Subspace span = subspace_closure({seed}, gens_big);

  const int dim = span.dim();
  const Rat expect = weyl_dim_gl(lambda);
  if (Rat(dim) != expect)
    throw Error("gl(N) module dimension " + std::to_string(dim) +
                " does not match the Weyl formula value " + rat_str(expect));

  mod.dim = dim;
  // Restrict each generator to the span and add the scalar shift.
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) {
      const SparseMat& big = gens_big[p * N + q];
      SparseMat small(dim, dim);
      for (int k = 0; k < dim; ++k) {
        auto coords = span.coords(big.apply(span.basis[k]));
        if (!coords) throw Error("closure not invariant (internal error)");
        for (int r = 0; r < dim; ++r)
          if ((*coords)[r] != 0) small.set(r, k, (*coords)[r]);
      }
      if (p == q)
        for (int i = 0; i < dim; ++i) small.add_at(i, i, c);
      mod.gens[{p, q}] = std::move(small);
    }
  // Weights are read from the diagonal generators, which act diagonally on
  // the weight-homogeneous reduced basis.
  mod.weights.assign(dim, DenseVec(N, Rat(0)));
  for (int p = 0; p < N; ++p) {
    const SparseMat& epp = mod.gens.at({p, p});
    for (int k = 0; k < dim; ++k) {
      for (const auto& [cix, v] : epp.row(k))
        if (cix != k) throw Error("diagonal generator not diagonal (internal error)");
      mod.weights[k][p] = epp.get(k, k);
    }
  }
  mod.hw_index = -1;
  for (int k = 0; k < dim; ++k)
    if (mod.weights[k] == lambda) {
      mod.hw_index = k;
      break;
    }
  if (mod.hw_index < 0) throw Error("highest weight vector not found (internal error)");
  return mod;
}

namespace {

// Fermionic mode operators on subsets of {1..n} encoded as bitmasks.
SparseMat fock_creator(int n, int mode) {
  const int dim = 1 << n;
  SparseMat out(dim, dim);
  for (int s = 0; s < dim; ++s) {
    if (s & (1 << (mode - 1))) continue;
    int below = 0;
    for (int j = 1; j < mode; ++j)
      if (s & (1 << (j - 1))) ++below;
    out.set(s | (1 << (mode - 1)), s, Rat(below % 2 == 0 ? 1 : -1));
  }
  return out;
}

SparseMat fock_annihilator(int n, int mode) {
  const int dim = 1 << n;
  SparseMat out(dim, dim);
  for (int s = 0; s < dim; ++s) {
    if (!(s & (1 << (mode - 1)))) continue;
    int below = 0;
    for (int j = 1; j < mode; ++j)
      if (s & (1 << (j - 1))) ++below;
    out.set(s & ~(1 << (mode - 1)), s, Rat(below % 2 == 0 ? 1 : -1));
  }
  return out;
}

SparseMat fock_phi(int n, int index) {
  return index > 0 ? fock_annihilator(n, index) : fock_creator(n, -index);
}

// Parity-dependent diagonal scaling used by the zero-index generators.
SparseMat parity_scale(int n, const Rat& on_even, const Rat& on_odd) {
  const int dim = 1 << n;
  SparseMat out(dim, dim);
  for (int s = 0; s < dim; ++s)
    out.set(s, s, __builtin_popcount(static_cast<unsigned>(s)) % 2 == 0 ? on_even : on_odd);
  return out;
}

}  // namespace

LieModule build_spin(int N) {
  if (N < 3) throw Error("build_spin needs N >= 3");
  const int n = N / 2;
  const bool odd = N % 2 == 1;
  const int fock = 1 << n;
  IndexScheme sch = symmetric_scheme(N);

  std::map<std::pair<int, int>, SparseMat> big;
  for (int pi = 0; pi < N; ++pi)
    for (int pj = 0; pj < N; ++pj) {
      const int i = sch.index_at(pi), j = sch.index_at(pj);
      SparseMat m(fock, fock);
      if (i != 0 && j != 0) {
        m = fock_phi(n, i) * fock_phi(n, -j);
        if (i == j)
          for (int s = 0; s < fock; ++s) m.add_at(s, s, Rat(-1) / 2);
      } else if (i != 0 && j == 0) {
        m = fock_phi(n, i) * parity_scale(n, Rat(1), Rat(-1) / 2);
      } else if (i == 0 && j != 0) {
        m = parity_scale(n, Rat(1) / 2, Rat(-1)) * fock_phi(n, -j);
      }  // F_00 = 0
      big[{pi, pj}] = std::move(m);
    }

  DenseVec seed(fock, Rat(0));
  seed[fock - 1] = Rat(1);  // all modes occupied
  std::vector<SparseMat> ops;
  for (const auto& [k, m] : big) ops.push_back(m);
  Subspace span = subspace_closure({seed}, ops);
  const int dim = span.dim();

  LieModule mod;
  mod.algebra = LieAlgebra::O;
  mod.N = N;
  mod.dim = dim;
  for (const auto& [key, m] : big) {
    SparseMat small(dim, dim);
    for (int k = 0; k < dim; ++k) {
      auto coords = span.coords(m.apply(span.basis[k]));
      if (!coords) throw Error("spin closure not invariant (internal error)");
      for (int r = 0; r < dim; ++r)
        if ((*coords)[r] != 0) small.set(r, k, (*coords)[r]);
    }
    mod.gens[key] = std::move(small);
  }
  mod.weights.assign(dim, DenseVec(n, Rat(0)));
  for (int i = 1; i <= n; ++i) {
    const SparseMat& fii = mod.gens.at({sch.pos_of(i), sch.pos_of(i)});
    for (int k = 0; k < dim; ++k) mod.weights[k][i - 1] = fii.get(k, k);
  }
  DenseVec hw(n, Rat(-1) / 2);
  mod.hw_index = -1;
  for (int k = 0; k < dim; ++k)
    if (mod.weights[k] == hw) mod.hw_index = k;
  if (mod.hw_index < 0) throw Error("spin highest weight vector not found");
  (void)odd;
  return mod;
}

LieModule build_g_rank1(LieAlgebra alg, int N, const Rat& mu1) {
  LieModule mod;
  mod.algebra = alg;
  mod.N = N;
  if (alg == LieAlgebra::O && N == 2) {
    mod.dim = 1;
    auto put = [&](int p, int q, const Rat& v) {
      SparseMat m(1, 1);
      if (v != 0) m.set(0, 0, v);
      mod.gens[{p, q}] = std::move(m);
    };
    put(0, 0, -mu1);
    put(0, 1, Rat(0));
    put(1, 0, Rat(0));
    put(1, 1, mu1);
    mod.weights.push_back({mu1});
    mod.hw_index = 0;
    return mod;
  }
  if (alg == LieAlgebra::SP && N == 2) {
    if (!is_nonneg_integer(-mu1))
      throw Error("sp(2) weight " + rat_str(mu1) + " is not a nonpositive integer");
    const int m = static_cast<int>(rat_to_long(-mu1));
    const int dim = m + 1;
    mod.dim = dim;
    SparseMat f11(dim, dim), fm1m1(dim, dim), raise(dim, dim), lower(dim, dim);
    for (int r = 0; r <= m; ++r) {
      f11.set(r, r, mu1 + 2 * r);
      fm1m1.set(r, r, -(mu1 + 2 * r));
      if (r >= 1) raise.set(r - 1, r, Rat(2 * r) * (m - r + 1));
      if (r < m) lower.set(r + 1, r, Rat(2));
      mod.weights.push_back({mu1 + 2 * r});
    }
    mod.gens[{0, 0}] = std::move(fm1m1);  // F_{-1,-1}
    mod.gens[{0, 1}] = std::move(raise);  // F_{-1,1}
    mod.gens[{1, 0}] = std::move(lower);  // F_{1,-1}
    mod.gens[{1, 1}] = std::move(f11);
    mod.hw_index = 0;
    return mod;
  }
  if (alg == LieAlgebra::O && N == 3) {
    if (!is_nonneg_integer(-mu1 * 2))
      throw Error("o(3) weight " + rat_str(mu1) + ": -2*mu1 must be a nonnegative integer");
    const int m = static_cast<int>(rat_to_long(-mu1 * 2));
    const int dim = m + 1;
    mod.dim = dim;
    SparseMat f11(dim, dim), raise(dim, dim), lower(dim, dim), zero(dim, dim);
    for (int r = 0; r <= m; ++r) {
      f11.set(r, r, mu1 + r);
      if (r >= 1) raise.set(r - 1, r, Rat(r) * (m - r + 1));
      if (r < m) lower.set(r + 1, r, Rat(1) / 2);
      mod.weights.push_back({mu1 + r});
    }
    // positions: 0 <-> index -1, 1 <-> index 0, 2 <-> index 1
    mod.gens[{0, 0}] = -f11;
    mod.gens[{0, 1}] = raise;        // F_{-1,0}
    mod.gens[{1, 2}] = -raise;       // F_{0,1}
    mod.gens[{1, 0}] = lower;        // F_{0,-1}
    mod.gens[{2, 1}] = -lower;       // F_{1,0}
    mod.gens[{0, 2}] = zero;         // F_{-1,1} = 0
    mod.gens[{2, 0}] = zero;         // F_{1,-1} = 0
    mod.gens[{1, 1}] = zero;         // F_{0,0} = 0
    mod.gens[{2, 2}] = std::move(f11);
    mod.hw_index = 0;
    return mod;
  }
  throw Error("build_g_rank1 supports sp(2), o(2) and o(3) only");
}

}  // namespace yangrep
