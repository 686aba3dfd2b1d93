#include "yangrep/linalg.hpp"

#include <algorithm>

namespace yangrep {

namespace {

std::size_t int_bits(const BigInt& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(x < 0 ? BigInt(-x) : x) + 1;
}

struct Echelon {
  std::vector<std::vector<BigInt>> m;  // dense integer working copy
  std::vector<int> pivot_cols;         // per pivot row, in order
};

// Fraction-free forward elimination (Bareiss). Rows are scaled to integers
// first; pivots are chosen by smallest bit size, then lowest row index.
Echelon bareiss(const SparseMat& a) {
  const int rows = a.rows(), cols = a.cols();
  Echelon e;
  e.m.assign(rows, std::vector<BigInt>(cols, BigInt(0)));
  for (int r = 0; r < rows; ++r) {
    BigInt lcm(1);
    for (const auto& [c, v] : a.row(r)) lcm = boost::multiprecision::lcm(lcm, rat_den(v));
    for (const auto& [c, v] : a.row(r)) e.m[r][c] = rat_num(v) * (lcm / rat_den(v));
  }
  BigInt prev(1);
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int best = -1;
    std::size_t best_bits = 0;
    for (int r = prow; r < rows; ++r) {
      if (e.m[r][col] == 0) continue;
      std::size_t b = int_bits(e.m[r][col]);
      if (best < 0 || b < best_bits) {
        best = r;
        best_bits = b;
      }
    }
    if (best < 0) continue;
    std::swap(e.m[prow], e.m[best]);
    const BigInt p = e.m[prow][col];
    for (int r = prow + 1; r < rows; ++r) {
      const BigInt f = e.m[r][col];
      for (int c = col; c < cols; ++c) e.m[r][c] = (p * e.m[r][c] - f * e.m[prow][c]) / prev;
    }
    prev = p;
    e.pivot_cols.push_back(col);
    ++prow;
  }
  return e;
}

}  // namespace

bool Subspace::contains(const DenseVec& v) const { return is_zero_vec(reduce(v)); }

DenseVec Subspace::reduce(const DenseVec& v) const {
  DenseVec w(v);
  for (const auto& b : basis) {
    int p = 0;
    while (b[p] == 0) ++p;
    if (w[p] != 0) {
      const Rat f = w[p];
      for (int i = p; i < ambient; ++i) w[i] -= f * b[i];
    }
  }
  return w;
}

std::optional<DenseVec> Subspace::coords(const DenseVec& v) const {
  DenseVec w(v);
  DenseVec out;
  out.reserve(basis.size());
  for (const auto& b : basis) {
    int p = 0;
    while (b[p] == 0) ++p;
    const Rat f = w[p];
    out.push_back(f);
    if (f != 0)
      for (int i = p; i < ambient; ++i) w[i] -= f * b[i];
  }
  if (!is_zero_vec(w)) return std::nullopt;
  return out;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (const auto& b : basis) {
    int p = 0;
    while (b[p] == 0) ++p;
    out.push_back(p);
  }
  return out;
}

void rref(std::vector<DenseVec>& rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_vec), rows.end());
  if (rows.empty()) return;
  const int cols = static_cast<int>(rows[0].size());
  int prow = 0;
  for (int col = 0; col < cols && prow < static_cast<int>(rows.size()); ++col) {
    int best = -1;
    std::size_t best_bits = 0;
    for (int r = prow; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      std::size_t b = rat_bits(rows[r][col]);
      if (best < 0 || b < best_bits) {
        best = r;
        best_bits = b;
      }
    }
    if (best < 0) continue;
    std::swap(rows[prow], rows[best]);
    const Rat inv = Rat(1) / rows[prow][col];
    for (int c = col; c < cols; ++c) rows[prow][c] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == prow || rows[r][col] == 0) continue;
      const Rat f = rows[r][col];
      for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[prow][c];
    }
    ++prow;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_vec), rows.end());
}

Subspace make_subspace(int ambient, std::vector<DenseVec> vectors) {
  rref(vectors);
  return Subspace{ambient, std::move(vectors)};
}

int rank(const SparseMat& m) { return static_cast<int>(bareiss(m).pivot_cols.size()); }

std::vector<DenseVec> kernel(const SparseMat& m) {
  const int cols = m.cols();
  Echelon e = bareiss(m);
  const int r = static_cast<int>(e.pivot_cols.size());
  // Back-substitute the echelon form into rational RREF rows.
  std::vector<DenseVec> rr(r, DenseVec(cols, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int c = e.pivot_cols[i]; c < cols; ++c) rr[i][c] = Rat(e.m[i][c]);
  for (int i = r - 1; i >= 0; --i) {
    const int pc = e.pivot_cols[i];
    const Rat inv = Rat(1) / rr[i][pc];
    for (int c = pc; c < cols; ++c) rr[i][c] *= inv;
    for (int j = 0; j < i; ++j) {
      const Rat f = rr[j][pc];
      if (f == 0) continue;
      for (int c = pc; c < cols; ++c) rr[j][c] -= f * rr[i][c];
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (int pc : e.pivot_cols) is_pivot[pc] = true;
  std::vector<DenseVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    DenseVec v(cols, Rat(0));
    v[f] = Rat(1);
    for (int i = 0; i < r; ++i) v[e.pivot_cols[i]] = -rr[i][f];
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

std::vector<DenseVec> intersect_kernels(const std::vector<SparseMat>& mats) {
  if (mats.empty()) throw Error("intersect_kernels: empty input");
  const int cols = mats[0].cols();
  int total_rows = 0;
  for (const auto& m : mats) {
    if (m.cols() != cols) throw Error("intersect_kernels: column count mismatch");
    total_rows += m.rows();
  }
  SparseMat stacked(total_rows, cols);
  int off = 0;
  for (const auto& m : mats) {
    for (int r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) stacked.set(off + r, c, v);
    off += m.rows();
  }
  return kernel(stacked);
}

Subspace subspace_closure(const std::vector<DenseVec>& seeds,
                          const std::vector<SparseMat>& operators) {
  if (seeds.empty()) throw Error("subspace_closure: no seeds");
  const int ambient = static_cast<int>(seeds[0].size());
  for (const auto& op : operators)
    if (op.rows() != ambient || op.cols() != ambient)
      throw Error("subspace_closure: operator dimension mismatch");

  std::vector<DenseVec> basis;   // kept in RREF at all times
  std::vector<int> pivot_of;     // pivot column per basis row
  std::vector<DenseVec> queue;

  auto insert = [&](DenseVec v) -> bool {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rat f = v[pivot_of[i]];
      if (f == 0) continue;
      for (int c = pivot_of[i]; c < ambient; ++c) v[c] -= f * basis[i][c];
    }
    int p = 0;
    while (p < ambient && v[p] == 0) ++p;
    if (p == ambient) return false;
    const Rat inv = Rat(1) / v[p];
    for (int c = p; c < ambient; ++c) v[c] *= inv;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rat f = basis[i][p];
      if (f == 0) continue;
      for (int c = p; c < ambient; ++c) basis[i][c] -= f * v[c];
    }
    // Keep rows ordered by pivot column.
    std::size_t at = 0;
    while (at < pivot_of.size() && pivot_of[at] < p) ++at;
    basis.insert(basis.begin() + at, v);
    pivot_of.insert(pivot_of.begin() + at, p);
    queue.push_back(std::move(v));
    return true;
  };

  for (const auto& s : seeds) insert(s);
  while (!queue.empty()) {
    DenseVec v = std::move(queue.back());
    queue.pop_back();
    for (const auto& op : operators) insert(op.apply(v));
  }
  return Subspace{ambient, std::move(basis)};
}

std::optional<DenseVec> solve(const SparseMat& a, const DenseVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve: rhs size mismatch");
  const int cols = a.cols();
  std::vector<DenseVec> rows(a.rows(), DenseVec(cols + 1, Rat(0)));
  for (int r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) rows[r][c] = v;
    rows[r][cols] = b[r];
  }
  rref(rows);
  DenseVec x(cols, Rat(0));
  for (const auto& row : rows) {
    int p = 0;
    while (p <= cols && row[p] == 0) ++p;
    if (p == cols) return std::nullopt;  // 0 = 1 row
    x[p] = row[cols];
  }
  return x;
}

RatFuncU interpolate_ratfunc(const std::vector<std::pair<Rat, Rat>>& samples,
                             int num_deg, int den_deg) {
  if (static_cast<int>(samples.size()) < num_deg + den_deg + 2)
    throw Error("interpolate_ratfunc: not enough samples");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw Error("interpolate_ratfunc: repeated sample point");

  // Unknowns: n_0..n_{num_deg}, d_0..d_{den_deg-1}; denominator is monic.
  const int nn = num_deg + 1, nd = den_deg;
  SparseMat sys(static_cast<int>(samples.size()), nn + nd);
  DenseVec rhs;
  rhs.reserve(samples.size());
  int row = 0;
  for (const auto& [x, v] : samples) {
    Rat p(1);
    for (int a = 0; a < nn; ++a) {
      sys.set(row, a, p);
      p *= x;
    }
    p = Rat(1);
    for (int j = 0; j < nd; ++j) {
      sys.set(row, nn + j, -v * p);
      p *= x;
    }
    rhs.push_back(v * p);  // p == x^den_deg here
    ++row;
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw Error("interpolate_ratfunc: no rational function of the given degrees fits");
  std::vector<Rat> nc(sol->begin(), sol->begin() + nn);
  std::vector<Rat> dc(sol->begin() + nn, sol->end());
  dc.push_back(Rat(1));
  RatFuncU f{PolyU(std::move(nc)), PolyU(std::move(dc))};
  for (const auto& [x, v] : samples) {
    auto val = f.eval(x);
    if (!val) throw Error("interpolate_ratfunc: sample point is a pole of every candidate");
    if (*val != v) throw Error("interpolate_ratfunc: inconsistent samples");
  }
  return f;
}

Subspace sum_subspaces(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error("sum_subspaces: ambient mismatch");
  std::vector<DenseVec> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  rref(rows);
  return Subspace{a.ambient, std::move(rows)};
}

}  // namespace yangrep
