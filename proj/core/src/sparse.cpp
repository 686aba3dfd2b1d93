#include "yangrep/sparse.hpp"

#include <algorithm>

namespace yangrep {

bool is_zero_vec(const DenseVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

DenseVec operator+(const DenseVec& a, const DenseVec& b) {
  DenseVec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

DenseVec operator-(const DenseVec& a, const DenseVec& b) {
  DenseVec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

DenseVec scale(const DenseVec& v, const Rat& s) {
  DenseVec out(v);
  for (auto& x : out) x *= s;
  return out;
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
  return m;
}

void SparseMat::set(int r, int c, const Rat& v) {
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

void SparseMat::add_at(int r, int c, const Rat& v) {
  if (v == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

Rat SparseMat::get(int r, int c) const {
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool SparseMat::is_zero() const { return nnz() == 0; }

SparseMat SparseMat::transpose() const {
  SparseMat out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace_back(r, v);
  return out;
}

DenseVec SparseMat::apply(const DenseVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("matrix-vector size mismatch");
  DenseVec out(rows_, Rat(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  return out;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix size mismatch");
  SparseMat out(a);
  for (int r = 0; r < b.rows_; ++r)
    for (const auto& [c, v] : b.data_[r]) out.add_at(r, c, v);
  return out;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + b * Rat(-1); }

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product size mismatch");
  SparseMat out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    std::vector<std::pair<int, Rat>> acc;  // merged via map-like vector
    for (const auto& [k, av] : a.data_[r]) {
      for (const auto& [c, bv] : b.data_[k]) {
        auto it = std::lower_bound(acc.begin(), acc.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != acc.end() && it->first == c)
          it->second += av * bv;
        else
          acc.insert(it, {c, av * bv});
      }
    }
    auto& row = out.data_[r];
    for (auto& [c, v] : acc)
      if (v != 0) row.emplace_back(c, std::move(v));
  }
  return out;
}

SparseMat SparseMat::operator*(const Rat& s) const {
  if (s == 0) return SparseMat(rows_, cols_);
  SparseMat out(*this);
  for (auto& row : out.data_)
    for (auto& [c, v] : row) v *= s;
  return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

SparseMat SparseMat::kron(const SparseMat& a, const SparseMat& b) {
  SparseMat out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int r1 = 0; r1 < a.rows_; ++r1)
    for (const auto& [c1, v1] : a.data_[r1])
      for (int r2 = 0; r2 < b.rows_; ++r2)
        for (const auto& [c2, v2] : b.data_[r2])
          out.data_[r1 * b.rows_ + r2].emplace_back(c1 * b.cols_ + c2, v1 * v2);
  for (auto& row : out.data_)
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

bool SparseMat::is_scalar(Rat* c) const {
  if (rows_ != cols_) return false;
  Rat diag = rows_ > 0 ? get(0, 0) : Rat(0);
  for (int r = 0; r < rows_; ++r) {
    const auto& row = data_[r];
    if (diag == 0) {
      if (!row.empty()) return false;
    } else {
      if (row.size() != 1 || row[0].first != r || row[0].second != diag) return false;
    }
  }
  if (c) *c = diag;
  return true;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) { return a * b - b * a; }

}  // namespace yangrep
