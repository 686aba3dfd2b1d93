#include "yangrep/ratfunc_mat.hpp"

#include <algorithm>

namespace yangrep {

RatFuncMat RatFuncMat::identity(int n) {
  RatFuncMat m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, RatFuncU::one());
  return m;
}

RatFuncMat RatFuncMat::from_sparse(const SparseMat& s) {
  RatFuncMat m(s.rows(), s.cols());
  for (int r = 0; r < s.rows(); ++r)
    for (const auto& [c, v] : s.row(r)) m.data_[r].emplace_back(c, RatFuncU(v));
  return m;
}

RatFuncMat RatFuncMat::eval_entry(const SparseMat& s, bool delta) {
  RatFuncMat m(s.rows(), s.cols());
  const RatFuncU uinv{PolyU::one(), PolyU({Rat(0), Rat(1)})};
  for (int r = 0; r < s.rows(); ++r)
    for (const auto& [c, v] : s.row(r)) m.add_at(r, c, uinv * v);
  if (delta)
    for (int i = 0; i < s.rows(); ++i) m.add_at(i, i, RatFuncU::one());
  return m;
}

void RatFuncMat::set(int r, int c, RatFuncU v) {
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    row.insert(it, {c, std::move(v)});
  }
}

void RatFuncMat::add_at(int r, int c, const RatFuncU& v) {
  if (v.is_zero()) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second = it->second + v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

RatFuncU RatFuncMat::get(int r, int c) const {
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return RatFuncU::zero();
}

bool RatFuncMat::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

RatFuncMat operator+(const RatFuncMat& a, const RatFuncMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("RatFuncMat size mismatch");
  RatFuncMat out(a);
  for (int r = 0; r < b.rows_; ++r)
    for (const auto& [c, v] : b.data_[r]) out.add_at(r, c, v);
  return out;
}

RatFuncMat operator-(const RatFuncMat& a, const RatFuncMat& b) {
  return a + b.scaled(RatFuncU(Rat(-1)));
}

RatFuncMat operator*(const RatFuncMat& a, const RatFuncMat& b) {
  if (a.cols_ != b.rows_) throw Error("RatFuncMat product size mismatch");
  RatFuncMat out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (const auto& [k, av] : a.data_[r])
      for (const auto& [c, bv] : b.data_[k]) out.add_at(r, c, av * bv);
  }
  return out;
}

RatFuncMat RatFuncMat::scaled(const RatFuncU& f) const {
  if (f.is_zero()) return RatFuncMat(rows_, cols_);
  RatFuncMat out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[r].emplace_back(c, v * f);
  return out;
}

bool RatFuncMat::operator==(const RatFuncMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RatFuncMat RatFuncMat::kron(const RatFuncMat& a, const RatFuncMat& b) {
  RatFuncMat out(a.rows_ * b.rows_, a.cols_ * b.cols_);
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

SparseMat RatFuncMat::eval(const Rat& u0) const {
  SparseMat out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.set(r, c, v.eval_or_throw(u0));
  return out;
}

bool RatFuncMat::has_pole_at(const Rat& u0) const {
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r])
      if (v.den().eval(u0) == 0) return true;
  return false;
}

RatFuncMat RatFuncMat::shift(const Rat& a) const {
  RatFuncMat out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[r].emplace_back(c, v.shift(a));
  return out;
}

RatFuncMat RatFuncMat::negate_u() const {
  RatFuncMat out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[r].emplace_back(c, v.negate_u());
  return out;
}

SparseMat RatFuncMat::series_coeff(int r) const {
  SparseMat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) {
      auto coeffs = v.series_at_infinity(r + 1);
      out.set(i, c, coeffs[r]);
    }
  return out;
}

int RatFuncMat::max_entry_degree() const {
  int d = 0;
  for (const auto& row : data_)
    for (const auto& [c, v] : row) d = std::max(d, v.max_degree());
  return d;
}

std::vector<RatFuncU> RatFuncMat::apply(const std::vector<RatFuncU>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("RatFuncMat apply size mismatch");
  std::vector<RatFuncU> out(rows_, RatFuncU::zero());
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r]) out[r] = out[r] + x * v[c];
  return out;
}

std::vector<RatFuncU> RatFuncMat::apply(const DenseVec& v) const {
  std::vector<RatFuncU> w;
  w.reserve(v.size());
  for (const auto& x : v) w.emplace_back(x);
  return apply(w);
}

RatFuncMat RatFuncMat::conjugate(const SparseMat& p, const SparseMat& q) const {
  RatFuncMat out(p.rows(), q.cols());
  // p * this first.
  RatFuncMat mid(p.rows(), cols_);
  for (int r = 0; r < p.rows(); ++r)
    for (const auto& [k, pv] : p.row(r))
      for (const auto& [c, mv] : data_[k]) mid.add_at(r, c, mv * pv);
  for (int r = 0; r < p.rows(); ++r)
    for (const auto& [k, mv] : mid.data_[r])
      for (const auto& [c, qv] : q.row(k)) out.add_at(r, c, mv * qv);
  return out;
}

}  // namespace yangrep
