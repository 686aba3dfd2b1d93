#pragma once

#include "yangrep/linalg.hpp"
#include "yangrep/ratfunc.hpp"
#include "yangrep/sparse.hpp"

namespace yangrep {

/// Sparse matrix of rational functions in u.
class RatFuncMat {
 public:
  RatFuncMat() : rows_(0), cols_(0) {}
  RatFuncMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static RatFuncMat identity(int n);
  static RatFuncMat from_sparse(const SparseMat& m);
  /// delta * identity + m * u^{-1}
  static RatFuncMat eval_entry(const SparseMat& m, bool delta);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void set(int r, int c, RatFuncU v);
  void add_at(int r, int c, const RatFuncU& v);
  RatFuncU get(int r, int c) const;
  const std::vector<std::pair<int, RatFuncU>>& row(int r) const { return data_[r]; }
  bool is_zero() const;

  friend RatFuncMat operator+(const RatFuncMat& a, const RatFuncMat& b);
  friend RatFuncMat operator-(const RatFuncMat& a, const RatFuncMat& b);
  friend RatFuncMat operator*(const RatFuncMat& a, const RatFuncMat& b);
  RatFuncMat scaled(const RatFuncU& f) const;
  bool operator==(const RatFuncMat& o) const;

  static RatFuncMat kron(const RatFuncMat& a, const RatFuncMat& b);

  /// Entrywise evaluation; throws on a pole.
  SparseMat eval(const Rat& u0) const;
  bool has_pole_at(const Rat& u0) const;

  RatFuncMat shift(const Rat& a) const;
  RatFuncMat negate_u() const;

  /// Coefficient of u^{-r} in the expansion at infinity, r >= 0.
  SparseMat series_coeff(int r) const;

  /// Largest max(deg num, deg den) over entries.
  int max_entry_degree() const;

  /// Matrix-vector product over rational functions.
  std::vector<RatFuncU> apply(const std::vector<RatFuncU>& v) const;
  std::vector<RatFuncU> apply(const DenseVec& v) const;

  /// p * this * q with constant sparse matrices p, q (basis change).
  RatFuncMat conjugate(const SparseMat& p, const SparseMat& q) const;

 private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, RatFuncU>>> data_;  // sorted by column
};

}  // namespace yangrep
