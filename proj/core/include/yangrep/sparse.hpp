#pragma once

#include <vector>

#include "yangrep/rat.hpp"

namespace yangrep {

using DenseVec = std::vector<Rat>;

bool is_zero_vec(const DenseVec& v);
DenseVec operator+(const DenseVec& a, const DenseVec& b);
DenseVec operator-(const DenseVec& a, const DenseVec& b);
DenseVec scale(const DenseVec& v, const Rat& s);

/// Sparse matrix over Rat with row-major storage; no explicit zeros kept.
class SparseMat {
 public:
  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMat identity(int n);
  static SparseMat zero(int rows, int cols) { return SparseMat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rat& v);
  void add_at(int r, int c, const Rat& v);
  Rat get(int r, int c) const;

  const std::vector<std::pair<int, Rat>>& row(int r) const { return data_[r]; }
  std::size_t nnz() const;
  bool is_zero() const;

  SparseMat transpose() const;
  DenseVec apply(const DenseVec& v) const;

  friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  SparseMat operator*(const Rat& s) const;
  SparseMat operator-() const { return *this * Rat(-1); }
  bool operator==(const SparseMat& o) const;

  /// Kronecker product, row index r1 * b.rows + r2.
  static SparseMat kron(const SparseMat& a, const SparseMat& b);

  /// True when the matrix equals c * identity.
  bool is_scalar(Rat* c = nullptr) const;

 private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, Rat>>> data_;  // sorted by column
};

SparseMat commutator(const SparseMat& a, const SparseMat& b);

}  // namespace yangrep
