#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "toric/bigint.hpp"

namespace toric {

/// Dense integer matrix, row-major. Empty shapes (0 rows or 0 cols) are legal
/// everywhere; chain complexes produce them at their ends.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }
  IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& row : init) {
      assert(int(row.size()) == cols_);
      for (const auto& v : row) a_.push_back(v);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }
  const Int& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const = default;

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  /// row[i] += c * row[j]
  void add_row(int i, int j, const Int& c) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
  }
  /// col[i] += c * col[j]
  void add_col(int i, int j, const Int& c) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
  }
  void negate_row(int i) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols() == b.rows());
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& v = a(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += v * b(k, j);
    }
  return c;
}

using IntVec = std::vector<Int>;

/// Fixed-dimension vector of exact rationals.
using RatVec = std::vector<Rat>;

}  // namespace toric
