#pragma once

#include <vector>

#include "twinbuild/gauss.hpp"

namespace tb {

// Dense rows x cols matrix over Q(i).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, GaussRat(0)) {}
  static QMatrix identity(int n);
  // Matrix whose columns are the given vectors.
  static QMatrix from_columns(const std::vector<std::vector<GaussRat>>& cols, int rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  GaussRat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const GaussRat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  QMatrix scaled(const GaussRat& c) const;
  QMatrix conj_transpose() const;
  QMatrix transpose() const;
  std::vector<GaussRat> column(int j) const;
  bool is_zero() const;

  // Reduced row echelon form; pivot columns returned through `pivots`.
  QMatrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  // Basis of the right null space, as columns of the result (RREF-derived).
  QMatrix kernel() const;
  // Inverse of a square invertible matrix.
  QMatrix inverse() const;
  GaussRat trace() const;

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<GaussRat> a_;
};

}  // namespace tb
