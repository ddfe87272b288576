#include "twinbuild/dense.hpp"

#include "twinbuild/error.hpp"

namespace tb {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = GaussRat(1);
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<GaussRat>>& cols, int rows) {
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.c_; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const GaussRat& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  QMatrix r = a;
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  QMatrix r = a;
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

QMatrix QMatrix::scaled(const GaussRat& c) const {
  QMatrix r = *this;
  for (auto& v : r.a_) v *= c;
  return r;
}

QMatrix QMatrix::conj_transpose() const {
  QMatrix r(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<GaussRat> QMatrix::column(int j) const {
  std::vector<GaussRat> v(static_cast<size_t>(r_));
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool QMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

QMatrix QMatrix::rref(std::vector<int>* pivots) const {
  QMatrix m = *this;
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < c_ && row < r_; ++col) {
    int p = -1;
    for (int i = row; i < r_; ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < c_; ++j) std::swap(m(p, j), m(row, j));
    GaussRat inv = m(row, col).inverse();
    for (int j = col; j < c_; ++j) m(row, j) *= inv;
    for (int i = 0; i < r_; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      GaussRat f = m(i, col);
      for (int j = col; j < c_; ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

int QMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

QMatrix QMatrix::kernel() const {
  std::vector<int> piv;
  QMatrix e = rref(&piv);
  std::vector<char> is_pivot(static_cast<size_t>(c_), 0);
  for (int p : piv) is_pivot[p] = 1;
  std::vector<std::vector<GaussRat>> basis;
  for (int f = 0; f < c_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussRat> v(static_cast<size_t>(c_), GaussRat(0));
    v[f] = GaussRat(1);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -e(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return from_columns(basis, c_);
}

QMatrix QMatrix::inverse() const {
  if (r_ != c_) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  QMatrix aug(r_, 2 * c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, c_ + i) = GaussRat(1);
  }
  std::vector<int> piv;
  QMatrix e = aug.rref(&piv);
  if (static_cast<int>(piv.size()) < r_ || piv.back() >= c_)
    throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  QMatrix inv(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv(i, j) = e(i, c_ + j);
  return inv;
}

GaussRat QMatrix::trace() const {
  GaussRat t(0);
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

}  // namespace tb
