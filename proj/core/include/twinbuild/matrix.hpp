#pragma once

#include <unordered_map>
#include <vector>

#include "twinbuild/error.hpp"
#include "twinbuild/laurent.hpp"

namespace tb {

// Square matrix with Laurent polynomial entries over F, row-major.
template <class F>
class LMatrix {
 public:
  using Entry = Laurent<F>;

  LMatrix() = default;
  explicit LMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static LMatrix identity(int n) {
    LMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Entry(F(1));
    return m;
  }
  static LMatrix diag(const std::vector<Entry>& d) {
    LMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m(i, i) = d[i];
    return m;
  }

  int n() const { return n_; }
  Entry& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Entry& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  friend bool operator==(const LMatrix& a, const LMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const LMatrix& a, const LMatrix& b) { return !(a == b); }

  friend LMatrix operator+(const LMatrix& a, const LMatrix& b) {
    LMatrix r(a.n_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }
  friend LMatrix operator-(const LMatrix& a, const LMatrix& b) {
    LMatrix r(a.n_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }
  friend LMatrix operator*(const LMatrix& a, const LMatrix& b) {
    const int n = a.n_;
    LMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Entry& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          const Entry& y = b(k, j);
          if (y.is_zero()) continue;
          if (x.is_monomial()) {
            r(i, j).axpy(x.low_coeff(), x.low(), y);
          } else {
            r(i, j) += x * y;
          }
        }
      }
    return r;
  }
  LMatrix scaled(const Entry& c) const {
    LMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
  }

  template <class Fn>
  LMatrix map(Fn fn) const {
    LMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = fn(a_[k]);
    return r;
  }

  LMatrix transpose() const {
    LMatrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  LMatrix z_d_dz() const {
    return map([](const Entry& e) { return e.z_d_dz(); });
  }
  // Substitution z -> 1/z in every entry.
  LMatrix inverted_variable() const {
    return map([](const Entry& e) { return e.inverted(); });
  }

  Entry trace() const {
    Entry t;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }
  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }
  bool is_constant() const {
    for (const auto& e : a_)
      if (!e.is_constant()) return false;
    return true;
  }
  bool is_identity() const { return *this == identity(n_); }

  // Cofactor expansion along rows with memoization on the set of used columns.
  Entry det() const {
    if (n_ == 0) return Entry(F(1));
    std::unordered_map<unsigned, Entry> memo;
    return minor_det(0, 0u, memo);
  }

  LMatrix adjugate() const {
    LMatrix adj(n_);
    if (n_ == 1) {
      adj(0, 0) = Entry(F(1));
      return adj;
    }
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        LMatrix m(n_ - 1);
        for (int r = 0, rr = 0; r < n_; ++r) {
          if (r == j) continue;
          for (int c = 0, cc = 0; c < n_; ++c) {
            if (c == i) continue;
            m(rr, cc++) = (*this)(r, c);
          }
          ++rr;
        }
        Entry d = m.det();
        adj(i, j) = ((i + j) % 2) ? -d : d;
      }
    return adj;
  }

  // Inverse over the Laurent ring; requires det to be a unit c z^k.
  LMatrix inverse() const {
    Entry d = det();
    if (!d.is_monomial()) throw Error(ErrorCode::DegenerateLattice, "matrix is not invertible over the Laurent ring");
    Entry dinv = Entry::monomial(F(1) / d.low_coeff(), -d.low());
    return adjugate().scaled(dinv);
  }

  // Column operation col_x += c z^e col_y.
  void add_col(int x, int y, const F& c, int e) {
    for (int i = 0; i < n_; ++i) (*this)(i, x).axpy(c, e, (*this)(i, y));
  }
  void scale_col(int x, const Entry& c) {
    for (int i = 0; i < n_; ++i) (*this)(i, x) = (*this)(i, x) * c;
  }
  void swap_cols(int x, int y) {
    for (int i = 0; i < n_; ++i) std::swap((*this)(i, x), (*this)(i, y));
  }

 private:
  Entry minor_det(int row, unsigned used, std::unordered_map<unsigned, Entry>& memo) const {
    if (row == n_) return Entry(F(1));
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Entry sum;
    int sign_pos = 0;
    for (int c = 0; c < n_; ++c) {
      if (used & (1u << c)) continue;
      const Entry& x = (*this)(row, c);
      if (!x.is_zero()) {
        Entry sub = x * minor_det(row + 1, used | (1u << c), memo);
        if (sign_pos % 2) sum -= sub; else sum += sub;
      }
      ++sign_pos;
    }
    memo.emplace(used, sum);
    return sum;
  }

  int n_ = 0;
  std::vector<Entry> a_;
};

using LaurentMatrix = LMatrix<GaussRat>;

// Coefficientwise complex conjugation.
inline LaurentMatrix iota(const LaurentMatrix& m) {
  return m.map([](const LaurentPoly& p) { return conj(p); });
}

// Conjugate transpose of a constant matrix (applied termwise if not constant).
LaurentMatrix star(const LaurentMatrix& m);
// sum X_k z^k  ->  sum (X_{-k})^* z^k.
LaurentMatrix sharp(const LaurentMatrix& m);
bool is_special(const LaurentMatrix& m);
bool is_iota_fixed(const LaurentMatrix& m);

// Elementary matrix E_ij (0-based) scaled by a Laurent entry.
LaurentMatrix elementary(int n, int i, int j, const LaurentPoly& c);

}  // namespace tb
