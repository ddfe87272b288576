#pragma once

#include <vector>

#include "twinbuild/affine.hpp"
#include "twinbuild/error.hpp"
#include "twinbuild/matrix.hpp"

namespace tb {

// Periodic column reduction of a Laurent matrix M to the form M·X = b·n with
// n monomial. Basis vector z^k e_r (r 1-based) sits at index n·k − r; the
// plus Borel is lower triangular in this order and the minus Borel upper.
//
// Key::Bottom when the left Borel is B⁺ (its columns' lowest index term is
// the key), Key::Top when it is B⁻. Dir::Plus when the right Borel is B⁺
// (a column may only absorb columns of larger index), Dir::Minus otherwise.
enum class Key { Bottom, Top };
enum class Dir { Plus, Minus };

template <class F>
struct Reduction {
  AffineWeylElt w;
  LMatrix<F> X;                 // accumulated right factor (det 1)
  LMatrix<F> MX;                // M·X
  std::vector<F> key_coeffs;    // every coefficient that acted as a pivot
  std::vector<F> final_keys;    // key coefficient of each column at the end
};

namespace detail {

struct KeyTerm {
  int row = -1;  // 0-based
  int exp = 0;
  long index = 0;
};

template <class F>
KeyTerm key_of(const LMatrix<F>& m, int c, Key key) {
  const int n = m.n();
  KeyTerm best;
  for (int r = 0; r < n; ++r) {
    const Laurent<F>& e = m(r, c);
    if (e.is_zero()) continue;
    int ex = key == Key::Bottom ? e.low() : e.high();
    long idx = static_cast<long>(n) * ex - (r + 1);
    if (best.row < 0 || (key == Key::Bottom ? idx < best.index : idx > best.index)) best = {r, ex, idx};
  }
  return best;
}

}  // namespace detail

template <class F>
Reduction<F> periodic_reduce(const LMatrix<F>& M, Key key, Dir dir, bool record = false) {
  const int n = M.n();
  Reduction<F> out;
  out.MX = M;
  out.X = LMatrix<F>::identity(n);
  std::vector<detail::KeyTerm> keys(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    keys[c] = detail::key_of(out.MX, c, key);
    if (keys[c].row < 0) throw Error(ErrorCode::NotSpecial, "matrix is singular");
  }
  const long limit = 200000;
  for (long iter = 0;; ++iter) {
    if (iter > limit) throw Error(ErrorCode::InvalidArgument, "periodic reduction did not terminate");
    int x = -1, y = -1;
    for (int a = 0; a < n && x < 0; ++a)
      for (int b = a + 1; b < n; ++b)
        if (keys[a].row == keys[b].row) {
          x = a;
          y = b;
          break;
        }
    if (x < 0) break;
    const int d = keys[x].exp - keys[y].exp;
    const long shifted_y = static_cast<long>(n) * d - (y + 1);  // index of z^d col_y
    const long base_x = -(x + 1);
    // Decide which column absorbs the other.
    bool modify_x = dir == Dir::Plus ? shifted_y > base_x : shifted_y < base_x;
    int tgt = modify_x ? x : y;
    int src = modify_x ? y : x;
    int shift = modify_x ? d : -d;
    const F& kt = out.MX(keys[tgt].row, tgt).coeff(keys[tgt].exp);
    const F& ks = out.MX(keys[src].row, src).coeff(keys[src].exp);
    if (record) {
      out.key_coeffs.push_back(kt);
      out.key_coeffs.push_back(ks);
    }
    F factor = -(kt / ks);
    out.MX.add_col(tgt, src, factor, shift);
    out.X.add_col(tgt, src, factor, shift);
    keys[tgt] = detail::key_of(out.MX, tgt, key);
    if (keys[tgt].row < 0) throw Error(ErrorCode::NotSpecial, "matrix is singular");
  }
  out.w = AffineWeylElt::identity(n);
  for (int c = 0; c < n; ++c) {
    out.w.perm[c] = keys[c].row;
    out.w.k[keys[c].row] = keys[c].exp;
    out.final_keys.push_back(out.MX(keys[c].row, c).coeff(keys[c].exp));
  }
  long sum = 0;
  for (long v : out.w.k) sum += v;
  if (sum != 0) throw Error(ErrorCode::NotSpecial, "matrix is not in SL_n over the Laurent ring");
  if (record) out.key_coeffs.insert(out.key_coeffs.end(), out.final_keys.begin(), out.final_keys.end());
  return out;
}

// Signed monomial representative of a Weyl element given as a word.
template <class F>
LMatrix<F> generator_matrix(int n, int s) {
  LMatrix<F> m = LMatrix<F>::identity(n);
  if (s < n) {
    // e_s -> e_{s+1}, e_{s+1} -> -e_s
    m(s - 1, s - 1) = Laurent<F>();
    m(s, s) = Laurent<F>();
    m(s, s - 1) = Laurent<F>(F(1));
    m(s - 1, s) = Laurent<F>(F(-1));
  } else {
    // e_1 -> z e_n, e_n -> -z^{-1} e_1
    m(0, 0) = Laurent<F>();
    m(n - 1, n - 1) = Laurent<F>();
    m(n - 1, 0) = Laurent<F>::z(1);
    m(0, n - 1) = Laurent<F>::monomial(F(-1), -1);
  }
  return m;
}

template <class F>
LMatrix<F> word_matrix(int n, const Word& w) {
  LMatrix<F> m = LMatrix<F>::identity(n);
  for (int s : w) {
    if (s < 1 || s > n) throw Error(ErrorCode::InvalidWord, "generator outside 1..n");
    m = m * generator_matrix<F>(n, s);
  }
  return m;
}

// Root subgroup element parametrizing the s-panel of the base chamber: t = 0
// is the base chamber itself. Plus side lower unipotent, minus side upper.
template <class F>
LMatrix<F> chart_matrix(bool plus, int n, int s, const F& t) {
  LMatrix<F> x = LMatrix<F>::identity(n);
  if (plus) {
    if (s < n) x(s, s - 1) = Laurent<F>(t);
    else x(0, n - 1) = Laurent<F>::monomial(t, -1);
  } else {
    if (s < n) x(s - 1, s) = Laurent<F>(t);
    else x(n - 1, 0) = Laurent<F>::monomial(t, 1);
  }
  return x;
}

}  // namespace tb
