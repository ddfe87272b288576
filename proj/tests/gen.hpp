#pragma once

#include <random>

#include "twinbuild/building.hpp"
#include "twinbuild/matrix.hpp"
#include "twinbuild/veronese.hpp"

namespace tbtest {

using tb::GaussRat;
using tb::LaurentMatrix;
using tb::LaurentPoly;

inline GaussRat rand_coeff(std::mt19937_64& rng, bool complex = true) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  GaussRat re = GaussRat::frac(num(rng), den(rng));
  if (!complex) return re;
  return re + GaussRat::frac(num(rng), den(rng)) * GaussRat::i();
}

inline LaurentPoly rand_laurent(std::mt19937_64& rng, int lo, int hi, bool complex = true) {
  LaurentPoly p;
  std::bernoulli_distribution keep(0.6);
  for (int e = lo; e <= hi; ++e)
    if (keep(rng)) p += LaurentPoly::monomial(rand_coeff(rng, complex), e);
  return p;
}

inline LaurentMatrix rand_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rand_laurent(rng, lo, hi);
  return m;
}

// Random element of SL_n over the Laurent ring: product of elementary matrices.
inline LaurentMatrix rand_sl(std::mt19937_64& rng, int n, int factors = 4, int deg = 2) {
  LaurentMatrix g = LaurentMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1), ex(-deg, deg);
  for (int f = 0; f < factors; ++f) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    LaurentMatrix e = LaurentMatrix::identity(n);
    e(i, j) = LaurentPoly::monomial(rand_coeff(rng, f % 2 == 0), ex(rng));
    if (e(i, j).is_zero()) continue;
    g = g * e;
  }
  return g;
}

// Random element of the Borel subgroup of the given side, with entries of
// z-degree at most deg.
inline LaurentMatrix rand_borel(std::mt19937_64& rng, tb::Side side, int n, int deg = 2) {
  LaurentMatrix upper = LaurentMatrix::identity(n), lower = LaurentMatrix::identity(n), d(n);
  GaussRat prod(1);
  for (int i = 0; i < n; ++i) {
    GaussRat c = rand_coeff(rng, false);
    if (c.is_zero()) c = GaussRat(2);
    if (i + 1 == n) c = prod.inverse();
    prod *= c;
    d(i, i) = LaurentPoly(c);
    for (int j = 0; j < n; ++j) {
      if (j > i) upper(i, j) = rand_laurent(rng, 0, deg);
      if (j < i) lower(i, j) = rand_laurent(rng, 1, deg);
    }
  }
  LaurentMatrix b = upper * d * lower;
  if (side == tb::Side::Plus) return b;
  // B⁻ is the image of B⁺ under transpose followed by z -> 1/z.
  return b.transpose().inverted_variable();
}

inline tb::Word rand_reduced_word(std::mt19937_64& rng, const tb::CoxeterGroup& g, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, g.rank());
  tb::Word w;
  int target = len(rng);
  for (int tries = 0; static_cast<int>(w.size()) < target && tries < 100; ++tries) {
    tb::Word v = w;
    v.push_back(gen(rng));
    if (g.length(v) == static_cast<int>(v.size())) w = std::move(v);
  }
  return w;
}

inline tb::QMatrix small_matrix(std::mt19937_64& rng, int r, int c) {
  static const GaussRat vals[] = {GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat::i()};
  std::uniform_int_distribution<int> pick(0, 3);
  tb::QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = vals[pick(rng)];
  return m;
}

// Loops with small coefficients keep the exact arithmetic cheap.
inline LaurentMatrix rand_sl_loop(std::mt19937_64& rng, int n) {
  LaurentMatrix g = LaurentMatrix::identity(n);
  std::uniform_int_distribution<int> kd(1, n - 1);
  for (int f = 0; f < 2; ++f) {
    int k = kd(rng);
    tb::QMatrix a = small_matrix(rng, n, n);
    tb::QMatrix skew = a - a.conj_transpose(), one = tb::QMatrix::identity(n);
    tb::QMatrix u = (one - skew) * (one + skew).inverse();
    tb::Subspace V = tb::span_of(small_matrix(rng, k, n));
    while (V.dim() != k) V = tb::span_of(small_matrix(rng, k, n));
    tb::QMatrix P = tb::QMatrix::identity(n) - tb::projector_of(V);
    tb::QMatrix Q = u * (tb::QMatrix::identity(n) - tb::projector_of(tb::coordinate_subspace(n, k))) * u.conj_transpose();
    g = g * tb::unitary_loop_sl(P, Q);
  }
  return g;
}

}  // namespace tbtest
