#include "twinbuild/sample.hpp"

#include "twinbuild/reduction.hpp"

namespace tb::sample {

GaussRat coeff(Rng& rng, bool complex) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  GaussRat re = GaussRat::frac(num(rng), den(rng));
  if (!complex) return re;
  return re + GaussRat::frac(num(rng), den(rng)) * GaussRat::i();
}

LaurentPoly laurent(Rng& rng, int lo, int hi, bool complex) {
  LaurentPoly p;
  std::bernoulli_distribution keep(0.6);
  for (int e = lo; e <= hi; ++e)
    if (keep(rng)) p += LaurentPoly::monomial(coeff(rng, complex), e);
  return p;
}

LaurentMatrix special(Rng& rng, int n, int factors, int deg) {
  LaurentMatrix g = LaurentMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1), ex(-deg, deg);
  for (int f = 0; f < factors; ++f) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    LaurentPoly c = LaurentPoly::monomial(coeff(rng, f % 2 == 0), ex(rng));
    if (c.is_zero()) continue;
    g = g * (LaurentMatrix::identity(n) + elementary(n, i, j, c));
  }
  return g;
}

LaurentMatrix borel(Rng& rng, Side side, int n, int deg) {
  LaurentMatrix upper = LaurentMatrix::identity(n), lower = LaurentMatrix::identity(n), d(n);
  GaussRat prod(1);
  for (int i = 0; i < n; ++i) {
    GaussRat c = coeff(rng, false);
    if (c.is_zero()) c = GaussRat(2);
    if (i + 1 == n) c = prod.inverse();
    prod *= c;
    d(i, i) = LaurentPoly(c);
    for (int j = 0; j < n; ++j) {
      if (j > i) upper(i, j) = laurent(rng, 0, deg);
      if (j < i) lower(i, j) = laurent(rng, 1, deg);
    }
  }
  LaurentMatrix b = upper * d * lower;
  if (side == Side::Plus) return b;
  return b.transpose().inverted_variable();
}

Word reduced_word(Rng& rng, const CoxeterGroup& g, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, g.rank());
  Word w;
  int target = len(rng);
  for (int tries = 0; static_cast<int>(w.size()) < target && tries < 100; ++tries) {
    Word v = w;
    v.push_back(gen(rng));
    if (g.length(v) == static_cast<int>(v.size())) w = std::move(v);
  }
  return w;
}

namespace {

QMatrix small(Rng& rng, int r, int c) {
  static const GaussRat vals[] = {GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat::i()};
  std::uniform_int_distribution<int> pick(0, 3);
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = vals[pick(rng)];
  return m;
}

Subspace small_subspace(Rng& rng, int n, int k) {
  for (;;) {
    Subspace V = span_of(small(rng, k, n));
    if (V.dim() == k) return V;
  }
}

}  // namespace

QMatrix unitary(Rng& rng, int n) {
  QMatrix a = small(rng, n, n);
  QMatrix skew = a - a.conj_transpose(), one = QMatrix::identity(n);
  return (one - skew) * (one + skew).inverse();
}

LaurentMatrix unitary_sl_loop(Rng& rng, int n) {
  LaurentMatrix g = LaurentMatrix::identity(n);
  std::uniform_int_distribution<int> kd(1, n - 1);
  for (int f = 0; f < 2; ++f) {
    int k = kd(rng);
    QMatrix u = unitary(rng, n), one = QMatrix::identity(n);
    QMatrix P = one - projector_of(small_subspace(rng, n, k));
    QMatrix Q = u * (one - projector_of(coordinate_subspace(n, k))) * u.conj_transpose();
    g = g * unitary_loop_sl(P, Q);
  }
  return g;
}

std::pair<SubspaceFlag, std::vector<GaussRat>> weighted_flag(Rng& rng, int n) {
  std::vector<int> dims;
  std::bernoulli_distribution keep(0.6);
  for (int d = 1; d < n; ++d)
    if (keep(rng)) dims.push_back(d);
  if (dims.empty()) dims.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)));
  QMatrix b(n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = coeff(rng);
  } while (b.rank() < n);
  std::vector<Subspace> parts;
  for (int d : dims) {
    QMatrix rows(d, n);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) rows(i, j) = b(i, j);
    parts.push_back(span_of(rows));
  }
  std::uniform_int_distribution<long> wd(1, 9);
  std::vector<long> raw;
  long total = 0;
  for (size_t i = 0; i < dims.size(); ++i) total += raw.emplace_back(wd(rng));
  std::vector<GaussRat> w;
  for (long r : raw) w.push_back(GaussRat::frac(r, total));
  return {make_flag(parts), w};
}

}  // namespace tb::sample
