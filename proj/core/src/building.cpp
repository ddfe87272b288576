#include "twinbuild/building.hpp"

#include <algorithm>

#include "twinbuild/error.hpp"
#include "twinbuild/reduction.hpp"

namespace tb {

CoxeterGroup affine_group(int n) { return CoxeterGroup(coxeter_matrix(CoxeterKind::AffineA, n)); }

LaurentMatrix reversal_matrix(int n) {
  LaurentMatrix r(n);
  for (int c = 0; c < n; ++c) r(n - 1 - c, c) = LaurentPoly(GaussRat(1));
  if ((n * (n - 1) / 2) % 2) r(n - 1, 0) = LaurentPoly(GaussRat(-1));
  return r;
}

LaurentMatrix normalize_rep(LaurentMatrix g) {
  LaurentPoly d = g.det();
  if (!d.is_constant() || d.is_zero()) throw Error(ErrorCode::NotSpecial, "chamber representative must have constant determinant");
  if (!d.coeff(0).is_one()) g.scale_col(0, LaurentPoly(d.coeff(0).inverse()));
  return g;
}

Chamber base_chamber(Side side, int n) { return Chamber{side, LaurentMatrix::identity(n)}; }

Chamber chamber_from_basis(Side side, const LaurentMatrix& basis) {
  const int n = basis.n();
  LaurentPoly d = basis.det();
  if (!d.is_monomial()) throw Error(ErrorCode::DegenerateLattice, "basis is not invertible over the Laurent ring");
  LaurentMatrix b = basis;
  int k = d.low();
  // (v_2, …, v_n, z v_1) spans the same chamber with determinant exponent +1.
  while (((k % n) + n) % n != 0) {
    LaurentMatrix r(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j + 1 < n; ++j) r(i, j) = b(i, j + 1);
      r(i, n - 1) = b(i, 0).shifted(1);
    }
    b = std::move(r);
    ++k;
  }
  if (k) b = b.map([s = -k / n](const LaurentPoly& p) { return p.shifted(s); });
  return Chamber{side, normalize_rep(b * reversal_matrix(n))};
}

Chamber standard_chamber(Side side, int n) { return chamber_from_basis(side, LaurentMatrix::identity(n)); }

Chamber act(const LaurentMatrix& g, const Chamber& C) { return Chamber{C.side, normalize_rep(g * C.rep)}; }

namespace {

// diag(1,…,1, z,…,z) with j trailing z's: base lattice L_j.
LaurentMatrix base_lattice(int n, int j) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (int i = n - j; i < n; ++i) m(i, i) = LaurentPoly::z(1);
  return m;
}

LaurentMatrix rep_inverse(const LaurentMatrix& g) { return g.adjugate(); }

LaurentMatrix relative(const Chamber& a, const Chamber& b) { return rep_inverse(a.rep) * b.rep; }

int mod(int a, int n) { return ((a % n) + n) % n; }

// Monomial matrix with entries z^{k_r} at (π(c), c).
LaurentMatrix monomial_of(const AffineWeylElt& w) {
  LaurentMatrix m(w.n());
  for (int c = 0; c < w.n(); ++c) m(w.perm[c], c) = LaurentPoly::z(static_cast<int>(w.k[w.perm[c]]));
  return m;
}

LaurentMatrix monomial_inverse(const AffineWeylElt& w) { return monomial_of(w.inverse()); }

Reduction<GaussRat> reduce_delta(const Chamber& C, const Chamber& D) {
  if (C.side != D.side) throw Error(ErrorCode::SideMismatch, "delta needs chambers on the same side");
  if (C.n() != D.n()) throw Error(ErrorCode::InvalidArgument, "chambers of different rank");
  return C.side == Side::Plus ? periodic_reduce(relative(C, D), Key::Bottom, Dir::Plus)
                              : periodic_reduce(relative(C, D), Key::Top, Dir::Minus);
}

Reduction<GaussRat> reduce_codelta(const Chamber& C, const Chamber& D) {
  if (C.side == D.side) throw Error(ErrorCode::SideMismatch, "codistance needs chambers on opposite sides");
  if (C.n() != D.n()) throw Error(ErrorCode::InvalidArgument, "chambers of different rank");
  return C.side == Side::Minus ? periodic_reduce(relative(C, D), Key::Top, Dir::Plus)
                               : periodic_reduce(relative(C, D), Key::Bottom, Dir::Minus);
}

Word word_of(const AffineWeylElt& w) { return affine_to_word(w); }

Word strip_right(const CoxeterGroup& g, Word w, const std::vector<int>& J) {
  CoxElt x = g.element(w);
  for (bool changed = true; changed;) {
    changed = false;
    for (int s : J)
      if (g.is_right_descent(x, s)) {
        g.mul_right(x, s);
        w.push_back(s);
        changed = true;
      }
  }
  return g.reduce(w);
}

Word grow_right(const CoxeterGroup& g, Word w, const std::vector<int>& J) {
  CoxElt x = g.element(w);
  for (bool changed = true; changed;) {
    changed = false;
    for (int s : J)
      if (!g.is_right_descent(x, s)) {
        g.mul_right(x, s);
        w.push_back(s);
        changed = true;
      }
  }
  return g.reduce(w);
}

}  // namespace

std::vector<LatticeClass> chamber_vertices(const Chamber& C) {
  const int n = C.n();
  std::vector<LatticeClass> out;
  for (int t = 0; t < n; ++t) {
    int j = C.side == Side::Plus ? t : mod(-t, n);
    out.push_back(canonical_class(Lattice{C.side, C.rep * base_lattice(n, j)}));
  }
  return out;
}

namespace {

// Basis B with E^±(B) equal to the chamber whose vertex of type t is by_type[t].
LaurentMatrix basis_from_vertices(Side side, const std::vector<LatticeClass>& by_type) {
  const int n = static_cast<int>(by_type.size());
  std::vector<LaurentMatrix> plus;
  for (const auto& v : by_type) plus.push_back(side == Side::Plus ? v.canon : v.canon.inverted_variable());
  const LaurentMatrix& H0 = plus[0];
  LatticeClass c0{Side::Plus, H0};
  // V_i = (H0^{-1} z^k M_i) mod z has codimension i; the V_i are nested.
  std::vector<QMatrix> V(static_cast<size_t>(n));
  V[0] = QMatrix::identity(n);
  LaurentMatrix H0inv = H0.inverse();
  for (int i = 1; i < n; ++i) {
    auto k = incidence_shift(c0, LatticeClass{Side::Plus, plus[i]});
    if (!k) throw Error(ErrorCode::RankError, "chamber vertices are not incident");
    LaurentMatrix coords = H0inv * plus[i].scaled(LaurentPoly::z(*k));
    QMatrix q(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) q(r, c) = coords(r, c).coeff(0);
    std::vector<int> piv;
    QMatrix e = q.transpose().rref(&piv);
    if (static_cast<int>(piv.size()) != n - i) throw Error(ErrorCode::RankError, "vertices do not form a chamber");
    QMatrix basis(n, n - i);
    for (int r = 0; r < n - i; ++r)
      for (int c = 0; c < n; ++c) basis(c, r) = e(r, c);
    V[i] = basis;
  }
  // u_n spans V_{n-1}; u_i ∈ V_{i-1} outside V_i.
  std::vector<std::vector<GaussRat>> u(static_cast<size_t>(n));
  std::vector<std::vector<GaussRat>> chosen;
  for (int i = n; i >= 1; --i) {
    const QMatrix& Vi = V[i - 1];
    bool found = false;
    for (int c = 0; c < Vi.cols() && !found; ++c) {
      std::vector<std::vector<GaussRat>> trial = chosen;
      trial.push_back(Vi.column(c));
      if (QMatrix::from_columns(trial, n).rank() == static_cast<int>(trial.size())) {
        u[i - 1] = Vi.column(c);
        chosen = std::move(trial);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::RankError, "vertices do not form a chamber");
  }
  LaurentMatrix U(n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) U(r, c) = LaurentPoly(u[c][r]);
  LaurentMatrix w = H0 * U;
  if (side == Side::Plus) return w;
  // σE_i^-(B) = E_{n-i}^+(σB reversed), σ: z -> 1/z.
  LaurentMatrix b(n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) b(r, c) = w(r, n - 1 - c).inverted();
  return b;
}

}  // namespace

LaurentMatrix canonical_basis(const Chamber& C) { return basis_from_vertices(C.side, chamber_vertices(C)); }

Chamber chamber_from_vertices(Side side, const std::vector<LatticeClass>& vertices) {
  if (vertices.empty()) throw Error(ErrorCode::RankError, "no vertices");
  const int n = vertices[0].n();
  if (static_cast<int>(vertices.size()) != n) throw Error(ErrorCode::RankError, "a chamber has n vertices");
  std::vector<LatticeClass> by_type(static_cast<size_t>(n));
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const auto& v : vertices) {
    if (v.side != side) throw Error(ErrorCode::SideMismatch, "vertex on the wrong side");
    int t = type_of(v);
    if (seen[t]) throw Error(ErrorCode::RankError, "repeated vertex type");
    seen[t] = 1;
    by_type[t] = v;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!incident(by_type[a], by_type[b])) throw Error(ErrorCode::RankError, "vertices are not pairwise incident");
  return chamber_from_basis(side, basis_from_vertices(side, by_type));
}

bool borel_membership(Side side, const LaurentMatrix& g) {
  if (!is_special(g)) throw Error(ErrorCode::NotSpecial, "Borel membership is defined for det 1 matrices");
  const int n = g.n();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const LaurentPoly& e = g(r, c);
      if (e.is_zero()) continue;
      if (side == Side::Plus) {
        if (e.low() < 0) return false;
        if (r > c && !e.coeff(0).is_zero()) return false;
      } else {
        if (e.high() > 0) return false;
        if (r < c && !e.coeff(0).is_zero()) return false;
      }
    }
  return true;
}

bool same_chamber(const Chamber& a, const Chamber& b) {
  if (a.side != b.side || a.n() != b.n()) return false;
  return borel_membership(a.side, normalize_rep(relative(a, b)));
}

AffineWeylElt delta(const Chamber& C, const Chamber& D) { return reduce_delta(C, D).w; }

AffineWeylElt codelta(const Chamber& C, const Chamber& D) { return reduce_codelta(C, D).w; }

bool opposite(const Chamber& a, const Chamber& b) { return codelta(a, b).is_identity(); }

int moved_type(Side side, int s, int n) {
  if (s < 1 || s > n) throw Error(ErrorCode::InvalidWord, "generator outside 1..n");
  if (s == n) return 0;
  return side == Side::Plus ? n - s : s;
}

Simplex panel_of(const Chamber& C, int s) {
  const int n = C.n();
  int t = moved_type(C.side, s, n);
  Simplex X{C, {}};
  for (int k = 0; k < n; ++k)
    if (k != t) X.types.push_back(k);
  return X;
}

Simplex vertex_of(const Chamber& C, int type) {
  if (type < 0 || type >= C.n()) throw Error(ErrorCode::RankError, "vertex type out of range");
  return Simplex{C, {type}};
}

std::vector<LatticeClass> simplex_vertices(const Simplex& X) {
  std::vector<LatticeClass> all = chamber_vertices(X.chamber);
  std::vector<LatticeClass> out;
  for (int t : X.types) out.push_back(all.at(t));
  return out;
}

std::vector<int> residue_type(const Simplex& X) {
  const int n = X.chamber.n();
  for (int t : X.types)
    if (t < 0 || t >= n) throw Error(ErrorCode::RankError, "simplex type out of range");
  std::vector<int> J;
  for (int s = 1; s <= n; ++s)
    if (std::find(X.types.begin(), X.types.end(), moved_type(X.chamber.side, s, n)) == X.types.end()) J.push_back(s);
  return J;
}

Word min_double_coset_rep(const CoxeterGroup& g, const Word& w, const std::vector<int>& J,
                          const std::vector<int>& K) {
  CoxElt x = g.element(w);
  CoxElt inv = g.inverse_element(w);
  for (bool changed = true; changed;) {
    changed = false;
    for (int s : J)
      if (g.is_right_descent(inv, s)) {  // left descent of x
        g.mul_left(x, s);
        g.mul_right(inv, s);
        changed = true;
      }
    for (int t : K)
      if (g.is_right_descent(x, t)) {
        g.mul_right(x, t);
        g.mul_left(inv, t);
        changed = true;
      }
  }
  return g.normal_form_of_inverse(inv);
}

TwinPosition simplex_delta(const Simplex& X, const Simplex& Y) {
  std::vector<int> J = residue_type(X), K = residue_type(Y);
  Word w = word_of(delta(X.chamber, Y.chamber));
  return TwinPosition{J, min_double_coset_rep(affine_group(X.chamber.n()), w, J, K), K};
}

TwinPosition simplex_codelta(const Simplex& X, const Simplex& Y) {
  std::vector<int> J = residue_type(X), K = residue_type(Y);
  Word w = word_of(codelta(X.chamber, Y.chamber));
  return TwinPosition{J, min_double_coset_rep(affine_group(X.chamber.n()), w, J, K), K};
}

Chamber project(const Simplex& X, const Chamber& C) {
  if (X.types.empty()) throw Error(ErrorCode::RankError, "projection onto the empty simplex");
  const Chamber& E = X.chamber;
  if (E.side != C.side) throw Error(ErrorCode::SideMismatch, "project needs the same side; use project_twin");
  std::vector<int> J = residue_type(X);
  Reduction<GaussRat> red = reduce_delta(C, E);  // rep(C)^{-1} rep(E) X = b n
  const int n = E.n();
  Word w1 = strip_right(affine_group(n), word_of(red.w), J);
  LaurentMatrix rep = E.rep * red.X * monomial_inverse(red.w) * word_matrix<GaussRat>(n, w1);
  return Chamber{E.side, normalize_rep(rep)};
}

Chamber project_twin_closed(const Simplex& X, const Chamber& C) {
  if (X.types.empty()) throw Error(ErrorCode::RankError, "projection onto the empty simplex");
  const Chamber& E = X.chamber;
  if (E.side == C.side) throw Error(ErrorCode::SideMismatch, "project_twin needs opposite sides");
  std::vector<int> J = residue_type(X);
  Reduction<GaussRat> red = reduce_codelta(C, E);
  const int n = E.n();
  const CoxeterGroup g = affine_group(n);
  Word wmax = grow_right(g, strip_right(g, word_of(red.w), J), J);
  LaurentMatrix rep = E.rep * red.X * monomial_inverse(red.w) * word_matrix<GaussRat>(n, wmax);
  return Chamber{E.side, normalize_rep(rep)};
}

Chamber panel_chart(const Chamber& D, int s, const std::optional<GaussRat>& t) {
  const int n = D.n();
  if (s < 1 || s > n) throw Error(ErrorCode::InvalidWord, "generator outside 1..n");
  if (!t) return Chamber{D.side, normalize_rep(D.rep * generator_matrix<GaussRat>(n, s))};
  return Chamber{D.side, normalize_rep(D.rep * chart_matrix<GaussRat>(D.side == Side::Plus, n, s, *t))};
}

std::optional<GaussRat> panel_chart_parameter(const Chamber& D, int s, const Chamber& E) {
  const int n = D.n();
  AffineWeylElt w = delta(D, E);
  if (!w.is_identity() && w != AffineWeylElt::generator(n, s))
    throw Error(ErrorCode::NotPanel, "chamber is not in the given panel");
  LaurentMatrix M = relative(D, E);
  GaussRat num, den;
  if (D.side == Side::Plus) {
    if (s < n) {
      num = M(s, s - 1).coeff(0);
      den = M(s - 1, s - 1).coeff(0);
    } else {
      num = M(0, n - 1).coeff(-1);
      den = M(n - 1, n - 1).coeff(0);
    }
  } else {
    if (s < n) {
      num = M(s - 1, s).coeff(0);
      den = M(s, s).coeff(0);
    } else {
      num = M(n - 1, 0).coeff(1);
      den = M(0, 0).coeff(0);
    }
  }
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

Chamber panel_chamber(const std::vector<LatticeClass>& panel, const std::optional<GaussRat>& t) {
  if (panel.empty()) throw Error(ErrorCode::RankError, "empty panel");
  LatticeClass v = panel_vertex(panel, t);
  std::vector<LatticeClass> all = panel;
  all.push_back(v);
  return chamber_from_vertices(panel[0].side, all);
}

LaurentMatrix common_representative(const Chamber& plus, const Chamber& minus) {
  if (plus.side != Side::Plus || minus.side != Side::Minus)
    throw Error(ErrorCode::SideMismatch, "common representative needs a plus and a minus chamber");
  Reduction<GaussRat> red = periodic_reduce(relative(minus, plus), Key::Top, Dir::Plus);
  if (!red.w.is_identity()) throw Error(ErrorCode::NotOpposite, "chambers are not opposite");
  return normalize_rep(plus.rep * red.X);
}

Chamber apartment_chamber(Side side, const LaurentMatrix& basis, const AffineWeylElt& w) {
  Chamber c = chamber_from_basis(side, basis);
  return Chamber{side, normalize_rep(c.rep * word_matrix<GaussRat>(c.n(), word_of(w)))};
}

std::vector<GaussRat> encode_coords(const Chamber& C0, const Chamber& D0, const Chamber& E, const Word& word) {
  if (C0.side != Side::Plus || E.side != Side::Plus || D0.side != Side::Minus)
    throw Error(ErrorCode::SideMismatch, "coordinates need C0, E on the plus side and D0 on the minus side");
  const int n = C0.n();
  const CoxeterGroup g = affine_group(n);
  g.check_word(word);
  if (g.length(word) != static_cast<int>(word.size())) throw Error(ErrorCode::NotReduced, "word is not reduced");
  LaurentMatrix k0 = common_representative(C0, D0);
  if (delta(C0, E) != word_to_affine(word, n)) throw Error(ErrorCode::DistanceMismatch, "delta(C0, E) differs from the word");
  const size_t r = word.size();
  std::vector<Chamber> gallery(r + 1);
  gallery[r] = E;
  for (size_t k = r; k >= 1; --k) gallery[k - 1] = project(panel_of(gallery[k], word[k - 1]), C0);
  std::vector<GaussRat> coords;
  Chamber Dprev{Side::Minus, k0};
  for (size_t k = 1; k <= r; ++k) {
    const int s = word[k - 1];
    Chamber Xk = project_twin(panel_of(Dprev, s), gallery[k]);
    auto c = panel_chart_parameter(Dprev, s, Xk);
    if (!c) throw Error(ErrorCode::DistanceMismatch, "twin projection landed on the apartment chamber");
    coords.push_back(*c);
    Dprev = Chamber{Side::Minus, Dprev.rep * generator_matrix<GaussRat>(n, s)};
  }
  return coords;
}

Chamber decode_coords(const Chamber& C0, const Chamber& D0, const Word& word, const std::vector<GaussRat>& coords) {
  if (C0.side != Side::Plus || D0.side != Side::Minus)
    throw Error(ErrorCode::SideMismatch, "coordinates need C0 on the plus side and D0 on the minus side");
  if (coords.size() != word.size()) throw Error(ErrorCode::InvalidArgument, "one coordinate per letter is required");
  const int n = C0.n();
  const CoxeterGroup g = affine_group(n);
  g.check_word(word);
  if (g.length(word) != static_cast<int>(word.size())) throw Error(ErrorCode::NotReduced, "word is not reduced");
  LaurentMatrix k0 = common_representative(C0, D0);
  Chamber C = C0;
  Chamber Dprev{Side::Minus, k0};
  for (size_t k = 1; k <= word.size(); ++k) {
    const int s = word[k - 1];
    Chamber Xk = panel_chart(Dprev, s, coords[k - 1]);
    C = project_twin(panel_of(C, s), Xk);
    Dprev = Chamber{Side::Minus, Dprev.rep * generator_matrix<GaussRat>(n, s)};
  }
  return C;
}

}  // namespace tb
