#include "twinbuild/lattice.hpp"

#include <algorithm>

#include "twinbuild/error.hpp"

namespace tb {

const char* side_name(Side s) { return s == Side::Plus ? "plus" : "minus"; }

Side parse_side(const std::string& text) {
  if (text == "plus" || text == "+") return Side::Plus;
  if (text == "minus" || text == "-") return Side::Minus;
  throw Error(ErrorCode::Parse, "side must be plus or minus, got '" + text + "'");
}

std::vector<LaurentPoly> column_of(const LaurentMatrix& m, int j) {
  Column c(static_cast<size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) c[i] = m(i, j);
  return c;
}

LaurentMatrix from_columns(const std::vector<Column>& cols) {
  const int n = static_cast<int>(cols.size());
  LaurentMatrix m(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

namespace {

Column invert_variable(Column c) {
  for (auto& e : c) e = e.inverted();
  return c;
}

// Polynomial division for Laurent polynomials with nonnegative exponents.
LaurentPoly poly_quotient(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& rem) {
  rem = a;
  LaurentPoly q;
  const int db = b.high();
  const GaussRat inv = b.high_coeff().inverse();
  while (!rem.is_zero() && rem.high() >= db) {
    int shift = rem.high() - db;
    GaussRat f = rem.high_coeff() * inv;
    q += LaurentPoly::monomial(f, shift);
    rem.axpy(-f, shift, b);
  }
  return q;
}

void col_axpy(Column& x, const LaurentPoly& f, const Column& y) {
  // x -= f y
  for (const auto& [e, c] : f.terms())
    for (size_t i = 0; i < x.size(); ++i) x[i].axpy(-c, e, y[i]);
}

LaurentMatrix hnf_plus(std::vector<Column> cols, int n) {
  int minexp = 0;
  for (const auto& c : cols)
    for (const auto& e : c)
      if (!e.is_zero()) minexp = std::min(minexp, e.low());
  const int K = -minexp;
  if (K)
    for (auto& c : cols)
      for (auto& e : c) e = e.shifted(K);

  std::vector<Column> pivot(static_cast<size_t>(n));
  std::vector<Column> rest = std::move(cols);
  for (int row = n - 1; row >= 0; --row) {
    for (;;) {
      int best = -1;
      for (int j = 0; j < static_cast<int>(rest.size()); ++j) {
        const LaurentPoly& e = rest[j][row];
        if (e.is_zero()) continue;
        if (best < 0 || e.high() < rest[best][row].high()) best = j;
      }
      if (best < 0) throw Error(ErrorCode::DegenerateLattice, "generators do not span a lattice of full rank");
      bool alone = true;
      for (int j = 0; j < static_cast<int>(rest.size()); ++j) {
        if (j == best || rest[j][row].is_zero()) continue;
        alone = false;
        LaurentPoly rem;
        LaurentPoly q = poly_quotient(rest[j][row], rest[best][row], rem);
        col_axpy(rest[j], q, rest[best]);
      }
      if (alone) {
        pivot[row] = std::move(rest[best]);
        rest.erase(rest.begin() + best);
        break;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    LaurentPoly& d = pivot[i][i];
    if (!d.is_monomial())
      throw Error(ErrorCode::DegenerateLattice, "lattice generators are not invertible over the Laurent ring");
    GaussRat inv = d.low_coeff().inverse();
    for (auto& e : pivot[i]) e = e.scaled(inv);
  }
  for (int j = 1; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) {
      const int di = pivot[i][i].low();
      const LaurentPoly& e = pivot[j][i];
      if (e.is_zero() || e.high() < di) continue;
      LaurentPoly q;
      for (const auto& [ex, c] : e.terms())
        if (ex >= di) q += LaurentPoly::monomial(c, ex - di);
      col_axpy(pivot[j], q, pivot[i]);
    }
  LaurentMatrix h = from_columns(pivot);
  if (K) h = h.map([K](const LaurentPoly& p) { return p.shifted(-K); });
  return h;
}

LaurentMatrix to_plus(Side side, const LaurentMatrix& m) {
  return side == Side::Plus ? m : m.inverted_variable();
}

int diag_degree(const LaurentMatrix& h) {
  int d = 0;
  for (int i = 0; i < h.n(); ++i) d += h(i, i).low();
  return d;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

int floor_div(int a, int b) { return (a - mod(a, b)) / b; }

// Plus-side helpers operating on canonical matrices.
bool contains_plus(const LaurentMatrix& h, Column v) {
  const int n = h.n();
  for (int i = n - 1; i >= 0; --i) {
    if (v[i].is_zero()) continue;
    const LaurentPoly& d = h(i, i);
    LaurentPoly x = v[i].shifted(-d.low()).scaled(d.low_coeff().inverse());
    if (x.low() < 0) return false;
    for (int r = 0; r <= i; ++r) v[r] -= x * h(r, i);
  }
  return true;
}

bool subset_plus(const LaurentMatrix& small, const LaurentMatrix& big_canon) {
  for (int j = 0; j < small.n(); ++j)
    if (!contains_plus(big_canon, column_of(small, j))) return false;
  return true;
}

std::optional<int> shift_plus(const LaurentMatrix& a, const LaurentMatrix& b) {
  const int n = a.n();
  const int ea = diag_degree(a), eb = diag_degree(b);
  // z^k b ⊆ a needs kn + eb >= ea; z a ⊆ z^k b needs n + ea >= kn + eb.
  const int lo = ea - eb;
  const int kmax = floor_div(lo + n, n);
  const int kmin = -floor_div(-lo, n);
  LaurentMatrix za = a.scaled(LaurentPoly::z(1));
  for (int k = kmin; k <= kmax; ++k) {
    LaurentMatrix zb = b.scaled(LaurentPoly::z(k));
    if (subset_plus(zb, a) && subset_plus(za, zb)) return k;
  }
  return std::nullopt;
}

std::vector<GaussRat> constant_terms(const Column& c) {
  std::vector<GaussRat> v;
  for (const auto& e : c) v.push_back(e.coeff(0));
  return v;
}

// Coordinates of v in the basis given by the columns of canonical h (v ∈ span h).
Column coordinates_plus(const LaurentMatrix& h, Column v) {
  const int n = h.n();
  Column x(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    if (v[i].is_zero()) continue;
    const LaurentPoly& d = h(i, i);
    x[i] = v[i].shifted(-d.low()).scaled(d.low_coeff().inverse());
    for (int r = 0; r <= i; ++r) v[r] -= x[i] * h(r, i);
  }
  return x;
}

struct PanelFrame {
  LaurentMatrix P;  // canonical, type j-1
  LaurentMatrix Q;  // z^k Q, type j+1, zP ⊆ Q ⊆ P, dim P/Q = 2
  QMatrix qbar_rref;
  std::vector<int> qbar_pivots;
  int a = -1, b = -1;  // non-pivot coordinates
  Side side;
};

PanelFrame panel_frame(const std::vector<LatticeClass>& panel) {
  if (panel.empty()) throw Error(ErrorCode::RankError, "empty panel");
  const int n = panel[0].n();
  const Side side = panel[0].side;
  if (static_cast<int>(panel.size()) != n - 1)
    throw Error(ErrorCode::RankError, "a panel has exactly n-1 vertices");
  std::vector<int> types;
  for (const auto& c : panel) {
    if (c.side != side || c.n() != n) throw Error(ErrorCode::RankError, "panel vertices must share side and rank");
    types.push_back(type_of(c));
  }
  std::vector<int> sorted = types;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::RankError, "panel vertex types are not distinct");
  for (size_t x = 0; x < panel.size(); ++x)
    for (size_t y = x + 1; y < panel.size(); ++y)
      if (!incident(panel[x], panel[y])) throw Error(ErrorCode::RankError, "panel vertices are not pairwise incident");
  int missing = 0;
  while (std::find(types.begin(), types.end(), missing) != types.end()) ++missing;
  auto by_type = [&](int t) {
    for (size_t x = 0; x < panel.size(); ++x)
      if (types[x] == mod(t, n)) return to_plus(side, panel[x].canon);
    throw Error(ErrorCode::RankError, "panel is missing a neighbouring type");
  };
  PanelFrame f;
  f.side = side;
  f.P = by_type(missing - 1);
  if (n == 2) {
    f.Q = f.P.scaled(LaurentPoly::z(1));
  } else {
    LaurentMatrix q = by_type(missing + 1);
    auto k = shift_plus(f.P, q);
    if (!k) throw Error(ErrorCode::RankError, "panel vertices are not incident");
    f.Q = q.scaled(LaurentPoly::z(*k));
  }
  std::vector<std::vector<GaussRat>> rows;
  for (int j = 0; j < n; ++j) rows.push_back(constant_terms(coordinates_plus(f.P, column_of(f.Q, j))));
  QMatrix qbar = QMatrix::from_columns(rows, n).transpose();
  f.qbar_rref = qbar.rref(&f.qbar_pivots);
  if (static_cast<int>(f.qbar_pivots.size()) != n - 2) throw Error(ErrorCode::RankError, "panel quotient is not two-dimensional");
  for (int c = 0; c < n; ++c) {
    if (std::find(f.qbar_pivots.begin(), f.qbar_pivots.end(), c) != f.qbar_pivots.end()) continue;
    (f.a < 0 ? f.a : f.b) = c;
  }
  return f;
}

LatticeClass make_class(Side side, const LaurentMatrix& plus_canon) {
  int minexp = 0;
  bool first = true;
  for (int i = 0; i < plus_canon.n(); ++i)
    for (int j = 0; j < plus_canon.n(); ++j) {
      const LaurentPoly& e = plus_canon(i, j);
      if (e.is_zero()) continue;
      minexp = first ? e.low() : std::min(minexp, e.low());
      first = false;
    }
  LaurentMatrix c = plus_canon.map([minexp](const LaurentPoly& p) { return p.shifted(-minexp); });
  return LatticeClass{side, side == Side::Plus ? c : c.inverted_variable()};
}

}  // namespace

LaurentMatrix canonical_lattice(Side side, const std::vector<Column>& cols, int n) {
  if (static_cast<int>(cols.size()) < n) throw Error(ErrorCode::DegenerateLattice, "fewer generators than the rank");
  if (side == Side::Plus) return hnf_plus(cols, n);
  std::vector<Column> inv;
  for (const auto& c : cols) inv.push_back(invert_variable(c));
  return hnf_plus(std::move(inv), n).inverted_variable();
}

LaurentMatrix canonical_lattice(const Lattice& L) {
  LaurentPoly d = L.gens.det();
  if (!d.is_monomial()) throw Error(ErrorCode::DegenerateLattice, "generator matrix is not invertible over the Laurent ring");
  std::vector<Column> cols;
  for (int j = 0; j < L.gens.n(); ++j) cols.push_back(column_of(L.gens, j));
  return canonical_lattice(L.side, cols, L.gens.n());
}

LatticeClass canonical_class(const Lattice& L) {
  return make_class(L.side, to_plus(L.side, canonical_lattice(L)));
}

int type_of(const LatticeClass& c) { return mod(diag_degree(to_plus(c.side, c.canon)), c.n()); }

bool lattice_contains(Side side, const LaurentMatrix& canon, const Column& v) {
  if (side == Side::Plus) return contains_plus(canon, v);
  return contains_plus(canon.inverted_variable(), invert_variable(v));
}

bool lattice_subset(Side side, const LaurentMatrix& small, const LaurentMatrix& big) {
  Lattice L{side, big};
  LaurentMatrix canon = to_plus(side, canonical_lattice(L));
  return subset_plus(to_plus(side, small), canon);
}

std::optional<int> incidence_shift(const LatticeClass& a, const LatticeClass& b) {
  if (a.side != b.side) throw Error(ErrorCode::SideMismatch, "incidence needs classes on the same side");
  if (a.n() != b.n()) throw Error(ErrorCode::InvalidArgument, "classes of different rank");
  auto k = shift_plus(to_plus(a.side, a.canon), to_plus(b.side, b.canon));
  if (k && a.side == Side::Minus) return -*k;
  return k;
}

bool incident(const LatticeClass& a, const LatticeClass& b) { return incidence_shift(a, b).has_value(); }

LatticeClass panel_vertex(const std::vector<LatticeClass>& panel, const std::optional<GaussRat>& t) {
  PanelFrame f = panel_frame(panel);
  const int n = f.P.n();
  std::vector<Column> gens;
  for (int j = 0; j < n; ++j) gens.push_back(column_of(f.Q, j));
  Column ha = column_of(f.P, f.a), hb = column_of(f.P, f.b);
  Column v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = t ? ha[i].scaled(*t) + hb[i] : ha[i];
  gens.push_back(v);
  return make_class(f.side, hnf_plus(gens, n));
}

std::optional<GaussRat> panel_parameter(const std::vector<LatticeClass>& panel, const LatticeClass& v) {
  PanelFrame f = panel_frame(panel);
  const int n = f.P.n();
  LaurentMatrix vp = to_plus(v.side, v.canon);
  const int gap = diag_degree(f.P) + 1 - diag_degree(vp);
  if (mod(gap, n) != 0) throw Error(ErrorCode::NotPanel, "vertex has the wrong type for this panel");
  std::optional<int> k = gap / n;
  {
    LaurentMatrix zv = vp.scaled(LaurentPoly::z(*k));
    std::vector<Column> c;
    for (int j = 0; j < n; ++j) c.push_back(column_of(zv, j));
    if (!subset_plus(zv, f.P) || !subset_plus(f.Q, hnf_plus(c, n)))
      throw Error(ErrorCode::NotPanel, "vertex does not complete the panel to a chamber");
  }
  LaurentMatrix zv = vp.scaled(LaurentPoly::z(*k));
  for (int j = 0; j < n; ++j) {
    std::vector<GaussRat> x = constant_terms(coordinates_plus(f.P, column_of(zv, j)));
    // reduce modulo the pivots of Q/zP
    for (size_t r = 0; r < f.qbar_pivots.size(); ++r) {
      int p = f.qbar_pivots[r];
      if (x[p].is_zero()) continue;
      GaussRat c = x[p];
      for (int col = 0; col < n; ++col) x[col] -= c * f.qbar_rref(static_cast<int>(r), col);
    }
    if (x[f.a].is_zero() && x[f.b].is_zero()) continue;
    if (x[f.b].is_zero()) return std::nullopt;
    return x[f.a] / x[f.b];
  }
  throw Error(ErrorCode::NotPanel, "vertex coincides with a panel vertex");
}

}  // namespace tb
