#include "twinbuild/veronese.hpp"

#include <algorithm>

#include "twinbuild/error.hpp"

namespace tb {

Subspace span_of(const QMatrix& rows) {
  std::vector<int> piv;
  QMatrix e = rows.rref(&piv);
  QMatrix b(static_cast<int>(piv.size()), rows.cols());
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) b(r, c) = e(r, c);
  return Subspace{b, rows.cols()};
}

Subspace coordinate_subspace(int n, int k) {
  QMatrix b(k, n);
  for (int i = 0; i < k; ++i) b(i, i) = GaussRat(1);
  return Subspace{b, n};
}

Subspace perp(const Subspace& V) {
  const int n = V.ambient;
  if (V.dim() == 0) return coordinate_subspace(n, n);
  // y ⊥ V iff conj(B) y = 0
  QMatrix cb(V.dim(), n);
  for (int r = 0; r < V.dim(); ++r)
    for (int c = 0; c < n; ++c) cb(r, c) = V.basis(r, c).conj();
  return span_of(cb.kernel().transpose());
}

Subspace direct_sum(const Subspace& a, const Subspace& b) {
  QMatrix m(a.dim() + b.dim(), a.ambient);
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.ambient; ++c) m(r, c) = a.basis(r, c);
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < a.ambient; ++c) m(a.dim() + r, c) = b.basis(r, c);
  return span_of(m);
}

bool contains(const Subspace& big, const Subspace& small) { return direct_sum(big, small).dim() == big.dim(); }

std::vector<int> SubspaceFlag::types() const {
  std::vector<int> t;
  for (const auto& p : parts) t.push_back(p.dim());
  return t;
}

SubspaceFlag make_flag(std::vector<Subspace> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    const Subspace& p = parts[i];
    if (p.dim() == 0 || p.dim() == p.ambient) throw Error(ErrorCode::TrivialSubspace, "flag members must be proper and nonzero");
    if (i && (p.ambient != parts[i - 1].ambient || p.dim() <= parts[i - 1].dim() || !contains(p, parts[i - 1])))
      throw Error(ErrorCode::InvalidArgument, "flag members must be strictly increasing");
  }
  return SubspaceFlag{std::move(parts)};
}

SubspaceFlag perp(const SubspaceFlag& U) {
  std::vector<Subspace> out;
  for (auto it = U.parts.rbegin(); it != U.parts.rend(); ++it) out.push_back(perp(*it));
  return SubspaceFlag{out};
}

SubspaceFlag coordinate_flag(int n, const std::vector<int>& dims) {
  std::vector<Subspace> parts;
  for (int d : dims) parts.push_back(coordinate_subspace(n, d));
  return make_flag(parts);
}

QMatrix projector_of(const Subspace& V) {
  const int n = V.ambient;
  if (V.dim() == 0 || V.dim() == n) throw Error(ErrorCode::TrivialSubspace, "projector needs 0 < dim V < n");
  // orthogonal projector onto the column span of A is A(A*A)^{-1}A*; here A = B^T
  QMatrix A = V.basis.transpose();
  QMatrix As = A.conj_transpose();
  QMatrix onto = A * (As * A).inverse() * As;
  return QMatrix::identity(n) - onto;
}

QMatrix traceless(const QMatrix& X) {
  GaussRat shift = X.trace() / GaussRat(X.rows());
  return X - QMatrix::identity(X.rows()).scaled(shift);
}

QMatrix spherical_veronese(const SubspaceFlag& U, const std::vector<GaussRat>& weights) {
  if (U.parts.empty()) throw Error(ErrorCode::WeightMismatch, "empty flag");
  if (weights.size() != U.parts.size()) throw Error(ErrorCode::WeightMismatch, "one weight per flag member is required");
  GaussRat total;
  for (const auto& p : weights) {
    if (!p.is_real() || sgn(p.re()) <= 0) throw Error(ErrorCode::WeightMismatch, "weights must be positive rationals");
    total += p;
  }
  if (!total.is_one()) throw Error(ErrorCode::WeightMismatch, "weights must sum to 1");
  const int n = U.parts[0].ambient;
  QMatrix X(n, n);
  for (size_t i = 0; i < U.parts.size(); ++i) X = X + traceless(projector_of(U.parts[i])).scaled(weights[i]);
  return X;
}

namespace {

using RPoly = std::vector<Rational>;  // ascending, trimmed

void trim(RPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational eval(const RPoly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

RPoly remainder(RPoly a, const RPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RPoly gcd(RPoly a, RPoly b) {
  while (!b.empty()) {
    RPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RPoly quotient(RPoly a, const RPoly& b) {
  RPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

int sign_changes(const std::vector<RPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Roots in (a, b] of the square-free polynomial whose Sturm chain is given.
int roots_in(const std::vector<RPoly>& chain, const Rational& a, const Rational& b) {
  return sign_changes(chain, a) - sign_changes(chain, b);
}

// Characteristic polynomial det(t − X) by Faddeev–LeVerrier.
std::vector<GaussRat> charpoly(const QMatrix& X) {
  const int n = X.rows();
  std::vector<GaussRat> c(static_cast<size_t>(n) + 1);
  c[n] = GaussRat(1);
  QMatrix M(n, n);
  for (int k = 1; k <= n; ++k) {
    M = X * M + QMatrix::identity(n).scaled(c[n - k + 1]);
    c[n - k] = -(X * M).trace() / GaussRat(k);
  }
  return c;
}

}  // namespace

FlagRecovery recover_flag(const QMatrix& X) {
  const int n = X.rows();
  if (X.cols() != n) throw Error(ErrorCode::InvalidArgument, "operator must be square");
  if (!(X == X.conj_transpose())) throw Error(ErrorCode::InvalidArgument, "operator is not hermitian");
  if (!X.trace().is_zero()) throw Error(ErrorCode::NotInImage, "operator is not traceless");

  RPoly f;
  for (const auto& c : charpoly(X)) {
    if (!c.is_real()) throw Error(ErrorCode::NotInImage, "characteristic polynomial is not real");
    f.push_back(c.re());
  }
  trim(f);
  RPoly s = quotient(f, gcd(f, derivative(f)));
  Rational lead = s.back();
  for (auto& c : s) c /= lead;
  // Rational roots of s have denominators dividing the lcm L of its coefficients' denominators.
  mpz_class L = 1;
  for (const auto& c : s) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  Rational bound = 1;
  for (const auto& c : s) {
    Rational b = 1 + abs(c);
    if (b > bound) bound = b;
  }

  std::vector<RPoly> chain{s, derivative(s)};
  while (chain.back().size() > 1) {
    RPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  const int degree = static_cast<int>(s.size()) - 1;
  if (roots_in(chain, -bound, bound) != degree) throw Error(ErrorCode::NotInImage, "eigenvalues are not all real");

  std::vector<Rational> roots;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  const Rational width = Rational(1) / Rational(L);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int k = roots_in(chain, a, b);
    if (k == 0) continue;
    if (k == 1 && b - a < width) {
      mpz_class p = b.get_num() * L;
      mpz_fdiv_q(p.get_mpz_t(), p.get_mpz_t(), b.get_den_mpz_t());
      Rational cand(p, L);
      cand.canonicalize();
      if (cand <= a || sgn(eval(s, cand)) != 0) throw Error(ErrorCode::NotInImage, "an eigenvalue is irrational");
      roots.push_back(cand);
      continue;
    }
    Rational mid = (a + b) / 2;
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }
  std::sort(roots.begin(), roots.end());
  if (roots.size() < 2) throw Error(ErrorCode::NotInImage, "a scalar operator represents no flag");

  FlagRecovery out;
  Subspace acc{QMatrix(0, n), n};
  for (size_t i = 0; i < roots.size(); ++i) {
    QMatrix shifted = X - QMatrix::identity(n).scaled(GaussRat(roots[i]));
    Subspace eig = span_of(shifted.kernel().transpose());
    out.eigenvalues.push_back(GaussRat(roots[i]));
    out.multiplicities.push_back(eig.dim());
    acc = direct_sum(acc, eig);
    if (i + 1 < roots.size()) out.flag.parts.push_back(acc);
  }
  if (acc.dim() != n) throw Error(ErrorCode::NotInImage, "operator is not diagonalizable");
  return out;
}

GaussRat squared_distance(const QMatrix& A, const QMatrix& B) {
  QMatrix d = A - B;
  return (d.conj_transpose() * d).trace();
}

LaurentMatrix constant_matrix(const QMatrix& m) {
  LaurentMatrix out(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = LaurentPoly(m(r, c));
  return out;
}

QMatrix constant_part(const LaurentMatrix& m) {
  QMatrix out(m.n(), m.n());
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c) out(r, c) = m(r, c).coeff(0);
  return out;
}

namespace {

void check_projector(const QMatrix& P) {
  if (P.rows() != P.cols() || !(P * P == P) || !(P.conj_transpose() == P))
    throw Error(ErrorCode::NonProjector, "expected a self-adjoint projector");
}

void check_loop(const LaurentMatrix& g) {
  if (!is_unitary_loop(g)) throw Error(ErrorCode::NotUnitary, "g g^# != 1");
  if (!g.det().is_constant()) throw Error(ErrorCode::NotSpecial, "unitary loop must have constant determinant");
}

}  // namespace

LaurentMatrix unitary_loop(const QMatrix& P) {
  check_projector(P);
  const int n = P.rows();
  return LaurentMatrix::identity(n) + constant_matrix(P).scaled(LaurentPoly::z(1) - LaurentPoly(GaussRat(1)));
}

LaurentMatrix unitary_loop_sl(const QMatrix& P, const QMatrix& Q) {
  check_projector(Q);
  if (!(P.trace() == Q.trace())) throw Error(ErrorCode::InvalidArgument, "projectors must have equal rank");
  return unitary_loop(P) * sharp(unitary_loop(Q));
}

bool is_unitary_loop(const LaurentMatrix& g) { return (g * sharp(g)).is_identity(); }

LaurentMatrix gauge(const LaurentMatrix& g, const LaurentMatrix& X) {
  check_loop(g);
  LaurentMatrix gs = sharp(g);
  return g * X * gs + g.z_d_dz() * gs;
}

LaurentMatrix coordinate_projector(int n, int k) {
  if (k < 0 || k >= n) throw Error(ErrorCode::InvalidArgument, "type must lie in 0..n-1");
  LaurentMatrix p(n);
  for (int i = 0; i < k; ++i) p(i, i) = LaurentPoly(GaussRat(1));
  return p;
}

LaurentMatrix affine_veronese_vertex(const LaurentMatrix& g, int k) {
  const int n = g.n();
  LaurentMatrix pt = coordinate_projector(n, k) - LaurentMatrix::identity(n).scaled(LaurentPoly(GaussRat::frac(k, n)));
  return gauge(g, pt);
}

LaurentMatrix barycentric_affine_veronese(const LaurentMatrix& g, const std::vector<std::pair<int, GaussRat>>& weights) {
  if (weights.empty()) throw Error(ErrorCode::WeightMismatch, "no weights");
  const int n = g.n();
  GaussRat total;
  std::vector<int> seen;
  LaurentMatrix X(n);
  for (const auto& [k, w] : weights) {
    if (k < 0 || k >= n || std::find(seen.begin(), seen.end(), k) != seen.end())
      throw Error(ErrorCode::WeightMismatch, "types must be distinct and lie in 0..n-1");
    if (!w.is_real() || sgn(w.re()) <= 0) throw Error(ErrorCode::WeightMismatch, "weights must be positive rationals");
    seen.push_back(k);
    total += w;
    X = X + affine_veronese_vertex(g, k).scaled(LaurentPoly(w));
  }
  if (!total.is_one()) throw Error(ErrorCode::WeightMismatch, "weights must sum to 1");
  return X;
}

LaurentMatrix caveat_operator(int n, const GaussRat& scale) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "n must be at least 2");
  LaurentPoly a = (LaurentPoly::z(1) + LaurentPoly::z(-1)).scaled(scale);
  LaurentMatrix X(n);
  for (int i = 0; i + 1 < n; ++i) X(i, i) = a;
  X(n - 1, n - 1) = a.scaled(GaussRat(1 - n));
  return X;
}

bool truncated_kernel_free(const LaurentMatrix& X, int N) {
  const int n = X.n();
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "degree bound must be positive");
  int lo = 0, hi = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!X(i, j).is_zero()) {
        lo = std::min(lo, X(i, j).low());
        hi = std::max(hi, X(i, j).high());
      }
  const int width = 2 * N + 1;
  const int out_lo = -N + lo, out_width = 2 * N + 1 + hi - lo;
  auto var = [&](int m, int j) { return (m + N) * n + j; };
  int outside = 0;
  for (int m = -N; m <= N; ++m)
    if (m < -N + 2 || m > N - 2) outside += n;
  for (int num = -N * n; num <= N * n; ++num) {
    const GaussRat lambda = GaussRat::frac(num, n);
    QMatrix A(out_width * n + outside, width * n);
    for (int m = -N; m <= N; ++m)
      for (int j = 0; j < n; ++j) {
        const int col = var(m, j);
        A((m - out_lo) * n + j, col) += GaussRat(m) - lambda;
        for (int i = 0; i < n; ++i)
          for (const auto& [e, c] : X(i, j).terms()) A((m + e - out_lo) * n + i, col) -= c;
      }
    int row = out_width * n;
    for (int m = -N; m <= N; ++m)
      if (m < -N + 2 || m > N - 2)
        for (int j = 0; j < n; ++j) A(row++, var(m, j)) = GaussRat(1);
    if (A.rank() < width * n) return false;
  }
  return true;
}

bool caveat_check(int n, int N, const GaussRat& scale) { return truncated_kernel_free(caveat_operator(n, scale), N); }

}  // namespace tb
