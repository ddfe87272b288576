#include "twinbuild/affine.hpp"

#include <cstdlib>

#include "twinbuild/error.hpp"

namespace tb {

AffineWeylElt AffineWeylElt::identity(int n) {
  AffineWeylElt e;
  e.perm.resize(static_cast<size_t>(n));
  e.k.assign(static_cast<size_t>(n), 0);
  for (int c = 0; c < n; ++c) e.perm[c] = c;
  return e;
}

AffineWeylElt AffineWeylElt::generator(int n, int s) {
  if (s < 1 || s > n) throw Error(ErrorCode::InvalidWord, "generator " + std::to_string(s) + " outside 1.." + std::to_string(n));
  AffineWeylElt g = identity(n);
  if (s < n) {
    std::swap(g.perm[s - 1], g.perm[s]);
  } else {
    // e_1 -> z e_n, e_n -> z^{-1} e_1
    std::swap(g.perm[0], g.perm[n - 1]);
    g.k[0] = -1;
    g.k[n - 1] = 1;
  }
  return g;
}

AffineWeylElt AffineWeylElt::operator*(const AffineWeylElt& o) const {
  // N(π,k) N(π',k') e_c = z^{k_{ππ'(c)} + k'_{π'(c)}} e_{ππ'(c)}.
  const int dim = n();
  AffineWeylElt r;
  r.perm.resize(static_cast<size_t>(dim));
  r.k.assign(static_cast<size_t>(dim), 0);
  for (int c = 0; c < dim; ++c) {
    int mid = o.perm[c];
    int row = perm[mid];
    r.perm[c] = row;
    r.k[row] = k[row] + o.k[mid];
  }
  return r;
}

AffineWeylElt AffineWeylElt::inverse() const {
  // N^{-1} e_r = z^{-k_r} e_{π^{-1}(r)}.
  const int dim = n();
  AffineWeylElt r;
  r.perm.resize(static_cast<size_t>(dim));
  r.k.assign(static_cast<size_t>(dim), 0);
  for (int c = 0; c < dim; ++c) {
    int row = perm[c];
    r.perm[row] = c;
    r.k[c] = -k[row];
  }
  return r;
}

bool AffineWeylElt::is_identity() const { return *this == identity(n()); }

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

long AffineWeylElt::length() const {
  // Window of the affine permutation: position j = n+1−c carries value
  // n·k_{π(c)} + (n+1−π(c)) (1-based c); length by the inversion formula
  // Σ_{i<j} |⌊(F(j) − F(i))/n⌋|.
  const long dim = n();
  std::vector<long> F(static_cast<size_t>(dim) + 1);
  for (int c1 = 1; c1 <= dim; ++c1) {
    long row1 = perm[c1 - 1] + 1;
    F[static_cast<size_t>(dim + 1 - c1)] = dim * k[row1 - 1] + (dim + 1 - row1);
  }
  long total = 0;
  for (long i = 1; i <= dim; ++i)
    for (long j = i + 1; j <= dim; ++j) total += std::labs(floor_div(F[j] - F[i], dim));
  return total;
}

std::string AffineWeylElt::str() const {
  std::string out = "pi=[";
  for (int c = 0; c < n(); ++c) out += (c ? "," : "") + std::to_string(perm[c] + 1);
  out += "] k=[";
  for (int c = 0; c < n(); ++c) out += (c ? "," : "") + std::to_string(k[c]);
  return out + "]";
}

AffineWeylElt word_to_affine(const Word& w, int n) {
  AffineWeylElt x = AffineWeylElt::identity(n);
  for (int s : w) x = x * AffineWeylElt::generator(n, s);
  return x;
}

Word affine_to_word(const AffineWeylElt& x) {
  const int n = x.n();
  AffineWeylElt cur = x;
  long len = cur.length();
  Word rev;
  while (len > 0) {
    bool stepped = false;
    for (int s = 1; s <= n; ++s) {
      AffineWeylElt y = cur * AffineWeylElt::generator(n, s);
      long ly = y.length();
      if (ly < len) {
        rev.push_back(s);
        cur = std::move(y);
        len = ly;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw Error(ErrorCode::InvalidArgument, "no descent found for " + x.str());
  }
  Word w(rev.rbegin(), rev.rend());
  return CoxeterGroup(coxeter_matrix(CoxeterKind::AffineA, n)).reduce(w);
}

AffineWeylElt finite_part(const AffineWeylElt& x) {
  AffineWeylElt r = x;
  for (auto& v : r.k) v = 0;
  return r;
}

}  // namespace tb
