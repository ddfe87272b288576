#pragma once

#include <utility>
#include <vector>

#include "twinbuild/dense.hpp"
#include "twinbuild/matrix.hpp"

namespace tb {

// Subspace of Q(i)^n; rows of `basis` are in reduced row echelon form.
struct Subspace {
  QMatrix basis;
  int ambient = 0;
  int dim() const { return basis.rows(); }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
};

// Row span of `rows` (zero rows allowed).
Subspace span_of(const QMatrix& rows);
Subspace coordinate_subspace(int n, int k);  // span{e_1..e_k}
// Orthogonal complement for <x,y> = sum conj(x_i) y_i.
Subspace perp(const Subspace& V);
bool contains(const Subspace& big, const Subspace& small);
Subspace direct_sum(const Subspace& a, const Subspace& b);

struct SubspaceFlag {
  std::vector<Subspace> parts;  // strictly increasing, proper and nonzero
  std::vector<int> types() const;
  friend bool operator==(const SubspaceFlag& a, const SubspaceFlag& b) { return a.parts == b.parts; }
};

SubspaceFlag make_flag(std::vector<Subspace> parts);
SubspaceFlag perp(const SubspaceFlag& U);
SubspaceFlag coordinate_flag(int n, const std::vector<int>& dims);

// Self-adjoint projector with kernel V (image V^⊥), 0 < dim V < n.
QMatrix projector_of(const Subspace& V);
QMatrix traceless(const QMatrix& X);
QMatrix spherical_veronese(const SubspaceFlag& U, const std::vector<GaussRat>& weights);

struct FlagRecovery {
  SubspaceFlag flag;
  std::vector<GaussRat> eigenvalues;  // ascending, distinct
  std::vector<int> multiplicities;
};
// Exact: characteristic polynomial, Sturm isolation of its real roots and the
// denominator bound for rational roots.
FlagRecovery recover_flag(const QMatrix& X);
// Squared Frobenius distance tr((A-B)*(A-B)).
GaussRat squared_distance(const QMatrix& A, const QMatrix& B);

LaurentMatrix constant_matrix(const QMatrix& m);
QMatrix constant_part(const LaurentMatrix& m);

// g_P = 1 + (z-1)P for a self-adjoint projector P.
LaurentMatrix unitary_loop(const QMatrix& P);
// g_P g_Q^{-1}, with rank P = rank Q so that det = 1.
LaurentMatrix unitary_loop_sl(const QMatrix& P, const QMatrix& Q);
bool is_unitary_loop(const LaurentMatrix& g);

// X -> g X g^# + (z d/dz g) g^#. Requires g g^# = 1 and det g constant.
LaurentMatrix gauge(const LaurentMatrix& g, const LaurentMatrix& X);
// Π_k = orthogonal projector onto span{e_1..e_k}.
LaurentMatrix coordinate_projector(int n, int k);
LaurentMatrix affine_veronese_vertex(const LaurentMatrix& g, int k);
// Convex combination over (type, weight) pairs of the vertex images of g·E.
LaurentMatrix barycentric_affine_veronese(const LaurentMatrix& g, const std::vector<std::pair<int, GaussRat>>& weights);

// diag(a,…,a,(1−n)a)·r with a = z + 1/z.
LaurentMatrix caveat_operator(int n, const GaussRat& scale = GaussRat(1));
// True iff no λ ∈ (1/n)Z with |λ| ≤ N has a kernel vector of z d/dz − X − λ
// supported in [−N+2, N−2] (domain window [−N, N], image unrestricted).
bool truncated_kernel_free(const LaurentMatrix& X, int N);
bool caveat_check(int n, int N, const GaussRat& scale = GaussRat(1));

}  // namespace tb
