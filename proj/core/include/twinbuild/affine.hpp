#pragma once

#include <string>
#include <vector>

#include "twinbuild/coxeter.hpp"

namespace tb {

// Element (π, k) of the affine Weyl group of type Ã_{n−1}: the monomial
// matrix diag(z^{k_1},…,z^{k_n})·P_π with P_π e_c = e_{π(c)}. Indices are
// 0-based internally; perm[c] = π(c).
struct AffineWeylElt {
  std::vector<int> perm;
  std::vector<long> k;

  static AffineWeylElt identity(int n);
  static AffineWeylElt generator(int n, int s);  // s in 1..n, s = n is the affine node

  int n() const { return static_cast<int>(perm.size()); }
  AffineWeylElt operator*(const AffineWeylElt& o) const;
  AffineWeylElt inverse() const;
  bool is_identity() const;
  friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
    return a.perm == b.perm && a.k == b.k;
  }
  friend bool operator!=(const AffineWeylElt& a, const AffineWeylElt& b) { return !(a == b); }

  // Inversion count of the associated affine permutation of ℤ.
  long length() const;
  std::string str() const;  // "pi=[..] k=[..]" with 1-based π
};

AffineWeylElt word_to_affine(const Word& w, int n);
// Reduced word in the lexicographic normal form.
Word affine_to_word(const AffineWeylElt& x);

// Finite Weyl group element of S_n acting as permutation matrices; used by
// the spherical apartment and by tests.
AffineWeylElt finite_part(const AffineWeylElt& x);

}  // namespace tb
