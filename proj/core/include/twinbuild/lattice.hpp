#pragma once

#include <optional>
#include <vector>

#include "twinbuild/dense.hpp"
#include "twinbuild/matrix.hpp"

namespace tb {

enum class Side { Plus, Minus };

inline Side opposite_side(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }
const char* side_name(Side s);
Side parse_side(const std::string& text);

using Column = std::vector<LaurentPoly>;

// Free Q(i)[z]-module (plus) or Q(i)[1/z]-module (minus) spanned by the
// columns of `gens`.
struct Lattice {
  Side side = Side::Plus;
  LaurentMatrix gens;
};

// Column Hermite normal form of the module generated by `cols` (any number
// >= n of generators): upper triangular, diagonal z^{d_i}, entries above the
// diagonal reduced modulo the diagonal. Minus side is mirrored via z -> 1/z.
LaurentMatrix canonical_lattice(Side side, const std::vector<Column>& cols, int n);
LaurentMatrix canonical_lattice(const Lattice& L);

struct LatticeClass {
  Side side = Side::Plus;
  LaurentMatrix canon;  // canonical representative
  int n() const { return canon.n(); }
  friend bool operator==(const LatticeClass& a, const LatticeClass& b) {
    return a.side == b.side && a.canon == b.canon;
  }
  friend bool operator!=(const LatticeClass& a, const LatticeClass& b) { return !(a == b); }
};

LatticeClass canonical_class(const Lattice& L);
int type_of(const LatticeClass& c);

// Membership of a vector in the module with canonical matrix `canon`.
bool lattice_contains(Side side, const LaurentMatrix& canon, const Column& v);
// Module inclusion span(small) ⊆ span(big), both given by generator matrices.
bool lattice_subset(Side side, const LaurentMatrix& small, const LaurentMatrix& big);

// Shift k with z^{±1}M ≤ z^k M' ≤ M, if the classes are incident.
std::optional<int> incidence_shift(const LatticeClass& a, const LatticeClass& b);
bool incident(const LatticeClass& a, const LatticeClass& b);

// The lattice of the missing type in the chamber through `panel` (n−1
// classes) selected by parameter t (nullopt = ∞).
LatticeClass panel_vertex(const std::vector<LatticeClass>& panel, const std::optional<GaussRat>& t);
// Parameter of the missing vertex `v` relative to the same chart.
std::optional<GaussRat> panel_parameter(const std::vector<LatticeClass>& panel, const LatticeClass& v);

std::vector<LaurentPoly> column_of(const LaurentMatrix& m, int j);
LaurentMatrix from_columns(const std::vector<Column>& cols);

}  // namespace tb
