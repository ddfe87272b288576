#pragma once

#include <optional>
#include <vector>

#include "twinbuild/affine.hpp"
#include "twinbuild/lattice.hpp"

namespace tb {

// Chamber g·B^± of one half of the twin building, with det g = 1. Its vertex
// of type t is g applied to the base lattice of that type (see chamber_vertices).
struct Chamber {
  Side side = Side::Plus;
  LaurentMatrix rep;
  int n() const { return rep.n(); }
};

// The coset of the identity; stabilized by B^±.
Chamber base_chamber(Side side, int n);
// E^±(basis): vertices span{z v_1..z v_i, v_{i+1}..v_n} over Q(i)[z^{±1}].
Chamber chamber_from_basis(Side side, const LaurentMatrix& basis);
Chamber standard_chamber(Side side, int n);
Chamber chamber_from_vertices(Side side, const std::vector<LatticeClass>& vertices);
// Deterministic basis B with chamber_from_basis(side, B) equal to C.
LaurentMatrix canonical_basis(const Chamber& C);
// Vertex classes indexed by type.
std::vector<LatticeClass> chamber_vertices(const Chamber& C);
bool same_chamber(const Chamber& a, const Chamber& b);
Chamber act(const LaurentMatrix& g, const Chamber& C);

// Signed reversal with det 1: the representative of the standard chamber.
LaurentMatrix reversal_matrix(int n);
LaurentMatrix normalize_rep(LaurentMatrix g);

bool borel_membership(Side side, const LaurentMatrix& g);

AffineWeylElt delta(const Chamber& C, const Chamber& D);
// Codistance of chambers on opposite sides, read from the Birkhoff form.
AffineWeylElt codelta(const Chamber& C, const Chamber& D);
bool opposite(const Chamber& a, const Chamber& b);

// Type of the vertex moved by generator s (1..n) on the given side.
int moved_type(Side side, int s, int n);

struct Simplex {
  Chamber chamber;         // any chamber containing the simplex
  std::vector<int> types;  // vertex types, sorted
};

Simplex panel_of(const Chamber& C, int s);
Simplex vertex_of(const Chamber& C, int type);
std::vector<LatticeClass> simplex_vertices(const Simplex& X);
// Generators of the residue of X: those moving a type not in X.
std::vector<int> residue_type(const Simplex& X);

struct TwinPosition {
  std::vector<int> J;
  Word w;
  std::vector<int> K;
};

Word min_double_coset_rep(const CoxeterGroup& g, const Word& w, const std::vector<int>& J,
                          const std::vector<int>& K);
TwinPosition simplex_delta(const Simplex& X, const Simplex& Y);
TwinPosition simplex_codelta(const Simplex& X, const Simplex& Y);

// Gate of C in Res(X), same side.
Chamber project(const Simplex& X, const Chamber& C);
// Chamber of Res(X) with the longest codistance to C (opposite side), by
// iterated symbolic panel steps.
Chamber project_twin(const Simplex& X, const Chamber& C);
// The unique chamber in the s-panel of D whose codistance to C is
// codelta(C, D)·s; requires s not to be a right descent of codelta(C, D).
Chamber twin_panel_step(const Chamber& C, const Chamber& D, int s);
// Same chamber via the Birkhoff normal form and the longest element of the coset.
Chamber project_twin_closed(const Simplex& X, const Chamber& C);

// Group-level chart of the s-panel of D: t ↦ D·x_s(t), with t = 0 giving D
// and t = ∞ (nullopt) giving D·ṡ.
Chamber panel_chart(const Chamber& D, int s, const std::optional<GaussRat>& t);
std::optional<GaussRat> panel_chart_parameter(const Chamber& D, int s, const Chamber& E);

// Lattice-level chart of the chambers through a panel given by its vertices.
Chamber panel_chamber(const std::vector<LatticeClass>& panel, const std::optional<GaussRat>& t);

// k with k·B⁺ = C⁺ and k·B⁻ = C⁻ for an opposite pair.
LaurentMatrix common_representative(const Chamber& plus, const Chamber& minus);

std::vector<GaussRat> encode_coords(const Chamber& C0, const Chamber& D0, const Chamber& E, const Word& word);
Chamber decode_coords(const Chamber& C0, const Chamber& D0, const Word& word, const std::vector<GaussRat>& coords);

Chamber apartment_chamber(Side side, const LaurentMatrix& basis, const AffineWeylElt& w);

// Reduced word of a Weyl element in the affine group of rank n.
CoxeterGroup affine_group(int n);

}  // namespace tb
