#pragma once

#include <string>
#include <vector>

#include "twinbuild/coxeter.hpp"

namespace tb {

// Truncated series sum_d c_d t^d; coeffs[d] for d = 0..truncation.
struct PoincareSeries {
  std::vector<long long> coeffs;
  int truncation = 0;
  long long at(int degree) const {
    return degree >= 0 && degree < static_cast<int>(coeffs.size()) ? coeffs[degree] : 0;
  }
  std::string str() const;  // "1 + t^2 + 2*t^4"
  friend bool operator==(const PoincareSeries& a, const PoincareSeries& b) {
    return a.truncation == b.truncation && a.coeffs == b.coeffs;
  }
};

Word min_coset_rep(const CoxeterGroup& g, const Word& w, const std::vector<int>& J);
// Real dimension of the Schubert cell of wW_J: panel_dim times m(wW_J).
long long cell_dim(const CoxeterGroup& g, const Word& w, const std::vector<int>& J, int panel_dim = 2);
// Nonuniform panel dimensions, one per generator (must be constant on odd-bond classes).
long long cell_dim(const CoxeterGroup& g, const Word& w, const std::vector<int>& J,
                   const std::vector<long long>& panel_dims);

// Sum over cosets vW_J below wW_J in the Bruhat order.
PoincareSeries schubert_poincare(const CoxeterGroup& g, const std::vector<int>& J, const Word& w, int truncation,
                                 int panel_dim = 2);
// Sum over all cosets of W_ambient / W_{J ∩ ambient} (all of W if ambient is empty).
PoincareSeries quotient_poincare(const CoxeterGroup& g, const std::vector<int>& J, int truncation,
                                 const std::vector<int>& ambient = {}, int panel_dim = 2);
// Cells of the algebraic loop space: affine W modulo the finite Weyl group.
PoincareSeries loop_poincare(int n, int truncation);

struct BottComparison {
  PoincareSeries grassmannian;  // W_K / W_{J∩K}, finite
  PoincareSeries vertices;      // W / W_J, affine
  bool agree = false;
};
// Gr_k(C^{2k}) against the vertex set of type k, n = 2k: K fixes the type 0
// vertex (K = {1..n-1}), J fixes the type k vertex.
BottComparison bott_comparison(int k, int through_degree);
bool bott_equivalence_check(int k, int through_degree);

}  // namespace tb
