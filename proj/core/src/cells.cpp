#include "twinbuild/cells.hpp"

#include <algorithm>

#include "twinbuild/building.hpp"
#include "twinbuild/error.hpp"

namespace tb {

std::string PoincareSeries::str() const {
  std::string out;
  for (size_t d = 0; d < coeffs.size(); ++d) {
    long long c = coeffs[d];
    if (!c) continue;
    if (!out.empty()) out += " + ";
    std::string mono = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
    if (mono.empty()) out += std::to_string(c);
    else if (c == 1) out += mono;
    else out += std::to_string(c) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

Word min_coset_rep(const CoxeterGroup& g, const Word& w, const std::vector<int>& J) {
  g.check_word(w);
  CoxElt x = g.element(w);
  Word word = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int s : J)
      if (g.is_right_descent(x, s)) {
        g.mul_right(x, s);
        word.push_back(s);
        changed = true;
      }
  }
  return g.reduce(word);
}

long long cell_dim(const CoxeterGroup& g, const Word& w, const std::vector<int>& J, int panel_dim) {
  if (panel_dim < 1) throw Error(ErrorCode::InvalidWeights, "panel dimension must be positive");
  return static_cast<long long>(panel_dim) * static_cast<long long>(min_coset_rep(g, w, J).size());
}

long long cell_dim(const CoxeterGroup& g, const Word& w, const std::vector<int>& J,
                   const std::vector<long long>& panel_dims) {
  g.check_weights(panel_dims);
  return g.generalized_length(min_coset_rep(g, w, J), panel_dims);
}

namespace {

PoincareSeries tally(const std::vector<Word>& reps, int truncation, int panel_dim) {
  PoincareSeries p;
  p.truncation = truncation;
  p.coeffs.assign(static_cast<size_t>(truncation) + 1, 0);
  for (const Word& v : reps) {
    long long d = static_cast<long long>(panel_dim) * static_cast<long long>(v.size());
    if (d <= truncation) ++p.coeffs[static_cast<size_t>(d)];
  }
  return p;
}

}  // namespace

PoincareSeries schubert_poincare(const CoxeterGroup& g, const std::vector<int>& J, const Word& w, int truncation,
                                 int panel_dim) {
  if (truncation < 0) throw Error(ErrorCode::InvalidArgument, "truncation must be nonnegative");
  if (panel_dim < 1) throw Error(ErrorCode::InvalidWeights, "panel dimension must be positive");
  Word top = min_coset_rep(g, w, J);
  int max_len = std::min(static_cast<int>(top.size()), truncation / panel_dim);
  std::vector<Word> below;
  for (const Word& v : g.min_coset_reps(J, max_len))
    if (g.bruhat_leq(v, top)) below.push_back(v);
  return tally(below, truncation, panel_dim);
}

PoincareSeries quotient_poincare(const CoxeterGroup& g, const std::vector<int>& J, int truncation,
                                 const std::vector<int>& ambient, int panel_dim) {
  if (truncation < 0) throw Error(ErrorCode::InvalidArgument, "truncation must be nonnegative");
  if (panel_dim < 1) throw Error(ErrorCode::InvalidWeights, "panel dimension must be positive");
  std::vector<int> Jin;
  for (int s : J)
    if (ambient.empty() || std::find(ambient.begin(), ambient.end(), s) != ambient.end()) Jin.push_back(s);
  return tally(g.min_coset_reps(Jin, truncation / panel_dim, ambient), truncation, panel_dim);
}

PoincareSeries loop_poincare(int n, int truncation) {
  if (n < 2) throw Error(ErrorCode::InvalidRank, "n must be at least 2");
  std::vector<int> finite;
  for (int s = 1; s < n; ++s) finite.push_back(s);
  return quotient_poincare(affine_group(n), finite, truncation);
}

BottComparison bott_comparison(int k, int through_degree) {
  if (k < 1) throw Error(ErrorCode::InvalidRank, "k must be at least 1");
  if (through_degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  const int n = 2 * k;
  const CoxeterGroup g = affine_group(n);
  std::vector<int> K, J;
  for (int s = 1; s <= n; ++s) {
    if (s != n) K.push_back(s);
    if (moved_type(Side::Plus, s, n) != k) J.push_back(s);
  }
  BottComparison out;
  out.grassmannian = quotient_poincare(g, J, through_degree, K);
  out.vertices = quotient_poincare(g, J, through_degree);
  out.agree = out.grassmannian == out.vertices;
  return out;
}

bool bott_equivalence_check(int k, int through_degree) { return bott_comparison(k, through_degree).agree; }

}  // namespace tb
