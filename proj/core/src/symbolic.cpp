#include <algorithm>

#include "twinbuild/building.hpp"
#include "twinbuild/error.hpp"
#include "twinbuild/reduction.hpp"
#include "twinbuild/upoly.hpp"

namespace tb {

namespace {

using RatMatrix = LMatrix<RatT>;

RatMatrix lift(const LaurentMatrix& m) {
  const int n = m.n();
  RatMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::vector<Laurent<RatT>::Term> terms;
      for (const auto& [e, x] : m(r, c).terms()) terms.emplace_back(e, RatT(x));
      out(r, c) = Laurent<RatT>::from_terms(std::move(terms));
    }
  return out;
}

// Root of p if p = c·(t − r)^k with k ≥ 1; nullopt for constants.
std::optional<GaussRat> single_root(const UPoly& p) {
  const int k = p.degree();
  if (k <= 0) return std::nullopt;
  UPoly m = p.monic();
  GaussRat r = -m.coeff(k - 1) / GaussRat(k);
  UPoly lin(std::vector<GaussRat>{-r, GaussRat(1)});
  UPoly power(GaussRat(1));
  for (int i = 0; i < k; ++i) power *= lin;
  if (power != m)
    throw Error(ErrorCode::SymbolicDegree, "pivot coefficient " + p.str() + " is not a power of a linear factor");
  return r;
}

}  // namespace

Chamber twin_panel_step(const Chamber& C, const Chamber& D, int s) {
  if (C.side == D.side) throw Error(ErrorCode::SideMismatch, "panel step needs chambers on opposite sides");
  const int n = D.n();
  const AffineWeylElt w = codelta(C, D);
  const AffineWeylElt target = w * AffineWeylElt::generator(n, s);
  if (target.length() <= w.length())
    throw Error(ErrorCode::DistanceMismatch, "codistance does not grow along this panel");

  // Re-anchor the chart at D·X, where h⁻¹·g·X = b·n is the Birkhoff form; the
  // symbolic matrix b·n·x_s(t) then only involves one root subgroup.
  const bool plus = D.side == Side::Plus;
  const Key key = C.side == Side::Minus ? Key::Top : Key::Bottom;
  const Dir dir = C.side == Side::Minus ? Dir::Plus : Dir::Minus;
  Reduction<GaussRat> base = periodic_reduce(C.rep.adjugate() * D.rep, key, dir);
  const Chamber anchor{D.side, D.rep * base.X};
  RatMatrix M = lift(base.MX) * chart_matrix<RatT>(plus, n, s, RatT::t());
  Reduction<RatT> red = periodic_reduce(M, key, dir, true);
  std::vector<GaussRat> roots;
  for (const RatT& q : red.key_coeffs)
    for (const UPoly* p : {&q.num(), &q.den()})
      if (auto r = single_root(*p))
        if (std::find(roots.begin(), roots.end(), *r) == roots.end()) roots.push_back(*r);

  std::vector<std::optional<GaussRat>> candidates(roots.begin(), roots.end());
  candidates.push_back(std::nullopt);
  for (const auto& t : candidates) {
    Chamber E = panel_chart(anchor, s, t);
    if (codelta(C, E) == target) return E;
  }
  throw Error(ErrorCode::DistanceMismatch, "no special parameter reaches the longer codistance");
}

Chamber project_twin(const Simplex& X, const Chamber& C) {
  if (X.types.empty()) throw Error(ErrorCode::RankError, "projection onto the empty simplex");
  if (X.chamber.side == C.side) throw Error(ErrorCode::SideMismatch, "project_twin needs opposite sides");
  const std::vector<int> J = residue_type(X);
  const int n = C.n();
  Chamber E = X.chamber;
  for (;;) {
    const AffineWeylElt w = codelta(C, E);
    int step = 0;
    for (int s : J)
      if ((w * AffineWeylElt::generator(n, s)).length() > w.length()) {
        step = s;
        break;
      }
    if (!step) return E;
    E = twin_panel_step(C, E, step);
  }
}

}  // namespace tb
