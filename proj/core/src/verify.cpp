#include "twinbuild/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "twinbuild/cells.hpp"
#include "twinbuild/error.hpp"
#include "twinbuild/reduction.hpp"
#include "twinbuild/sample.hpp"

namespace tb {

namespace {

using sample::Rng;

constexpr size_t kMaxFailures = 5;

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}
  // Runs one instance; exceptions count as failures.
  void trial(const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string why = "check failed";
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (ok) {
      ++r_.passed;
      return;
    }
    ++r_.failed;
    if (r_.failures.size() < kMaxFailures) r_.failures.push_back(label + ": " + why);
  }

 private:
  SuiteResult& r_;
};

Chamber chamber(Side side, const LaurentMatrix& g) { return Chamber{side, normalize_rep(g)}; }

void suite_delta(Tally& t, Rng& rng, int trials) {
  for (int k = 0; k < trials; ++k) {
    int n = 2 + k % 3;
    Word w = sample::reduced_word(rng, affine_group(n), 8);
    Side side = k % 2 ? Side::Minus : Side::Plus;
    LaurentMatrix m = sample::borel(rng, side, n, 3) * word_matrix<GaussRat>(n, w) * sample::borel(rng, side, n, 3);
    t.trial("delta n=" + std::to_string(n) + " w=[" + word_to_string(w) + "]", [&] {
      Chamber C = base_chamber(side, n), D = chamber(side, m);
      return delta(C, D) == word_to_affine(w, n) && delta(D, C) == word_to_affine(w, n).inverse();
    });
  }
}

void suite_codelta(Tally& t, Rng& rng, int trials) {
  for (int k = 0; k < trials; ++k) {
    int n = 2 + k % 3;
    Word w = sample::reduced_word(rng, affine_group(n), 8);
    LaurentMatrix m =
        sample::borel(rng, Side::Minus, n, 3) * word_matrix<GaussRat>(n, w) * sample::borel(rng, Side::Plus, n, 3);
    t.trial("codelta n=" + std::to_string(n) + " w=[" + word_to_string(w) + "]", [&] {
      Chamber Cm = base_chamber(Side::Minus, n), Cp = chamber(Side::Plus, m);
      AffineWeylElt x = codelta(Cm, Cp);
      return x == word_to_affine(w, n) && codelta(Cp, Cm) == x.inverse();
    });
  }
}

// Tw2 on every descent of codelta(C, D), Tw3 on every non-descent; n = 3.
void suite_twin(Tally& t, Rng& rng, int trials) {
  const int n = 3;
  CoxeterGroup g = affine_group(n);
  for (int k = 0; k < trials; ++k) {
    Word u = sample::reduced_word(rng, g, 5), v = sample::reduced_word(rng, g, 5);
    LaurentMatrix h = sample::special(rng, n, 3, 1);
    LaurentMatrix cm = h * word_matrix<GaussRat>(n, u) * sample::borel(rng, Side::Minus, n, 1);
    LaurentMatrix dp = h * word_matrix<GaussRat>(n, v) * sample::borel(rng, Side::Plus, n, 1);
    GaussRat c = sample::coeff(rng);
    t.trial("twin u=[" + word_to_string(u) + "] v=[" + word_to_string(v) + "]", [&] {
      Chamber C = chamber(Side::Minus, cm), D = chamber(Side::Plus, dp);
      AffineWeylElt w = codelta(C, D);
      if (codelta(D, C) != w.inverse()) return false;
      for (int s = 1; s <= n; ++s) {
        AffineWeylElt ws = w * AffineWeylElt::generator(n, s);
        if (ws.length() < w.length()) {
          for (const auto& p : {std::optional<GaussRat>(GaussRat(0)), std::optional<GaussRat>(c),
                                std::optional<GaussRat>()}) {
            Chamber E = panel_chart(D, s, p);
            if (!same_chamber(E, D) && codelta(C, E) != ws) return false;
          }
        } else {
          Chamber E = twin_panel_step(C, D, s);
          if (delta(D, E) != AffineWeylElt::generator(n, s) || codelta(C, E) != ws) return false;
        }
      }
      return true;
    });
  }
}

void suite_coords(Tally& t, Rng& rng, int trials) {
  for (int k = 0; k < trials; ++k) {
    int n = 2 + k % 3;
    Word w = sample::reduced_word(rng, affine_group(n), 8);
    LaurentMatrix h = sample::special(rng, n, 3, 1);
    std::vector<GaussRat> coords;
    for (size_t i = 0; i < w.size(); ++i) coords.push_back(sample::coeff(rng));
    t.trial("coords n=" + std::to_string(n) + " w=[" + word_to_string(w) + "]", [&] {
      Chamber C0 = act(h, standard_chamber(Side::Plus, n)), D0 = act(h, standard_chamber(Side::Minus, n));
      Chamber E = decode_coords(C0, D0, w, coords);
      std::vector<GaussRat> back = encode_coords(C0, D0, E, w);
      return back == coords && same_chamber(decode_coords(C0, D0, w, back), E) &&
             delta(C0, E) == word_to_affine(w, n);
    });
  }
}

void suite_spherical(Tally& t, Rng& rng, int trials) {
  for (int k = 0; k < trials; ++k) {
    int n = 2 + k % 4;
    auto [U, w] = sample::weighted_flag(rng, n);
    QMatrix u = sample::unitary(rng, n);
    t.trial("spherical n=" + std::to_string(n), [&] {
      QMatrix X = spherical_veronese(U, w);
      if (!(recover_flag(X).flag == U)) return false;
      std::vector<Subspace> moved;
      for (const auto& p : U.parts) moved.push_back(span_of(p.basis * u.transpose()));
      return spherical_veronese(make_flag(moved), w) == u * X * u.conj_transpose();
    });
  }
}

void suite_eigen(Tally& t, Rng& rng, int trials) {
  for (int k = 0; k < trials; ++k) {
    int n = 2 + k % 2, type = k % n;
    LaurentMatrix g = sample::unitary_sl_loop(rng, n);
    t.trial("eigen n=" + std::to_string(n) + " k=" + std::to_string(type), [&] {
      LaurentMatrix phi = affine_veronese_vertex(g, type);
      for (int m = -3; m <= 3; ++m)
        for (int j = 0; j < n; ++j) {
          LaurentMatrix v(n);
          for (int r = 0; r < n; ++r) v(r, 0) = g(r, j) * LaurentPoly::z(m);
          GaussRat c = GaussRat(m) - GaussRat(j < type ? 1 : 0) + GaussRat::frac(type, n);
          if (v.z_d_dz() - phi * v != v.scaled(LaurentPoly(c))) return false;
        }
      return true;
    });
  }
}

void suite_gauge(Tally& t, Rng& rng, int trials) {
  auto in_x = [](const LaurentMatrix& X) { return sharp(X) == X && X.trace().is_zero(); };
  for (int k = 0; k < trials; ++k) {
    int n = 2 + k % 2;
    LaurentMatrix a = sample::unitary_sl_loop(rng, n), b = sample::unitary_sl_loop(rng, n);
    LaurentMatrix c = sample::unitary_sl_loop(rng, n);
    int type = k % n;
    t.trial("gauge n=" + std::to_string(n), [&] {
      LaurentMatrix X = affine_veronese_vertex(c, type);
      LaurentMatrix Y = gauge(b, X);
      return in_x(X) && in_x(Y) && gauge(a * b, X) == gauge(a, Y);
    });
  }
}

void suite_caveat(Tally& t, Rng&, int) {
  for (int n : {2, 3})
    t.trial("caveat n=" + std::to_string(n) + " N=8", [&] { return caveat_check(n, 8); });
  // a genuine flag image does have truncated eigenvectors
  t.trial("flag image has eigenvectors", [] {
    QMatrix P = QMatrix::identity(3) - projector_of(coordinate_subspace(3, 1));
    return !truncated_kernel_free(constant_matrix(traceless(P)), 6);
  });
}

void suite_calibration(Tally& t, Rng& rng, int trials) {
  for (int n = 2; n <= 4; ++n)
    t.trial("standard pair n=" + std::to_string(n), [&] {
      return codelta(standard_chamber(Side::Minus, n), standard_chamber(Side::Plus, n)).is_identity();
    });
  for (int k = 0; k < trials; ++k) {
    int n = 2 + k % 3;
    LaurentMatrix basis = sample::special(rng, n, 5, 2);
    basis.scale_col(0, LaurentPoly::z(k % 5 - 2));
    t.trial("common basis n=" + std::to_string(n), [&] {
      Chamber p = chamber_from_basis(Side::Plus, basis), m = chamber_from_basis(Side::Minus, basis);
      return opposite(m, p) && codelta(m, p).is_identity();
    });
  }
}

void suite_poincare(Tally& t, Rng&, int) {
  for (int n = 2; n <= 6; ++n)
    t.trial("full flag n=" + std::to_string(n), [&] {
      std::vector<long long> prod{1};
      for (int i = 1; i < n; ++i) {
        std::vector<long long> next(prod.size() + 2 * static_cast<size_t>(i), 0);
        for (size_t d = 0; d < prod.size(); ++d)
          for (int j = 0; j <= i; ++j) next[d + 2 * static_cast<size_t>(j)] += prod[d];
        prod = next;
      }
      CoxeterGroup g(coxeter_matrix(CoxeterKind::FiniteA, n));
      return schubert_poincare(g, {}, g.longest_element(), n * (n - 1)).coeffs == prod;
    });
  t.trial("loop n=4", [] { return loop_poincare(4, 6).coeffs == std::vector<long long>{1, 0, 1, 0, 2, 0, 3}; });
  for (auto [k, d] : {std::pair{1, 1}, {2, 5}, {3, 5}})
    t.trial("bott k=" + std::to_string(k), [k = k, d = d] { return bott_equivalence_check(k, d); });
}

void suite_cosets(Tally& t, Rng&, int) {
  t.trial("W_{1,2,4}/W_{2,4} in affine A3", [] {
    CoxeterGroup g = affine_group(4);
    std::vector<Word> reps = g.min_coset_reps({2, 4}, 10, {1, 2, 4});
    std::vector<Word> expect{{}, {1}, {2, 1}, {4, 1}, {2, 4, 1}, {1, 2, 4, 1}};
    std::sort(reps.begin(), reps.end());
    std::sort(expect.begin(), expect.end());
    return reps == expect;
  });
}

struct Suite {
  void (*run)(Tally&, Rng&, int);
  int default_trials;
};

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"calibration", {suite_calibration, 50}}, {"caveat", {suite_caveat, 1}},
      {"codelta", {suite_codelta, 200}},        {"coords", {suite_coords, 200}},
      {"cosets", {suite_cosets, 1}},            {"delta", {suite_delta, 200}},
      {"eigen", {suite_eigen, 20}},             {"gauge", {suite_gauge, 100}},
      {"poincare", {suite_poincare, 1}},        {"spherical", {suite_spherical, 100}},
      {"twin", {suite_twin, 100}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, s] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed, int trials) {
  auto it = suites().find(name);
  if (it == suites().end()) throw Error(ErrorCode::InvalidArgument, "unknown verify suite '" + name + "'");
  SuiteResult r;
  r.suite = name;
  r.seed = seed;
  Rng rng(seed);
  Tally tally(r);
  it->second.run(tally, rng, trials > 0 ? trials : it->second.default_trials);
  return r;
}

}  // namespace tb
