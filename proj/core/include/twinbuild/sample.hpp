#pragma once

#include <random>
#include <utility>
#include <vector>

#include "twinbuild/building.hpp"
#include "twinbuild/veronese.hpp"

// Seeded random instances for the verification suites and benchmarks.
namespace tb::sample {

using Rng = std::mt19937_64;

GaussRat coeff(Rng& rng, bool complex = true);
LaurentPoly laurent(Rng& rng, int lo, int hi, bool complex = true);
// Product of `factors` elementary matrices with monomial entries of |degree| <= deg.
LaurentMatrix special(Rng& rng, int n, int factors = 4, int deg = 1);
// Element of B^± with entries of z-degree at most deg (in 1/z on the minus side).
LaurentMatrix borel(Rng& rng, Side side, int n, int deg = 1);
Word reduced_word(Rng& rng, const CoxeterGroup& g, int max_len);

// Exact unitary over Q(i) (Cayley transform of a small skew-hermitian matrix).
QMatrix unitary(Rng& rng, int n);
// Product of two unitary loops g_P g_Q^{-1} with small coefficients; det 1.
LaurentMatrix unitary_sl_loop(Rng& rng, int n);
// Random nonempty flag (dims ascending) and positive weights summing to 1.
std::pair<SubspaceFlag, std::vector<GaussRat>> weighted_flag(Rng& rng, int n);

}  // namespace tb::sample
