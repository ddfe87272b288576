#include <benchmark/benchmark.h>

#include "twinbuild/cells.hpp"
#include "twinbuild/lattice.hpp"
#include "twinbuild/reduction.hpp"
#include "twinbuild/sample.hpp"

using namespace tb;

namespace {

// delta of base chamber and b1 w b2, word length = range(1)
void BM_Delta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sample::Rng rng(1);
  std::vector<Chamber> targets;
  for (int i = 0; i < 16; ++i) {
    Word w = sample::reduced_word(rng, affine_group(n), static_cast<int>(state.range(1)));
    LaurentMatrix m = sample::borel(rng, Side::Plus, n, 2) * word_matrix<GaussRat>(n, w) * sample::borel(rng, Side::Plus, n, 2);
    targets.push_back(Chamber{Side::Plus, normalize_rep(m)});
  }
  Chamber base = base_chamber(Side::Plus, n);
  size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(delta(base, targets[i++ % targets.size()]));
}
BENCHMARK(BM_Delta)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMicrosecond);

void BM_Codelta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sample::Rng rng(2);
  std::vector<Chamber> targets;
  for (int i = 0; i < 16; ++i) {
    Word w = sample::reduced_word(rng, affine_group(n), 8);
    LaurentMatrix m = sample::borel(rng, Side::Minus, n, 2) * word_matrix<GaussRat>(n, w) * sample::borel(rng, Side::Plus, n, 2);
    targets.push_back(Chamber{Side::Plus, normalize_rep(m)});
  }
  Chamber base = base_chamber(Side::Minus, n);
  size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(codelta(base, targets[i++ % targets.size()]));
}
BENCHMARK(BM_Codelta)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_MinCosetReps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CoxeterGroup g = affine_group(n);
  std::vector<int> J;
  for (int s = 1; s < n; ++s) J.push_back(s);
  for (auto _ : state) benchmark::DoNotOptimize(g.min_coset_reps(J, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_MinCosetReps)->Args({3, 8})->Args({4, 6})->Args({6, 5})->Unit(benchmark::kMillisecond);

void BM_LoopPoincare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(loop_poincare(static_cast<int>(state.range(0)), 10));
}
BENCHMARK(BM_LoopPoincare)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

// Hermite normal form of a lattice spanned by a random special matrix
void BM_CanonicalLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sample::Rng rng(3);
  std::vector<Lattice> lattices;
  for (int i = 0; i < 16; ++i) lattices.push_back(Lattice{Side::Plus, sample::special(rng, n, 6, 2)});
  size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_lattice(lattices[i++ % lattices.size()]));
}
BENCHMARK(BM_CanonicalLattice)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
