#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "tabstab/enumerate.hpp"
#include "tabstab/greene.hpp"
#include "tabstab/jdt.hpp"
#include "tabstab/lattice.hpp"
#include "tabstab/lemma_check.hpp"
#include "tabstab/rsk.hpp"
#include "tabstab/stab.hpp"

namespace {

using namespace tabstab;

SkewTableau bench_tableau() {
  return SkewTableau::make({2, 1, 0}, {{1, 4, 6, 8}, {3, 5, 9}, {2, 7}});
}

void BM_rectify(benchmark::State& state) {
  const SkewTableau big =
      attach_copies(bench_tableau(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rectify(big).shape);
}
BENCHMARK(BM_rectify)->Arg(1)->Arg(3)->Arg(6);

void BM_stab_index(benchmark::State& state) {
  const SkewTableau t = bench_tableau();
  for (auto _ : state) benchmark::DoNotOptimize(stab_index(t));
}
BENCHMARK(BM_stab_index);

void BM_rsk_shape(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Word w(state.range(0));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rsk_shape(w));
}
BENCHMARK(BM_rsk_shape)->Arg(32)->Arg(256);

void BM_exact_search(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Word w(state.range(0));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  const std::vector<Word> words(3, w);
  for (auto _ : state) benchmark::DoNotOptimize(ell_multi(words).value);
}
BENCHMARK(BM_exact_search)->Arg(8)->Arg(12)->Arg(16);

void BM_family_ell(benchmark::State& state) {
  const PathMatrix m = build_matrix(bench_tableau(), 4);
  std::mt19937_64 rng(3);
  PathFamily f;
  for (int i = 0; i < 3; ++i) f.paths.push_back(random_path(rng, 4, 3));
  for (auto _ : state) benchmark::DoNotOptimize(family_ell(m, f).value);
}
BENCHMARK(BM_family_ell);

void BM_normalize(benchmark::State& state) {
  const PathMatrix m = build_matrix(bench_tableau(), 5);
  std::mt19937_64 rng(4);
  PathFamily f;
  for (int i = 0; i < 3; ++i) f.paths.push_back(random_path(rng, 5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(normalize_family(m, f));
}
BENCHMARK(BM_normalize);

void BM_enumerate(benchmark::State& state) {
  for (auto _ : state) {
    TheoremSummary s = verify_main_theorem(
        {static_cast<int>(state.range(0)), 3, 2}, 1, false);
    benchmark::DoNotOptimize(s.tableau_count);
  }
}
BENCHMARK(BM_enumerate)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
