#include <benchmark/benchmark.h>

#include <random>

#include "orbibraid/braid.hpp"
#include "orbibraid/center.hpp"
#include "orbibraid/free_product.hpp"
#include "orbibraid/smith.hpp"

using namespace orbibraid;

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-4, 4);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, state.range(1) != 0));
}
// Witness transforms grow quickly; 12 x 12 random input overflows int64 there.
BENCHMARK(BM_SmithNormalForm)->ArgsProduct({{4, 8, 12, 16}, {0}})->ArgsProduct({{4, 8}, {1}});

void BM_NormalForm(benchmark::State& state) {
  const FreeProductContext ctx({2, 3, 5});
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> gen(1, 3);
  std::uniform_int_distribution<int> ex(1, 4);
  std::vector<Syllable> syl;
  for (int i = 0; i < state.range(0); ++i) syl.push_back({"x" + std::to_string(gen(rng)), ex(rng)});
  const Word w(syl);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(ctx, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NormalForm)->RangeMultiplier(4)->Range(16, 4096);

void BM_CenterSearch(benchmark::State& state) {
  const FreeProductContext ctx({5, 5});
  CentralizerSearchOptions opts;
  opts.max_syllables = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounded_center_search(ctx, opts));
  state.counters["words"] = static_cast<double>(count_normal_words(ctx, opts));
}
BENCHMARK(BM_CenterSearch)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

void BM_PureBraidCenter(benchmark::State& state) {
  const OrbifoldSpec spec{true, 1, 0, 0, {3}};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CenterVerdict v = center_pure_braid(spec, n);
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(BM_PureBraidCenter)->DenseRange(1, 10, 3);

void BM_ReplayPureBraidTrace(benchmark::State& state) {
  const CenterVerdict v = center_pure_braid(OrbifoldSpec{true, 0, 1, 0, {2, 3}}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(replay(v.trace).ok);
}
BENCHMARK(BM_ReplayPureBraidTrace)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
