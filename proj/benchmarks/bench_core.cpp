#include <benchmark/benchmark.h>

#include <random>

#include "quiverhh/invariants.hpp"

using namespace quiverhh;

namespace {

Presentation corpus(const char* stem) {
  return load_presentation(std::string(QUIVERHH_CORPUS_DIR) + "/" + stem + ".bqv");
}

const char* kStems[] = {"jw_p5_x", "kronecker_a4", "beilinson_2", "beilinson_3", "group_z3z3_x"};

}  // namespace

static void BM_Completion(benchmark::State& state) {
  Presentation p = corpus(kStems[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(complete_rewriting(p).rules().size());
  state.SetLabel(kStems[state.range(0)]);
}
BENCHMARK(BM_Completion)->DenseRange(0, 4);

static void BM_BuildAlgebra(benchmark::State& state) {
  Presentation p = corpus(kStems[state.range(0)]);
  RewriteSystem rs = complete_rewriting(p);
  for (auto _ : state) benchmark::DoNotOptimize(build_algebra(p, rs).dim());
  state.SetLabel(kStems[state.range(0)]);
}
BENCHMARK(BM_BuildAlgebra)->DenseRange(0, 4);

static void BM_HH1(benchmark::State& state) {
  Presentation p = corpus(kStems[state.range(0)]);
  Algebra a = build_algebra(p);
  for (auto _ : state) {
    HH1 h(a);
    benchmark::DoNotOptimize(h.dim());
  }
  state.SetLabel(kStems[state.range(0)]);
}
BENCHMARK(BM_HH1)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_BracketTable(benchmark::State& state) {
  Presentation p = corpus(kStems[state.range(0)]);
  Algebra a = build_algebra(p);
  for (auto _ : state) {
    HH1 h(a);
    benchmark::DoNotOptimize(h.bracket_table().size());
  }
  state.SetLabel(kStems[state.range(0)]);
}
BENCHMARK(BM_BracketTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Analyze(benchmark::State& state) {
  Presentation p = corpus(kStems[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_presentation(p).theta_dim);
  state.SetLabel(kStems[state.range(0)]);
}
BENCHMARK(BM_Analyze)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_Smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).rank);
}
BENCHMARK(BM_Smith)->RangeMultiplier(2)->Range(4, 32);

BENCHMARK_MAIN();
