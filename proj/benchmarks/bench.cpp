#include <benchmark/benchmark.h>

#include <string>

#include "goodsemi/apery.hpp"
#include "goodsemi/io.hpp"
#include "goodsemi/minimality.hpp"
#include "goodsemi/reducibility.hpp"
#include "goodsemi/tracks.hpp"
#include "goodsemi/tropical.hpp"

using namespace goodsemi;

namespace {

const char* const kExamples[] = {"six_tracks.gen", "sor_unreduced.gen", "two_msor_sizes.gen", "gap_bedim.gen",
                                 "gap_big_bedim.gen"};

GoodSemigroup example(int i) {
  return load_semigroup(std::string(GOODSEMI_DATA_DIR) + "/" + kExamples[i], true);
}

void BM_Reconstruct(benchmark::State& state) {
  const auto ia = irreducible_absolutes(example(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_from_ia(ia));
  state.SetLabel(kExamples[state.range(0)]);
}
BENCHMARK(BM_Reconstruct)->DenseRange(0, 4);

void BM_IrreducibleAbsolutes(benchmark::State& state) {
  const auto s = example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_absolutes(s));
  state.SetLabel(kExamples[state.range(0)]);
}
BENCHMARK(BM_IrreducibleAbsolutes)->DenseRange(0, 4);

void BM_Tracks(benchmark::State& state) {
  const auto s = example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tracks(s));
  state.SetLabel(kExamples[state.range(0)]);
}
BENCHMARK(BM_Tracks)->DenseRange(0, 4);

void BM_RedClosure(benchmark::State& state) {
  const auto s = example(0);
  const GeneratorSet eta{{4, 3}, {7, 13}, {kInf, 12}, {kInf, 16}, {kInf, 26}};
  for (auto _ : state) benchmark::DoNotOptimize(red_closure(s, eta));
}
BENCHMARK(BM_RedClosure);

void BM_Edim(benchmark::State& state) {
  const auto s = example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edim(s));
  state.SetLabel(kExamples[state.range(0)]);
}
BENCHMARK(BM_Edim)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_AperyLevels(benchmark::State& state) {
  const auto s = example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apery_levels(s));
  state.SetLabel(kExamples[state.range(0)]);
}
BENCHMARK(BM_AperyLevels)->DenseRange(0, 4);

void BM_EnumerateWithConductor(benchmark::State& state) {
  const Point c{state.range(0), state.range(0)};
  std::size_t n = 0;
  for (auto _ : state) n = enumerate_with_conductor(c).size();
  state.counters["semigroups"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateWithConductor)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_ConductorBound(benchmark::State& state) {
  const GeneratorSet eta{{4, 3}, {7, 13}};
  for (auto _ : state) benchmark::DoNotOptimize(conductor_bound(eta));
}
BENCHMARK(BM_ConductorBound);

}  // namespace

BENCHMARK_MAIN();
