#include "seaweed/classify.hpp"
#include "seaweed/contact.hpp"
#include "seaweed/kirillov.hpp"
#include "seaweed/seaweed.hpp"

#include <benchmark/benchmark.h>

using namespace seaweed;

namespace {

// A staircase seaweed in gl(n): (n-1, 1) | (1, n-1).
LieAlgebra staircase(std::size_t n) {
  return gln_seaweed(Composition({n - 1, 1}), Composition({1, n - 1}));
}

void BM_Construct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(staircase(n));
}
BENCHMARK(BM_Construct)->DenseRange(3, 7, 2);

void BM_Index(benchmark::State& state) {
  const LieAlgebra g = staircase(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(index(g, 1, 3, 1'000'000));
  state.counters["dim"] = static_cast<double>(g.dim());
}
BENCHMARK(BM_Index)->DenseRange(3, 7, 2);

void BM_ContactSearch(benchmark::State& state) {
  const LieAlgebra g = gln_seaweed(Composition({2, 1}), Composition({3}));
  for (auto _ : state) benchmark::DoNotOptimize(find_contact_form(g, 1, 64, 1'000'000));
}
BENCHMARK(BM_ContactSearch);

void BM_Classify(benchmark::State& state) {
  ClassifyOptions opts;
  opts.family = Family::GL;
  opts.n = static_cast<std::size_t>(state.range(0));
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(classify(opts));
}
BENCHMARK(BM_Classify)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
