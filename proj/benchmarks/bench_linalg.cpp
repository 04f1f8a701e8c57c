#include "seaweed/matrix.hpp"
#include "seaweed/subspace.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace seaweed;

namespace {

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(gen() % 2001) - 1000;
  return m;
}

void BM_Rank(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 64);

void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n, 2);
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) + m(1, j);  // force a kernel
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
