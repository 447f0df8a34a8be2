#include <benchmark/benchmark.h>

#include "renyi/divergence.hpp"
#include "renyi/generators.hpp"

using namespace renyi;

static void BM_SpectralDecompose(benchmark::State& state) {
  Rng rng(substream(Seed{1}, 0));
  const HermitianMatrix a = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(a));
}
BENCHMARK(BM_SpectralDecompose)->DenseRange(2, 8, 2)->Arg(16)->Arg(32);

static void BM_MatrixPower(benchmark::State& state) {
  const HermitianMatrix a = random_pd(static_cast<std::size_t>(state.range(0)), Seed{2}, 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_power(a, 0.5));
}
BENCHMARK(BM_MatrixPower)->DenseRange(2, 8, 2)->Arg(16);

static void BM_MutualInformation(benchmark::State& state) {
  const std::size_t da = static_cast<std::size_t>(state.range(0)), db = static_cast<std::size_t>(state.range(1));
  const DensityMatrix rho = random_density(da * db, Seed{3}).with_dims({da, db});
  for (auto _ : state) benchmark::DoNotOptimize(mutual_information(rho, 2.0).value);
}
BENCHMARK(BM_MutualInformation)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_RelativeEntropy(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const DensityMatrix rho = random_density(d, Seed{4});
  const HermitianMatrix sigma = random_density(d, Seed{5}).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(renyi_relative_entropy(rho, sigma, 2.0).value);
}
BENCHMARK(BM_RelativeEntropy)->DenseRange(2, 8, 2);
BENCHMARK_MAIN();
