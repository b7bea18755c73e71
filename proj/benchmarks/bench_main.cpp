#include <benchmark/benchmark.h>

#include <random>

#include "dias/catalog.hpp"
#include "dias/extensions.hpp"

using namespace dias;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::from_int(f, static_cast<long>(rng() % 19) - 9);
  return m;
}

void BM_RrefRational(benchmark::State& state) {
  Matrix m = random_matrix(FieldSpec::rational(), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefPrime(benchmark::State& state) {
  Matrix m = random_matrix(FieldSpec::prime(1000003), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_H2Abelian(benchmark::State& state) {
  DiasAlgebra L = abelian(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h2(L, 1).dim());
}
BENCHMARK(BM_H2Abelian)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_CoverExampleCover(benchmark::State& state) {
  DiasAlgebra L = example3_cover(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_cover(L).multiplier_dim);
}
BENCHMARK(BM_CoverExampleCover)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Theorem49TwoStep(benchmark::State& state) {
  DiasAlgebra L = random_two_step(3, 3, FieldSpec::prime(7), 42);
  Subspace Z = center(L);
  for (auto _ : state) benchmark::DoNotOptimize(theorem49_report(L, Z).agree());
}
BENCHMARK(BM_Theorem49TwoStep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
