#include <benchmark/benchmark.h>

#include <random>

#include "folcoh/complexes.hpp"
#include "folcoh/linalg.hpp"
#include "folcoh/model.hpp"

using namespace folcoh;

namespace {

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Scalar(Rational(num(rng)) / den(rng));
  return m;
}

void bm_rref(benchmark::State& state) {
  int n = int(state.range(0));
  Matrix m = random_matrix(n, n, 42);
  for (auto _ : state) {
    Matrix copy = m;
    benchmark::DoNotOptimize(rank(copy));
  }
}
BENCHMARK(bm_rref)->Arg(8)->Arg(16)->Arg(32);

void bm_spectral_pages(benchmark::State& state) {
  DoubleComplex dc = double_complex_from_model(builtin("complex_nonlemma"));
  for (auto _ : state) {
    int p = degeneration_page(dc, Filtration::First);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(bm_spectral_pages);

void bm_total_complex(benchmark::State& state) {
  DoubleComplex dc = double_complex_from_model(builtin("complex_nonlemma"));
  for (auto _ : state) {
    CochainComplex tot = total_complex(dc);
    benchmark::DoNotOptimize(tot.max_degree());
  }
}
BENCHMARK(bm_total_complex);

}  // namespace

BENCHMARK_MAIN();
