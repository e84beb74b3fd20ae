#include <random>

#include <benchmark/benchmark.h>

#include "hopfkit/kernels.hpp"

using namespace hopfkit;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-4, 4);
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(d(rng));
  return m;
}

Field field_of(int64_t arg) { return arg == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(arg)); }

void BM_multiply_serial(benchmark::State& state) {
  const Field f = field_of(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, f, 1), b = random_matrix(n, n, f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::multiply(a, b));
}

void BM_multiply_omp(benchmark::State& state) {
  const Field f = field_of(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, f, 1), b = random_matrix(n, n, f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::multiply(a, b));
}

void BM_rref_serial(benchmark::State& state) {
  const Field f = field_of(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 2 * n, f, 3);
  for (auto _ : state) {
    Matrix m = a;
    benchmark::DoNotOptimize(kernels::serial::rref(m));
  }
}

void BM_rref_omp(benchmark::State& state) {
  const Field f = field_of(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 2 * n, f, 3);
  for (auto _ : state) {
    Matrix m = a;
    benchmark::DoNotOptimize(kernels::omp::rref(m));
  }
}

}  // namespace

BENCHMARK(BM_multiply_serial)->ArgsProduct({{16, 36, 64}, {0, 101}});
BENCHMARK(BM_multiply_omp)->ArgsProduct({{16, 36, 64}, {0, 101}});
BENCHMARK(BM_rref_serial)->ArgsProduct({{16, 36, 64}, {0, 101}});
BENCHMARK(BM_rref_omp)->ArgsProduct({{16, 36, 64}, {0, 101}});

BENCHMARK_MAIN();
