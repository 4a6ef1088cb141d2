// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "multirank/counting.hpp"
#include "multirank/cyclotomic.hpp"
#include "multirank/series.hpp"

using namespace multirank;

namespace {

IntSeries random_int_series(std::size_t trunc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  IntSeries s(trunc, Int(0));
  for (std::size_t i = 0; i <= trunc; ++i) s.coeff(i) = coeff(rng);
  return s;
}

CycSeries random_cyc_series(std::size_t trunc, int t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-99, 99);
  CycSeries s(trunc, CyclotomicInt::zero(t));
  for (std::size_t i = 0; i <= trunc; ++i) {
    for (int k = 0; k < t - 1; ++k) {
      s.coeff(i) += CyclotomicInt::from_integer(t, coeff(rng)) *
                    CyclotomicInt::zeta_power(t, k);
    }
  }
  return s;
}

void BM_convolve_int_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntSeries a = random_int_series(n, 1);
  const IntSeries b = random_int_series(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply_serial(a, b));
  }
}

void BM_convolve_int_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntSeries a = random_int_series(n, 1);
  const IntSeries b = random_int_series(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply_parallel(a, b));
  }
}

void BM_convolve_cyc_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CycSeries a = random_cyc_series(n, 5, 3);
  const CycSeries b = random_cyc_series(n, 5, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply_serial(a, b));
  }
}

void BM_convolve_cyc_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CycSeries a = random_cyc_series(n, 5, 3);
  const CycSeries b = random_cyc_series(n, 5, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply_parallel(a, b));
  }
}

void BM_class_counts_serial(benchmark::State& state) {
  const auto stat =
      object_components(FamilySpec::colored_over(2), Statistic::Rbar);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_counts_bruteforce_serial(stat, 3, n));
  }
}

void BM_class_counts_parallel(benchmark::State& state) {
  const auto stat =
      object_components(FamilySpec::colored_over(2), Statistic::Rbar);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_counts_bruteforce(stat, 3, n));
  }
}

}  // namespace

BENCHMARK(BM_convolve_int_serial)->Arg(256)->Arg(512)->Arg(1024);
BENCHMARK(BM_convolve_int_parallel)->Arg(256)->Arg(512)->Arg(1024);
BENCHMARK(BM_convolve_cyc_serial)->Arg(128)->Arg(256);
BENCHMARK(BM_convolve_cyc_parallel)->Arg(128)->Arg(256);
BENCHMARK(BM_class_counts_serial)->Arg(16)->Arg(20);
BENCHMARK(BM_class_counts_parallel)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
