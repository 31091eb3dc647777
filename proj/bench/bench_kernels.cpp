#include "cpx/coxeter.hpp"
#include "cpx/magnus.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

cpx::Diagram bench_diagram(int which) {
  switch (which) {
    case 0: return cpx::build(cpx::Family::AffE, 8);
    case 1: return cpx::build(cpx::Family::AffD, 10);
    default: return cpx::build(cpx::Family::AffA, 12);
  }
}

void BM_CofactorsSerial(benchmark::State& st) {
  auto d = bench_diagram(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cpx::cofactors_serial(d));
  st.SetLabel(d.name());
}

void BM_CofactorsParallel(benchmark::State& st) {
  auto d = bench_diagram(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cpx::cofactors(d));
  st.SetLabel(d.name());
}

cpx::MagnusSeries random_series(int n, int order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  cpx::FreeWord w;
  for (int k = 0; k < 3 * order; ++k) {
    int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    w.push_back(rng() % 2 ? g : -g);
  }
  return cpx::magnus(w, n, order);
}

void BM_MagnusSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), order = static_cast<int>(st.range(1));
  auto a = random_series(n, order, 1), b = random_series(n, order, 2);
  for (auto _ : st) benchmark::DoNotOptimize(cpx::multiply_serial(a, b));
}

void BM_MagnusParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), order = static_cast<int>(st.range(1));
  auto a = random_series(n, order, 1), b = random_series(n, order, 2);
  for (auto _ : st) benchmark::DoNotOptimize(cpx::multiply(a, b));
}

}  // namespace

BENCHMARK(BM_CofactorsSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CofactorsParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MagnusSerial)->Args({2, 12})->Args({3, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MagnusParallel)->Args({2, 12})->Args({3, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
