// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "binvert/oracles.hpp"
#include "binvert/transforms.hpp"

namespace {

void BM_TriangleSerial(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = binvert::fm(binvert::FamilySpec::central_adjacent(), 1, N);
  for (auto _ : state) benchmark::DoNotOptimize(binvert::reference::c_triangle(f, N));
}

void BM_TriangleParallel(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = binvert::fm(binvert::FamilySpec::central_adjacent(), 1, N);
  for (auto _ : state) benchmark::DoNotOptimize(binvert::c_triangle(f, N));
}

template <binvert::Exec exec>
void BM_P4Words(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binvert::count_p4_words(n, 2, exec));
}

template <binvert::Exec exec>
void BM_P1Words(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        binvert::count_p1_words(3, 2, n, std::nullopt, binvert::Reading::Blocks, exec));
  }
}

template <binvert::Exec exec>
void BM_ConcatTwoPeak(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binvert::count_concat_two_peak(n, 3, exec));
}

}  // namespace

BENCHMARK(BM_TriangleSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TriangleParallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_P4Words, binvert::Exec::Serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_P4Words, binvert::Exec::Parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_P1Words, binvert::Exec::Serial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_P1Words, binvert::Exec::Parallel)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_ConcatTwoPeak, binvert::Exec::Serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_ConcatTwoPeak, binvert::Exec::Parallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
