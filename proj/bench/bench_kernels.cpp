// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary width.

#include <benchmark/benchmark.h>

#include <random>

#include "abelcount/modular.hpp"
#include "abelcount/oracle.hpp"
#include "abelcount/qseries.hpp"
#include "abelcount/table.hpp"

using namespace abelcount;

namespace {

QSeries dg2_power(std::size_t prec, unsigned e) {
  return pow(d_operator(eisenstein_g2(prec)), e);
}

void BM_MulSerial(benchmark::State& state) {
  const auto prec = static_cast<std::size_t>(state.range(0));
  const auto a = dg2_power(prec, 3);
  const auto b = generating_series(InvariantKind::FLS, 4, prec);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_serial(a, b));
}

void BM_MulParallel(benchmark::State& state) {
  const auto prec = static_cast<std::size_t>(state.range(0));
  const auto a = dg2_power(prec, 3);
  const auto b = generating_series(InvariantKind::FLS, 4, prec);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_parallel(a, b));
}

void BM_OracleSerial(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_n(g, 12, oracle::Exec::serial));
}

void BM_OracleParallel(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_n(g, 12, oracle::Exec::parallel));
}

void BM_TableSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table(InvariantKind::N, {1, 10}, {0, 30}, Source::closed_form, oracle::Exec::serial));
  }
}

void BM_TableParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table(InvariantKind::N, {1, 10}, {0, 30}, Source::closed_form, oracle::Exec::parallel));
  }
}

}  // namespace

BENCHMARK(BM_MulSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MulParallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OracleSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
