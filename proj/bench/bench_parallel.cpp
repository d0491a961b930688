#include <benchmark/benchmark.h>

#include "conical/entanglement.hpp"
#include "conical/sweep.hpp"

using namespace conical;

namespace {

SweepSpec bench_spec() {
  SweepSpec s;
  s.axis = SweepAxis::D;
  s.lo = 0.05;
  s.hi = 3.0;
  s.n = 64;
  s.nu = 3.7;
  s.l = 0.4;
  s.alignments = {Alignment::ParallelSameSide, Alignment::OrthogonalSameSide};
  return s;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = bench_spec();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(spec));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = bench_spec();
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec, static_cast<int>(state.range(0))));
}

void BM_DmaxSerial(benchmark::State& state) {
  const ConeParameter nu(2.5);
  for (auto _ : state) benchmark::DoNotOptimize(d_max_serial(Alignment::ParallelSameSide, nu, 0.5, 0.1));
}

void BM_DmaxParallel(benchmark::State& state) {
  const ConeParameter nu(2.5);
  DmaxScan scan;
  scan.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d_max(Alignment::ParallelSameSide, nu, 0.5, 0.1, scan));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DmaxSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DmaxParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
