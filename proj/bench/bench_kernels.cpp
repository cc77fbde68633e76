// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qlimit/certify.hpp"
#include "qlimit/optomech/sweep.hpp"

namespace {

using namespace qlimit;
using namespace qlimit::optomech;

SweepRequest detuned_request(std::size_t points) {
  SweepRequest r;
  r.model = ModelKind::Detuned;
  r.params = fig2_detuned();
  r.omegas = FrequencyGrid{1e-2, 1e1, points, true}.points();
  return r;
}

SweepRequest locking_request(std::size_t points) {
  SweepRequest r;
  r.model = ModelKind::Locking;
  r.params = fig2_locking_force();
  r.omegas = FrequencyGrid{1e-2, 1e1, points, true}.points();
  r.lambda.mode = LambdaMode::OptimizeForce;
  return r;
}

void BM_DetunedSweepSerial(benchmark::State& state) {
  const auto req = detuned_request(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(req));
}

void BM_DetunedSweepParallel(benchmark::State& state) {
  const auto req = detuned_request(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(req));
}

void BM_OptimizedSweepSerial(benchmark::State& state) {
  const auto req = locking_request(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(req));
}

void BM_OptimizedSweepParallel(benchmark::State& state) {
  const auto req = locking_request(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(req));
}

void BM_CertifySerial(benchmark::State& state) {
  CertifyConfig c;
  c.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_bounds_serial(c));
}

void BM_CertifyParallel(benchmark::State& state) {
  CertifyConfig c;
  c.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_bounds_parallel(c));
}

}  // namespace

BENCHMARK(BM_DetunedSweepSerial)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetunedSweepParallel)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizedSweepSerial)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizedSweepParallel)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifySerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyParallel)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
