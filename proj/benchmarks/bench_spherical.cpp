#include <benchmark/benchmark.h>

#include "fll/sampling.hpp"
#include "fll/spherical.hpp"

using namespace fll;

static void BM_Zonal(benchmark::State& state) {
  DetRng rng(3);
  const SU2Element g = random_su2(rng);
  const unsigned ell = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zonal(ell, g));
}
BENCHMARK(BM_Zonal)->Arg(2)->Arg(8)->Arg(32);

static void BM_KAverage(benchmark::State& state) {
  DetRng rng(4);
  const SU2Element x = random_su2(rng);
  const SU2Element y = random_su2(rng);
  const CircleQuadrature quad(static_cast<unsigned>(state.range(0)));
  const GroupFn f = zonal_fn(8);
  for (auto _ : state) benchmark::DoNotOptimize(k_average(f, x, y, quad));
}
BENCHMARK(BM_KAverage)->Arg(64)->Arg(256);

static void BM_ZonalFunctional(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const EulerQuadrature quad(n, n, n);
  const GroupFn f = zonal_fn(2);
  for (auto _ : state) benchmark::DoNotOptimize(zonal_functional(f, 2, quad));
}
BENCHMARK(BM_ZonalFunctional)->Arg(8)->Arg(16)->Arg(32);

static void BM_ConvolutionPoint(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const EulerQuadrature quad(n, n, n);
  const GroupFn f = zonal_fn(1);
  const GroupFn h = zonal_fn(2);
  const GroupFn conv = haar_convolve(f, h, quad);
  DetRng rng(5);
  const SU2Element g = random_su2(rng);
  for (auto _ : state) benchmark::DoNotOptimize(conv(g));
}
BENCHMARK(BM_ConvolutionPoint)->Arg(8)->Arg(16);
