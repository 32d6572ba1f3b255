// Serial reference versus OpenMP kernel on the same inputs.
#include <benchmark/benchmark.h>

#include "lie/kernels.hpp"
#include "lie/lspath.hpp"

using namespace lie;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_DominantMultiplicities(benchmark::State& state) {
  auto g = RootSystem::build('E', 6);
  Weight lam = g.rho();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::dominant_multiplicities(lam, g.full(), exec_of(state)));
}

void BM_Convolve(benchmark::State& state) {
  auto g = RootSystem::build('C', 4);
  auto x = freudenthal(g.from_fundamental({1, 1, 0, 0}), g.full());
  auto y = freudenthal(g.from_fundamental({0, 1, 0, 1}), g.full());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve(x, y, exec_of(state)));
}

void BM_PathModel(benchmark::State& state) {
  auto g = RootSystem::build('B', 3);
  Weight lam = g.from_fundamental({1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(path_model(lam, g.full(), kDefaultGuard, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_DominantMultiplicities)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathModel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
