#include <benchmark/benchmark.h>

#include "e2fock/e2group.hpp"
#include "e2fock/identities.hpp"
#include "e2fock/specfun.hpp"

using namespace e2fock;

static void BM_UMatrix(benchmark::State& state) {
  const GroupElement g(1.5, 0.7, 0.3);
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(u_matrix(g, dim));
}
BENCHMARK(BM_UMatrix)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

static void BM_UMatrixElementRoutes(benchmark::State& state) {
  const GroupElement g(2.0, 0.4, -0.9);
  const bool hyp2f0 = state.range(0) != 0;
  for (auto _ : state) {
    cplx acc{};
    for (int m = 0; m <= 25; ++m)
      for (int n = 0; n <= 25; ++n)
        acc += hyp2f0 ? u_matrix_element_hyp2f0(g, m, n) : u_matrix_element(g, m, n);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_UMatrixElementRoutes)->Arg(0)->Arg(1);

static void BM_Kummer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::kummer_phi(n, 5, 7.5));
}
BENCHMARK(BM_Kummer)->Arg(10)->Arg(200)->Arg(10000);

static void BM_KummerSequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::kummer_phi_sequence(200, 21, 16.0));
}
BENCHMARK(BM_KummerSequence);

static void BM_BesselJ(benchmark::State& state) {
  const int nu = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_j(nu, 20.0));
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(20)->Arg(80);

static void BM_BesselIScaled(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_i_exp_scaled(10, 700.0));
}
BENCHMARK(BM_BesselIScaled);

static void BM_AdditionResidual(benchmark::State& state) {
  const GroupElement g(2.0, 0.7, 0.3);
  const IrrepLabel label(2.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(identities::addition_residual(g, label));
}
BENCHMARK(BM_AdditionResidual)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
