#include <benchmark/benchmark.h>

#include <vector>

#include "rkdisc/appendix.hpp"
#include "rkdisc/atomic_extremal.hpp"
#include "rkdisc/gramian.hpp"
#include "rkdisc/inner.hpp"
#include "rkdisc/numerics.hpp"
#include "rkdisc/rng.hpp"

namespace {

using namespace rkdisc;

std::vector<UnitDiscPoint> fixed_points(int count) {
  Rng rng(12);
  std::vector<UnitDiscPoint> points;
  while (static_cast<int>(points.size()) < count) {
    const auto z = rng.disc_point(0.1, 0.8);
    bool ok = true;
    for (const auto& p : points)
      if (std::abs(p.value() - z.value()) < 0.05) ok = false;
    if (ok) points.push_back(z);
  }
  return points;
}

void BM_KernelEvalDirichlet(benchmark::State& state) {
  const auto kernel = DiagonalKernel::dirichlet();
  const UnitDiscPoint z(0.4, 0.3), w(-0.2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(kernel.eval(z, w));
}
BENCHMARK(BM_KernelEvalDirichlet);

void BM_KernelEvalWeightedSeries(benchmark::State& state) {
  const auto kernel = DiagonalKernel::weighted_ds(0.5);
  const UnitDiscPoint z(0.4, 0.3), w(-0.2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(kernel.eval(z, w));
}
BENCHMARK(BM_KernelEvalWeightedSeries);

void BM_KernelDerivSeries(benchmark::State& state) {
  const auto kernel = DiagonalKernel::dirichlet();
  const UnitDiscPoint z(0.7, 0.0), w(0.7, 0.0);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel.deriv(order, order, z, w));
}
BENCHMARK(BM_KernelDerivSeries)->Arg(1)->Arg(3);

void BM_GammaExtremal(benchmark::State& state) {
  const auto kernel = DiagonalKernel::dirichlet();
  const auto points = fixed_points(static_cast<int>(state.range(0)));
  const auto constraints = ConstraintSet::at_points(points);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_extremal(kernel, constraints).gamma);
}
BENCHMARK(BM_GammaExtremal)->Arg(2)->Arg(4)->Arg(8);

void BM_GammaBruteforce(benchmark::State& state) {
  const auto kernel = DiagonalKernel::dirichlet();
  const auto points = fixed_points(4);
  const auto constraints = ConstraintSet::at_points(points);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_bruteforce_poly(kernel, constraints, degree));
}
BENCHMARK(BM_GammaBruteforce)->Arg(64)->Arg(256);

void BM_AppendixGamma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(appendix_gamma(0.01, 0.5, 0.62));
}
BENCHMARK(BM_AppendixGamma);

void BM_ExpIntegralE1(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_integral_e1(x));
    x = (x < 20.0) ? x + 0.1 : 0.1;
  }
}
BENCHMARK(BM_ExpIntegralE1);

void BM_GammaAtomic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gamma_atomic(0.5));
}
BENCHMARK(BM_GammaAtomic);

void BM_BlaschkeApprox(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_blaschke_approx(0.5, n).gamma_n);
}
BENCHMARK(BM_BlaschkeApprox)->Arg(8)->Arg(64);

void BM_PoissonIntegral(benchmark::State& state) {
  const auto nodes = static_cast<int>(state.range(0));
  auto F = [](CirclePoint zeta) { return std::norm(1.0 - zeta.value()); };
  const UnitDiscPoint w(0.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_integral(F, w, nodes));
}
BENCHMARK(BM_PoissonIntegral)->Arg(1024)->Arg(4096);

void BM_CarlesonNorm(benchmark::State& state) {
  InnerSpec spec;
  spec.singular = AtomicMeasure({{CirclePoint(0.0), 0.5}});
  auto f = [](CirclePoint zeta) { return 1.0 - zeta.value(); };
  for (auto _ : state) benchmark::DoNotOptimize(carleson_norm_sq(spec, f, 3.0, 512));
}
BENCHMARK(BM_CarlesonNorm);

}  // namespace

BENCHMARK_MAIN();
