#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "radialgeo/radialgeo.hpp"

namespace {

using namespace radialgeo;

void BM_CurvaturePipeline(benchmark::State& state) {
  const ConformalFactor factor = ConformalFactor::radial_model();
  const SurfaceSpec surface = state.range(0) == 0 ? SurfaceSpec::catenoid() : SurfaceSpec::enneper();
  const auto points = grid_points(surface.domain(), Grid{32, 32});
  for (auto _ : state) {
    double acc = 0.0;
    for (const auto& [u, v] : points) {
      const EuclideanCurvature e = euclidean_curvatures(jet(surface, u, v));
      acc += weingarten_functionals(factor, e).w1;
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(points.size()));
  state.SetLabel(surface.name());
}
BENCHMARK(BM_CurvaturePipeline)->Arg(0)->Arg(1);

void BM_GeodesicIntegrate(benchmark::State& state) {
  const ConformalFactor factor = ConformalFactor::exp_model();
  const GeodesicState start{Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.2)};
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate(factor, start, 1.0, step));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeodesicIntegrate)->Arg(100)->Arg(1000)->Arg(10000);

void BM_GeodesicBatch(benchmark::State& state) {
  const ConformalFactor factor = ConformalFactor::radial_model();
  std::vector<GeodesicState> starts;
  for (int i = 0; i < state.range(0); ++i) {
    const double a = 0.1 * i;
    starts.push_back({Vec3(1.0, 0.0, 0.0), Vec3(0.0, std::cos(a), std::sin(a))});
  }
  for (auto _ : state) benchmark::DoNotOptimize(integrate_batch(factor, starts, 1.0, 1e-3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeodesicBatch)->Arg(64)->UseRealTime();

void BM_RootScan(benchmark::State& state) {
  const ConformalFactor factor = ConformalFactor::exp_model();
  const double c0 = 9.0 * std::exp(-2.0);
  for (auto _ : state) benchmark::DoNotOptimize(radius_for_curvature(factor, c0));
}
BENCHMARK(BM_RootScan);

}  // namespace

BENCHMARK_MAIN();
