#include <benchmark/benchmark.h>

#include "heisgeo/catalog.hpp"
#include "heisgeo/graph_geometry.hpp"
#include "heisgeo/ruled_geometry.hpp"
#include "heisgeo/sampling.hpp"
#include "heisgeo/solver.hpp"
#include "heisgeo/variational.hpp"

namespace {

using namespace heisgeo;

void BM_PointReport(benchmark::State& state) {
  const CatalogSurface saddle = CatalogSurface::saddle_type(1.0);
  const Domain2 box{-5, 5, -5, 5};
  std::uint64_t idx = 1;
  for (auto _ : state) {
    const Point2 pt = halton2(idx++, box);
    const SurfacePointReport r =
        point_report(saddle.jet_at(pt.x, pt.y), pt.x, pt.y);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PointReport);

void BM_MinimalResidual(benchmark::State& state) {
  const CatalogSurface saddle = CatalogSurface::saddle_type(1.0);
  const Domain2 box{-5, 5, -5, 5};
  std::uint64_t idx = 1;
  for (auto _ : state) {
    const Point2 pt = halton2(idx++, box);
    benchmark::DoNotOptimize(
        minimal_residual(saddle.jet_at(pt.x, pt.y), pt.x, pt.y));
  }
}
BENCHMARK(BM_MinimalResidual);

void BM_SolveSaddle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CatalogSurface saddle = CatalogSurface::saddle_type(1.0);
  DirichletProblem problem{
      {-1, 1, -1, 1}, n,
      [&saddle](double x, double y) { return saddle.jet_at(x, y).f; },
      {}};
  for (auto _ : state) {
    const SolveResult result = solve(problem);
    benchmark::DoNotOptimize(result.final_residual);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveSaddle)->Arg(17)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond)->Complexity();

void BM_DirectrixRk4(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    const OdeTrajectory traj =
        integrate_directrix_system(0, 0, 0, 2.0, 0.0, 2.0, step);
    benchmark::DoNotOptimize(traj.states.back());
  }
}
BENCHMARK(BM_DirectrixRk4)->Arg(100)->Arg(1000)->Arg(10000);

void BM_AreaQuadrature(benchmark::State& state) {
  const int panels = static_cast<int>(state.range(0));
  const CatalogSurface saddle = CatalogSurface::saddle_type(1.0);
  const Domain2 unit{0, 1, 0, 1};
  const QuadratureSpec quad{QuadRule::midpoint, panels, panels};
  for (auto _ : state) {
    benchmark::DoNotOptimize(area(saddle, unit, quad));
  }
  state.SetComplexityN(panels);
}
BENCHMARK(BM_AreaQuadrature)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace

BENCHMARK_MAIN();
