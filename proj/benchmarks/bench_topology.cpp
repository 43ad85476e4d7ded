#include <benchmark/benchmark.h>

#include "msoro/topology.hpp"

using namespace msoro;

static void BM_PlanarOutline(benchmark::State& state) {
  const auto solid = solid_params(static_cast<SolidName>(state.range(0)));
  const auto curve = sinusoidal_curve(1.0, 0.86);
  const double R = solid.circumradius_ratio;
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(planar_outline(solid, curve, R, N));
  }
}
BENCHMARK(BM_PlanarOutline)
    ->Args({int(SolidName::cube), 128})
    ->Args({int(SolidName::cube), 512})
    ->Args({int(SolidName::icosahedron), 512});

static void BM_SphericalTiling(benchmark::State& state) {
  const auto solid = solid_params(static_cast<SolidName>(state.range(0)));
  const auto curve = sinusoidal_curve(1.0, 0.5);
  const double R = solid.circumradius_ratio;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spherical_tiling(solid, curve, R, 256));
  }
}
BENCHMARK(BM_SphericalTiling)
    ->Arg(int(SolidName::tetrahedron))
    ->Arg(int(SolidName::icosahedron));

BENCHMARK_MAIN();
