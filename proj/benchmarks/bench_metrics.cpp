#include <benchmark/benchmark.h>

#include "msoro/metrics.hpp"

using namespace msoro;

namespace {

PlanarOutline cube_outline(int N) {
  const auto solid = solid_params(SolidName::cube);
  return planar_outline(solid, sinusoidal_curve(1.0, 0.86),
                        solid.circumradius_ratio, N);
}

}  // namespace

static void BM_LocomotionAbility(benchmark::State& state) {
  const auto outline = cube_outline(512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(locomotion_ability(outline, default_c_slack(1.0)));
  }
}
BENCHMARK(BM_LocomotionAbility);

static void BM_IntramodularDistortion(benchmark::State& state) {
  const auto outline = cube_outline(512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(intramodular_distortion(outline));
  }
}
BENCHMARK(BM_IntramodularDistortion);

static void BM_IntermodularMinimization(benchmark::State& state) {
  const auto outline = cube_outline(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(intermodular(outline));
  }
}
BENCHMARK(BM_IntermodularMinimization)->Arg(128)->Arg(512);
