#include <numbers>

#include <benchmark/benchmark.h>

#include "polarmap/gallery/presets.hpp"
#include "polarmap/gallery/surfaces.hpp"
#include "polarmap/hypersurface/nullity.hpp"
#include "polarmap/hypersurface/structure.hpp"
#include "polarmap/polar/polar_map.hpp"

using namespace polarmap;

namespace {

PresetInstance preset(const char* name) { return find_preset(name)->build({}); }

Vec3 centre(const ParamBox& box) { return 0.5 * (box.lo + box.hi); }

void BM_SurfaceJet(benchmark::State& state) {
  const auto inst = preset("bryant-z5-z2");
  const Vec2 z(0.21, -0.13);
  for (auto _ : state) benchmark::DoNotOptimize(inst.base->jet(z));
}
BENCHMARK(BM_SurfaceJet);

void BM_NormalFrame(benchmark::State& state) {
  const auto inst = preset("bryant-z5-z2");
  const Vec2 z(0.21, -0.13);
  for (auto _ : state) benchmark::DoNotOptimize(normal_frame(*inst.base, z));
}
BENCHMARK(BM_NormalFrame);

void BM_PolarOperator(benchmark::State& state) {
  const auto inst = preset("clifford-euclidean");
  const Vec3 p = centre(inst.box);
  for (auto _ : state) benchmark::DoNotOptimize(inst.polar->operator_sample(p.head<2>(), p.z()));
}
BENCHMARK(BM_PolarOperator);

void BM_InducedMetric(benchmark::State& state) {
  const auto inst = preset("clifford-hyperbolic");
  const Vec3 p = centre(inst.box);
  for (auto _ : state) benchmark::DoNotOptimize(induced_metric(*inst.polar, p.head<2>(), p.z()));
}
BENCHMARK(BM_InducedMetric);

void BM_HypersurfaceSample(benchmark::State& state) {
  const auto inst = preset("clifford-spherical");
  const Vec3 p = centre(inst.box);
  for (auto _ : state) benchmark::DoNotOptimize(sample(*inst.hypersurface, p));
}
BENCHMARK(BM_HypersurfaceSample);

void BM_StructureResiduals(benchmark::State& state) {
  const auto inst = preset("clifford-spherical");
  const Vec3 p = centre(inst.box);
  StructureOptions opt;
  opt.harmonic = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(structure_residuals(*inst.hypersurface, p, opt));
}
BENCHMARK(BM_StructureResiduals)->Arg(0)->Arg(1);

void BM_NullityTrace(benchmark::State& state) {
  const auto inst = preset("bryant-z5-z2");
  const Vec3 p(0.2, 0.1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(trace_nullity_geodesic(*inst.hypersurface, p, 0.1, 0.002));
}
BENCHMARK(BM_NullityTrace);

void BM_LocusScan(benchmark::State& state) {
  const auto inst = preset("bryant-z5-z2");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(geodesic_locus_scan(*inst.hypersurface, {n, n, 4}, inst.locus_eps));
}
BENCHMARK(BM_LocusScan)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
