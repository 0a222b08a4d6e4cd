// Serial reference kernels against their OpenMP twins.

#include <benchmark/benchmark.h>

#include "siegel/batch.hpp"
#include "support/generators.hpp"

namespace {

using namespace siegel;

struct Fixture {
  SimpleModelStructure b;
  std::vector<PolyMap> maps;
  ModelStructure model;
  std::vector<Point> points;
  Automorphism g;
  std::vector<numeric::CPoint> samples;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    testing::Rng rng(4242);
    const auto b = testing::block_structure(5, rng);
    std::vector<PolyMap> maps;
    for (int t = 0; t < 32; ++t) maps.push_back(testing::random_automorphism(b, rng, false).as_polymap());
    const ModelStructure model = testing::random_model(4, rng, 3);
    std::vector<Point> pts;
    for (int t = 0; t < 32; ++t) pts.push_back(testing::boundary_point(4, rng));
    const Automorphism g = testing::random_automorphism(b, rng, true);
    return Fixture{b, maps, model, pts, g, numeric::samples(5, 20000, 9)};
  }();
  return f;
}

void BM_ReconstructSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(batch::reconstruct_all_serial(fixture().maps, fixture().b));
}
void BM_ReconstructParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(batch::reconstruct_all(fixture().maps, fixture().b));
}

void BM_LeviGridSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(batch::levi_grid_serial(fixture().model, fixture().points));
}
void BM_LeviGridParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(batch::levi_grid(fixture().model, fixture().points));
}

double rho_defect(const numeric::CPoint& z) { return numeric::automorphism_rho_defect(fixture().g, z); }

void BM_MaxDefectSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(batch::max_defect_serial(rho_defect, fixture().samples));
}
void BM_MaxDefectParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(batch::max_defect(rho_defect, fixture().samples));
}

BENCHMARK(BM_ReconstructSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReconstructParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LeviGridSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LeviGridParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaxDefectSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaxDefectParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
