#include <benchmark/benchmark.h>

#include "rdlab/gf.hpp"
#include "rdlab/grouplab.hpp"
#include "rdlab/mvpoly.hpp"
#include "rdlab/projgeom.hpp"

using namespace rdlab;

namespace {

VarietySystem y123(const FieldPtr& f) {
  return VarietySystem::make({MultiPoly::elementary_symmetric(f, 7, 1),
                              MultiPoly::elementary_symmetric(f, 7, 2),
                              MultiPoly::elementary_symmetric(f, 7, 3)});
}

void BM_FieldMulInv(benchmark::State& state) {
  auto f = Field::make(7, 2);  // F49, table-backed
  uint32_t acc = 1;
  for (auto _ : state) {
    for (uint32_t a = 1; a < f->size(); ++a)
      acc = f->mul(acc, f->inv(a)) | 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMulInv);

void BM_ProjectiveEnumeration(benchmark::State& state) {
  auto f = Field::make(5, 1);
  for (auto _ : state) {
    auto pts = projective_points(f, 7, 1u << 20);  // 19531 points of P^6(F5)
    benchmark::DoNotOptimize(pts.size());
  }
}
BENCHMARK(BM_ProjectiveEnumeration);

void BM_VarietyCensus(benchmark::State& state) {
  auto f = Field::make(5, 1);
  auto sys = y123(f);
  for (auto _ : state) {
    uint64_t n = variety_point_count(sys, 1u << 20);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_VarietyCensus);

void BM_SliceTrial(benchmark::State& state) {
  auto f = Field::make(7, 1);
  auto sys = y123(f);
  uint64_t seed = 42;
  for (auto _ : state) {
    auto stats = slice_point_count(sys, 1, 4, seed++, 6);
    benchmark::DoNotOptimize(stats.trials);
  }
}
BENCHMARK(BM_SliceTrial)->Unit(benchmark::kMillisecond);

void BM_SchreierSimsSp43(benchmark::State& state) {
  for (auto _ : state) {
    auto g = symplectic_group(2, 3);  // order 51840 on 80 vectors
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsSp43)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
