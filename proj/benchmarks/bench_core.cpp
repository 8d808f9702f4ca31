// Microbenchmarks for the hot paths: tableau counting, quantum products,
// and wall enumeration along a scaling ray.

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "parmod/partition.hpp"
#include "parmod/quantum.hpp"
#include "parmod/schubert.hpp"
#include "parmod/walls.hpp"
#include "parmod/weights.hpp"

using namespace parmod;

namespace {

void BM_LrCoefficient(benchmark::State& state) {
  // A mid-sized rectangle target keeps the recursion honest.
  Partition lam({4, 2, 1}), mu({3, 3, 1}), nu({5, 4, 3, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(lr_coefficient(lam, mu, nu));
  }
}
BENCHMARK(BM_LrCoefficient);

void BM_CupProductFullFlagClass(benchmark::State& state) {
  CohomologyClass a = cohomology_class(6, 3, Partition({2, 1}));
  CohomologyClass b = cohomology_class(6, 3, Partition({3, 1, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cup_product(a, b));
  }
}
BENCHMARK(BM_CupProductFullFlagClass);

void BM_QuantumProduct(benchmark::State& state) {
  QuantumClass a = quantum_class(6, 3, Partition({2, 2, 1}));
  QuantumClass b = quantum_class(6, 3, Partition({3, 2}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum_product(a, b));
  }
}
BENCHMARK(BM_QuantumProduct);

void BM_GwInvariant(benchmark::State& state) {
  std::vector<Partition> cls = {Partition({2, 2}), Partition({2, 2}),
                                Partition({2, 2})};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw_invariant(4, 2, cls, 2));
  }
}
BENCHMARK(BM_GwInvariant);

void BM_ScalingWallsRankThree(benchmark::State& state) {
  std::vector<std::vector<Rat>> rows(7, {Rat(1, 2), Rat(1, 8)});
  ParabolicWeight base = ParabolicWeight::interior(3, 7, rows);
  ScalingPath path = ScalingPath::make(base, Rat(3, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scaling_walls(path));
  }
}
BENCHMARK(BM_ScalingWallsRankThree);

void BM_WallsThroughCorner(benchmark::State& state) {
  std::vector<std::vector<Rat>> rows(4, {Rat(1, 2)});
  ParabolicWeight w = ParabolicWeight::interior(2, 4, rows);
  for (auto _ : state) {
    benchmark::DoNotOptimize(walls_through(w));
  }
}
BENCHMARK(BM_WallsThroughCorner);

}  // namespace

BENCHMARK_MAIN();
