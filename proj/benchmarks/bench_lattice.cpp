#include <benchmark/benchmark.h>

#include "avoidance/avoidance.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/maps.hpp"

namespace {

using namespace avoidance;

// F_2[x,y] truncated at degree k: 2^(k(k+1)/2) elements.
RingDescription truncated_plane(unsigned k) { return desc::poly_quotient(desc::gf(2), {"x", "y"}, k); }

const std::vector<RingDescription>& workloads() {
  static const std::vector<RingDescription> rings = {
      desc::zmod(360),
      truncated_plane(2),
      truncated_plane(3),
      desc::product({desc::zmod(4), truncated_plane(2), desc::gf(3)}),
  };
  return rings;
}

void BM_AllIdeals(benchmark::State& state) {
  const Ring ring = build_ring(workloads()[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(all_ideals(ring).size());
  state.SetLabel(to_string(ring->desc()) + " |R|=" + std::to_string(ring->size()));
}
BENCHMARK(BM_AllIdeals)->DenseRange(0, 3);

void BM_AvoidanceRing(benchmark::State& state) {
  const Ring ring = build_ring(workloads()[state.range(0)]);
  const auto lattice = all_ideals(ring);
  for (auto _ : state) benchmark::DoNotOptimize(is_avoidance_ring(lattice));
  state.SetLabel(std::to_string(lattice.size()) + " ideals");
}
BENCHMARK(BM_AvoidanceRing)->DenseRange(0, 3);

void BM_MapAvoidance(benchmark::State& state) {
  const Ring ring = build_ring(workloads()[state.range(0)]);
  const auto lattice = all_ideals(ring);
  const auto id = RingMap::identity(ring);
  for (auto _ : state) benchmark::DoNotOptimize(map_has_avoidance(id, lattice));
}
BENCHMARK(BM_MapAvoidance)->DenseRange(0, 3);

void BM_BuildRing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_ring(workloads()[state.range(0)])->size());
}
BENCHMARK(BM_BuildRing)->DenseRange(0, 3);

}  // namespace
BENCHMARK_MAIN();
