// Microbenchmarks for the hot paths: canonical forms, Hamilton search,
// extension-template scans, flow-based connectivity and cycle enumeration.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "locdeg/cycles.hpp"
#include "locdeg/extension.hpp"
#include "locdeg/families.hpp"
#include "locdeg/graph.hpp"
#include "locdeg/invariants.hpp"
#include "locdeg/planarity.hpp"
#include "locdeg/search.hpp"
#include "locdeg/smallgraph.hpp"

namespace {

using namespace locdeg;

void BM_CanonicalMaskOrder7(benchmark::State& state) {
  // A fixed pseudo-random batch of labelled order-7 graphs.
  SplitMix64 rng(7);
  std::vector<std::uint64_t> masks(256);
  for (auto& mask : masks) mask = rng.next() & ((1u << mask_bits(7)) - 1);
  for (auto _ : state) {
    for (const auto mask : masks)
      benchmark::DoNotOptimize(canonical_mask(7, mask));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(masks.size()));
}
BENCHMARK(BM_CanonicalMaskOrder7);

void BM_IsomorphismClassesOrder6(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(isomorphism_classes(6));
  }
}
BENCHMARK(BM_IsomorphismClassesOrder6)->Unit(benchmark::kMillisecond);

void BM_HamiltonSearch(benchmark::State& state) {
  const Graph g = path_strong_k3(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(is_hamiltonian(g, budget));
  }
}
BENCHMARK(BM_HamiltonSearch)->Arg(4)->Arg(6)->Arg(8);

void BM_ExtensionTemplateScan(benchmark::State& state) {
  // Scan the extension templates over every cycle of the Petersen graph.
  const Graph g = petersen();
  std::vector<Cycle> cycles;
  Budget budget;
  enumerate_cycles(g, budget, [&](std::span<const int> seq) {
    cycles.push_back(Cycle::validate(g, seq));
    return true;
  });
  for (auto _ : state) {
    for (const Cycle& cycle : cycles)
      benchmark::DoNotOptimize(find_extension_by_moves(g, cycle));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cycles.size()));
}
BENCHMARK(BM_ExtensionTemplateScan);

void BM_FullCycleExtendability(benchmark::State& state) {
  const Graph g = path_strong_k3(3);
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(is_fully_cycle_extendable(g, budget));
  }
}
BENCHMARK(BM_FullCycleExtendability)->Unit(benchmark::kMillisecond);

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = cycle_strong_k3(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vertex_connectivity(g));
  }
}
BENCHMARK(BM_VertexConnectivity)->Arg(6)->Arg(10);

void BM_EdgeConnectivity(benchmark::State& state) {
  const Graph g = cycle_strong_k3(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(edge_connectivity(g));
  }
}
BENCHMARK(BM_EdgeConnectivity)->Arg(6)->Arg(10);

void BM_PlanarityTest(benchmark::State& state) {
  const Graph g = path_strong_k3(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_planar(g));
  }
}
BENCHMARK(BM_PlanarityTest)->Arg(4)->Arg(8);

void BM_CycleEnumeration(benchmark::State& state) {
  const Graph g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Budget budget;
    std::uint64_t count = 0;
    enumerate_cycles(g, budget, [&](std::span<const int>) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CycleEnumeration)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
