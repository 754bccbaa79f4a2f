// Microbenchmarks for the hot paths: pattern evaluation, lobe detection,
// packing, and one optimizer iteration.

#include <benchmark/benchmark.h>

#include <vector>

#include "anthill/ahcoa.hpp"
#include "anthill/array_model.hpp"
#include "anthill/objectives.hpp"
#include "anthill/packing.hpp"
#include "anthill/pattern_metrics.hpp"
#include "anthill/rng.hpp"

using namespace anthill;

static void bm_pattern(benchmark::State& state) {
  const auto elements = static_cast<std::size_t>(state.range(0));
  const auto g = ArrayGeometry::uniform(elements, 0.5);
  const auto e = Excitation::uniform(elements);
  const AngleGrid grid{0.0, 180.0, 0.05};
  for (auto _ : state) {
    auto p = pattern(g, e, grid, -60.0);
    benchmark::DoNotOptimize(p.db.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(bm_pattern)->Arg(10)->Arg(40);

static void bm_find_lobes(benchmark::State& state) {
  const auto g = ArrayGeometry::uniform(40, 0.5);
  const auto p = pattern(g, Excitation::uniform(40),
                         AngleGrid{0.0, 180.0, 0.05}, -60.0);
  for (auto _ : state) {
    auto lobes = find_lobes(p, -60.0);
    benchmark::DoNotOptimize(lobes.data());
  }
}
BENCHMARK(bm_find_lobes);

static void bm_next_fit(benchmark::State& state) {
  Rng rng(5);
  PackingInstance inst;
  for (int i = 0; i < 64; ++i) inst.sizes.push_back(rng.uniform(0.05, 0.95));
  for (auto _ : state) {
    auto sol = next_fit(inst);
    benchmark::DoNotOptimize(sol.used_bins);
  }
}
BENCHMARK(bm_next_fit);

static void bm_optimal_packing(benchmark::State& state) {
  Rng rng(5);
  PackingInstance inst;
  const auto n = state.range(0);
  for (int i = 0; i < n; ++i) inst.sizes.push_back(rng.uniform(0.05, 0.95));
  for (auto _ : state) {
    auto sol = optimal_packing(inst);
    benchmark::DoNotOptimize(sol.used_bins);
  }
}
BENCHMARK(bm_optimal_packing)->Arg(8)->Arg(10)->Arg(12);

static void bm_colony_step(benchmark::State& state) {
  AhcoaConfig cfg;
  cfg.population = 25;
  cfg.seed = 1;
  const auto obj = tangential_bowl_objective();
  auto colony = init_colony(cfg, obj);
  for (auto _ : state) {
    step(colony, obj);
    benchmark::DoNotOptimize(colony.elite_fitness);
  }
  state.SetItemsProcessed(state.iterations() * cfg.population);
}
BENCHMARK(bm_colony_step);

static void bm_synthesis_cost(benchmark::State& state) {
  const auto spec = SynthesisSpec::amplitude_defaults(10, 0.5, -40.0);
  const auto obj = sll_cost(spec);
  const std::vector<double> taper = {1.0, 0.84, 0.57, 0.31, 0.12};
  for (auto _ : state) {
    benchmark::DoNotOptimize(obj.evaluate(taper));
  }
}
BENCHMARK(bm_synthesis_cost);

BENCHMARK_MAIN();
