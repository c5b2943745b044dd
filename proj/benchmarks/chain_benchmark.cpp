#include <benchmark/benchmark.h>

#include "plansim/ensemble.hpp"
#include "plansim/generation.hpp"
#include "plansim/synth.hpp"

namespace bm = benchmark;
using namespace plansim;

static void BM_RecomStep(bm::State& state) {
  const int side = static_cast<int>(state.range(0));
  const DualGraph g = grid_state({side, side, 1});
  Plan plan = seed_plan(g, 8);
  Rng rng(4);
  const ChainConfig cfg{1, 4, 1};
  for (auto _ : state) {
    plan = recom_step(g, plan, cfg, rng);
  }
}

static void BM_SeedPlan(bm::State& state) {
  const int side = static_cast<int>(state.range(0));
  const DualGraph g = grid_state({side, side, 1});
  for (auto _ : state) {
    bm::DoNotOptimize(seed_plan(g, 10));
  }
}

static void BM_PairwiseFiftyPlans(bm::State& state) {
  const DualGraph g = grid_state({30, 30, 1});
  EnsembleConfig cfg;
  cfg.num_chains = 50;
  cfg.districts = 6;
  cfg.steps_per_chain = 50;
  const auto plans = run_ensemble(g, cfg);
  for (auto _ : state) {
    bm::DoNotOptimize(
        pairwise_similarity(g, plans, {WeightKind::kArea, WeightKind::kPopulation}));
  }
}

BENCHMARK(BM_RecomStep)->Arg(12)->Arg(40)->Arg(100);
BENCHMARK(BM_SeedPlan)->Arg(12)->Arg(100);
BENCHMARK(BM_PairwiseFiftyPlans)->Unit(bm::kMillisecond);
