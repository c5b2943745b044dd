#include <benchmark/benchmark.h>

#include "plansim/assignment.hpp"
#include "plansim/generation.hpp"
#include "plansim/rng.hpp"
#include "plansim/similarity.hpp"
#include "plansim/synth.hpp"

namespace bm = benchmark;
using namespace plansim;

static void BM_SolveAssignment(bm::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(1);
  IntersectionMatrix mtx(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mtx(i, j) = rng.uniform();
  for (auto _ : state) {
    bm::DoNotOptimize(solve_assignment(mtx));
  }
  state.SetComplexityN(k);
}

// Many exact ties: exercises the lexicographic refinement.
static void BM_SolveAssignmentTies(bm::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(2);
  IntersectionMatrix mtx(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mtx(i, j) = static_cast<double>(rng.below(3));
  for (auto _ : state) {
    bm::DoNotOptimize(solve_assignment(mtx));
  }
}

static void BM_SimilarityScore(bm::State& state) {
  const int side = static_cast<int>(state.range(0));
  const DualGraph g = grid_state({side, side, 1});
  const Plan a = seed_plan(g, 55);
  const Plan b = run_chain(g, a, {100, 3, 1});
  for (auto _ : state) {
    bm::DoNotOptimize(similarity_score(g, a, b, WeightKind::kArea));
  }
  state.SetItemsProcessed(state.iterations() * g.num_nodes());
}

BENCHMARK(BM_SolveAssignment)->RangeMultiplier(2)->Range(4, 128)->Complexity();
BENCHMARK(BM_SolveAssignmentTies)->RangeMultiplier(2)->Range(4, 128);
BENCHMARK(BM_SimilarityScore)->Arg(100)->Arg(300);
