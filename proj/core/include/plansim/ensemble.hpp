#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "plansim/generation.hpp"
#include "plansim/graph.hpp"
#include "plansim/plan.hpp"

namespace plansim {

struct EnsembleConfig {
  int num_chains = 50;
  int districts = 2;
  int steps_per_chain = 0;  // 0 means 50 * districts
  std::uint64_t base_seed = 0;
  int parallelism = 1;
  int trees_per_step = 1;

  int effective_steps() const {
    return steps_per_chain > 0 ? steps_per_chain : 50 * districts;
  }
  // Chain i runs with split_seed(base_seed, i).
  std::uint64_t chain_seed(int chain) const;
};

struct PairScore {
  int i = 0;
  int j = 0;
  WeightKind kind = WeightKind::kArea;
  double value = 0.0;
};

// Rows sorted by (i, j), then area before population when both are present.
struct PairwiseScores {
  std::vector<PairScore> scores;

  std::vector<double> values(WeightKind kind) const;
};

struct ScoreSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
  std::vector<double> bin_edges;  // bins + 1 uniform edges over [0, 1]
  std::vector<std::size_t> counts;
};

// Runs fn(0) .. fn(count - 1) on up to `parallelism` threads. Work items are
// handed out by index; callers write results into index-addressed slots so
// the outcome never depends on scheduling. The first exception thrown by any
// item is rethrown after all workers join.
void parallel_for(int count, int parallelism,
                  const std::function<void(int)>& fn);

// N chains, each starting from seed_plan(g, districts) and advanced
// effective_steps() recombinations with its own split seed. Output is in
// chain order and identical for every parallelism level.
std::vector<Plan> run_ensemble(const DualGraph& g, const EnsembleConfig& cfg);

// All C(N,2) unordered pairs for each requested kind. Requesting both kinds
// builds both intersection matrices from one pass per pair.
PairwiseScores pairwise_similarity(const DualGraph& g,
                                   const std::vector<Plan>& plans,
                                   const std::vector<WeightKind>& kinds,
                                   int parallelism = 1);

// Exact moments plus a uniform histogram over [0, 1]; bins are right-open
// except the last, which also holds 1.0.
ScoreSummary summarize(const std::vector<double>& values, int bins = 40);

}  // namespace plansim
