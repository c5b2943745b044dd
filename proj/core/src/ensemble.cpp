#include "plansim/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "plansim/error.hpp"
#include "plansim/similarity.hpp"

namespace plansim {

std::uint64_t EnsembleConfig::chain_seed(int chain) const {
  return split_seed(base_seed, static_cast<std::uint64_t>(chain));
}

std::vector<double> PairwiseScores::values(WeightKind kind) const {
  std::vector<double> out;
  for (const auto& s : scores) {
    if (s.kind == kind) out.push_back(s.value);
  }
  return out;
}

void parallel_for(int count, int parallelism,
                  const std::function<void(int)>& fn) {
  if (count <= 0) return;
  const int workers = std::clamp(parallelism, 1, count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (!failed.load(std::memory_order_relaxed)) {
          const int i = next.fetch_add(1);
          if (i >= count) return;
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::vector<Plan> run_ensemble(const DualGraph& g, const EnsembleConfig& cfg) {
  if (cfg.num_chains < 1) {
    throw Error(ErrorKind::kUsage, "ensemble needs at least one chain");
  }
  if (cfg.parallelism < 1) {
    throw Error(ErrorKind::kUsage, "parallelism must be positive");
  }
  const Plan start = seed_plan(g, cfg.districts);
  std::vector<Plan> plans(cfg.num_chains);
  parallel_for(cfg.num_chains, cfg.parallelism, [&](int chain) {
    ChainConfig chain_cfg{cfg.effective_steps(), cfg.chain_seed(chain),
                          cfg.trees_per_step};
    plans[chain] = run_chain(g, start, chain_cfg);
  });
  return plans;
}

PairwiseScores pairwise_similarity(const DualGraph& g,
                                   const std::vector<Plan>& plans,
                                   const std::vector<WeightKind>& kinds,
                                   int parallelism) {
  if (kinds.empty()) throw Error(ErrorKind::kUsage, "no score kind requested");
  const bool want_area =
      std::find(kinds.begin(), kinds.end(), WeightKind::kArea) != kinds.end();
  const bool want_pop = std::find(kinds.begin(), kinds.end(),
                                  WeightKind::kPopulation) != kinds.end();

  const int n = static_cast<int>(plans.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  const int per_pair = (want_area ? 1 : 0) + (want_pop ? 1 : 0);
  PairwiseScores out;
  out.scores.resize(pairs.size() * per_pair);
  parallel_for(static_cast<int>(pairs.size()), parallelism, [&](int idx) {
    auto [i, j] = pairs[idx];
    const Plan* a = &plans[i];
    const Plan* b = &plans[j];
    if (a->num_districts() > b->num_districts()) std::swap(a, b);
    std::size_t slot = static_cast<std::size_t>(idx) * per_pair;
    if (want_area && want_pop) {
      auto [area, pop] = intersection_matrices(g, *a, *b);
      out.scores[slot] = {i, j, WeightKind::kArea, score_matrix(area).value};
      out.scores[slot + 1] = {i, j, WeightKind::kPopulation,
                              score_matrix(pop).value};
    } else {
      const WeightKind kind = want_area ? WeightKind::kArea : WeightKind::kPopulation;
      out.scores[slot] = {i, j, kind,
                          score_matrix(intersection_matrix(g, *a, *b, kind)).value};
    }
  });
  return out;
}

ScoreSummary summarize(const std::vector<double>& values, int bins) {
  if (values.empty()) throw Error(ErrorKind::kUsage, "no scores to summarize");
  if (bins < 1) throw Error(ErrorKind::kUsage, "bin count must be positive");

  ScoreSummary s;
  s.count = values.size();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  double sum = 0.0;
  for (double v : values) sum += v;
  const double n = static_cast<double>(values.size());
  s.mean = std::clamp(sum / n, s.min, s.max);
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.sd = std::sqrt(sq / n);

  s.bin_edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) s.bin_edges[b] = static_cast<double>(b) / bins;
  s.counts.assign(bins, 0);
  for (double v : values) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    int b = std::min(static_cast<int>(std::floor(clamped * bins)), bins - 1);
    // Settle rounding against the stored edges.
    while (b + 1 < bins && clamped >= s.bin_edges[b + 1]) ++b;
    while (b > 0 && clamped < s.bin_edges[b]) --b;
    ++s.counts[b];
  }
  return s;
}

}  // namespace plansim
