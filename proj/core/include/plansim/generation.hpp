#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plansim/graph.hpp"
#include "plansim/plan.hpp"
#include "plansim/rng.hpp"

namespace plansim {

struct ChainConfig {
  int steps = 1;
  std::uint64_t rng_seed = 0;
  int trees_per_step = 1;
};

// Rooted spanning tree over a node subset. Local index t refers to nodes[t];
// nodes are sorted by graph index and the root is local 0.
struct SpanningTree {
  std::vector<int> nodes;
  std::vector<int> parent;          // local index, -1 for the root
  std::vector<int> order;           // parents before children
  std::vector<std::int64_t> subtree_population;

  int size() const { return static_cast<int>(nodes.size()); }
  std::int64_t total_population() const {
    return subtree_population.empty() ? 0 : subtree_population[0];
  }
};

// Tree edge removal chosen by best_cut. Graph node indices.
struct TreeCut {
  int parent = -1;
  int child = -1;
  std::int64_t child_side_population = 0;  // population under `child`
  std::int64_t other_side_population = 0;
  std::int64_t gap = 0;  // |child side - other side|
};

// Deterministic seeding by agglomeration: every precinct starts as its own
// cluster; repeatedly the lowest-population cluster (ties: lowest id) absorbs
// its lowest-population neighbour (ties: lowest id) until m remain. A merged
// cluster keeps the smaller id. Districts are numbered by their smallest
// node index.
Plan seed_plan(const DualGraph& g, int m);

// Random-weight minimum spanning tree of the subgraph induced by `nodes`:
// each induced edge, enumerated in (u, v) order, draws a 64-bit weight from
// `rng`; Kruskal with ties broken by enumeration order.
SpanningTree random_spanning_tree(const DualGraph& g, std::span<const int> nodes,
                                  Rng& rng);

// Examines every tree edge and returns the one whose removal gives the most
// equal populations. Ties go to the smaller (parent, child) node-index pair.
TreeCut best_cut(const SpanningTree& tree, const DualGraph& g);

// One optimal-recombination step: merge a uniformly chosen adjacent district
// pair, draw cfg.trees_per_step spanning trees, split along the best cut of
// the best tree. The lower of the two labels goes to the side containing the
// lexicographically smallest precinct id.
Plan recom_step(const DualGraph& g, const Plan& p, const ChainConfig& cfg,
                Rng& rng);

// cfg.steps recombination steps driven by Rng(cfg.rng_seed).
Plan run_chain(const DualGraph& g, const Plan& start, const ChainConfig& cfg);

}  // namespace plansim
