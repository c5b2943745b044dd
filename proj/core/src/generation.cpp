#include "plansim/generation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "plansim/error.hpp"

namespace plansim {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Attaches `child`'s root below `root`'s root.
  void attach(int child, int root) { parent_[find(child)] = find(root); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Plan seed_plan(const DualGraph& g, int m) {
  const int n = g.num_nodes();
  if (m < 1 || m > n) {
    throw Error(ErrorKind::kUsage, "cannot seed " + std::to_string(m) +
                                       " districts on " + std::to_string(n) +
                                       " precincts");
  }

  std::vector<std::int64_t> pop(n);
  std::vector<std::set<int>> adjacent(n);
  std::set<std::pair<std::int64_t, int>> by_population;
  for (int v = 0; v < n; ++v) {
    pop[v] = g.precinct(v).population;
    adjacent[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    by_population.emplace(pop[v], v);
  }

  DisjointSets clusters(n);
  int remaining = n;
  while (remaining > m) {
    const int a = by_population.begin()->second;
    int b = -1;
    for (int c : adjacent[a]) {
      if (b < 0 || std::make_pair(pop[c], c) < std::make_pair(pop[b], b)) b = c;
    }
    const int keep = std::min(a, b);
    const int gone = std::max(a, b);

    by_population.erase({pop[a], a});
    by_population.erase({pop[b], b});
    pop[keep] += pop[gone];
    by_population.emplace(pop[keep], keep);

    adjacent[keep].erase(gone);
    adjacent[gone].erase(keep);
    for (int x : adjacent[gone]) {
      adjacent[x].erase(gone);
      adjacent[x].insert(keep);
      adjacent[keep].insert(x);
    }
    adjacent[gone].clear();
    clusters.attach(gone, keep);
    --remaining;
  }

  // Cluster representatives are their smallest node index, so numbering in
  // ascending representative order numbers districts by smallest node.
  std::vector<int> district_of_root(n, -1);
  std::vector<int> district_of(n);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int root = clusters.find(v);
    if (district_of_root[root] < 0) district_of_root[root] = next++;
    district_of[v] = district_of_root[root];
  }
  return Plan(std::move(district_of), m);
}

SpanningTree random_spanning_tree(const DualGraph& g,
                                  std::span<const int> nodes, Rng& rng) {
  SpanningTree tree;
  tree.nodes.assign(nodes.begin(), nodes.end());
  std::sort(tree.nodes.begin(), tree.nodes.end());
  if (tree.nodes.empty()) {
    throw Error(ErrorKind::kUsage, "spanning tree of an empty node set");
  }
  if (std::adjacent_find(tree.nodes.begin(), tree.nodes.end()) !=
      tree.nodes.end()) {
    throw Error(ErrorKind::kUsage, "spanning tree node set has duplicates");
  }
  const int size = tree.size();

  std::vector<int> local(g.num_nodes(), -1);
  for (int t = 0; t < size; ++t) local[tree.nodes[t]] = t;

  struct WeightedEdge {
    std::uint64_t weight;
    int index;
    int a;
    int b;
  };
  std::vector<WeightedEdge> edges;
  for (int t = 0; t < size; ++t) {
    const int u = tree.nodes[t];
    for (int v : g.neighbors(u)) {
      if (v > u && local[v] >= 0) {
        edges.push_back({rng.next_u64(), static_cast<int>(edges.size()), t,
                         local[v]});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.weight, x.index) < std::tie(y.weight, y.index);
  });

  DisjointSets components(size);
  std::vector<std::vector<int>> tree_adjacent(size);
  int used = 0;
  for (const auto& e : edges) {
    if (components.unite(e.a, e.b)) {
      tree_adjacent[e.a].push_back(e.b);
      tree_adjacent[e.b].push_back(e.a);
      if (++used == size - 1) break;
    }
  }
  if (used != size - 1) {
    throw Error(ErrorKind::kInvalidInput,
                "induced subgraph is disconnected; no spanning tree");
  }

  tree.parent.assign(size, -1);
  tree.order.reserve(size);
  std::vector<char> seen(size, 0);
  tree.order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < tree.order.size(); ++head) {
    const int u = tree.order[head];
    for (int w : tree_adjacent[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        tree.parent[w] = u;
        tree.order.push_back(w);
      }
    }
  }

  tree.subtree_population.assign(size, 0);
  for (int t = 0; t < size; ++t) {
    tree.subtree_population[t] = g.precinct(tree.nodes[t]).population;
  }
  for (int idx = size - 1; idx > 0; --idx) {
    const int t = tree.order[idx];
    tree.subtree_population[tree.parent[t]] += tree.subtree_population[t];
  }
  return tree;
}

TreeCut best_cut(const SpanningTree& tree, const DualGraph& g) {
  (void)g;
  if (tree.size() < 2) {
    throw Error(ErrorKind::kUsage, "cannot cut a single-node tree");
  }
  const std::int64_t total = tree.total_population();
  TreeCut best;
  for (int t = 0; t < tree.size(); ++t) {
    if (tree.parent[t] < 0) continue;
    const std::int64_t below = tree.subtree_population[t];
    TreeCut cut{tree.nodes[tree.parent[t]], tree.nodes[t], below, total - below,
                below > total - below ? 2 * below - total : total - 2 * below};
    if (best.child < 0 ||
        std::tie(cut.gap, cut.parent, cut.child) <
            std::tie(best.gap, best.parent, best.child)) {
      best = cut;
    }
  }
  return best;
}

Plan recom_step(const DualGraph& g, const Plan& p, const ChainConfig& cfg,
                Rng& rng) {
  if (p.num_districts() < 2) {
    throw Error(ErrorKind::kUsage, "recombination needs at least two districts");
  }
  if (cfg.trees_per_step < 1) {
    throw Error(ErrorKind::kUsage, "trees_per_step must be positive");
  }
  require_total_assignment(g, p);

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < g.num_nodes(); ++u) {
    for (int v : g.neighbors(u)) {
      const int a = p.district(u);
      const int b = p.district(v);
      if (u < v && a != b) pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (pairs.empty()) {
    throw Error(ErrorKind::kInvalidInput, "no adjacent district pair");
  }
  const auto [low, high] = pairs[rng.below(pairs.size())];

  std::vector<int> merged;
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (p.district(v) == low || p.district(v) == high) merged.push_back(v);
  }

  SpanningTree best_tree;
  TreeCut best;
  for (int draw = 0; draw < cfg.trees_per_step; ++draw) {
    SpanningTree tree = random_spanning_tree(g, merged, rng);
    TreeCut cut = best_cut(tree, g);
    if (draw == 0 || cut.gap < best.gap) {
      best = cut;
      best_tree = std::move(tree);
    }
  }

  // Mark the child side: local nodes whose ancestor chain hits the cut child.
  const int size = best_tree.size();
  std::vector<char> child_side(size, 0);
  for (int t : best_tree.order) {
    if (best_tree.nodes[t] == best.child) {
      child_side[t] = 1;
    } else if (best_tree.parent[t] >= 0) {
      child_side[t] = child_side[best_tree.parent[t]];
    }
  }

  int smallest = 0;
  for (int t = 1; t < size; ++t) {
    if (g.precinct(best_tree.nodes[t]).id <
        g.precinct(best_tree.nodes[smallest]).id) {
      smallest = t;
    }
  }
  const char low_side = child_side[smallest];

  std::vector<int> district_of(p.assignment());
  for (int t = 0; t < size; ++t) {
    district_of[best_tree.nodes[t]] = child_side[t] == low_side ? low : high;
  }
  return Plan(std::move(district_of), p.num_districts(), p.labels());
}

Plan run_chain(const DualGraph& g, const Plan& start, const ChainConfig& cfg) {
  if (cfg.steps < 0) throw Error(ErrorKind::kUsage, "steps must be nonnegative");
  Rng rng(cfg.rng_seed);
  Plan current = start;
  for (int step = 0; step < cfg.steps; ++step) {
    current = recom_step(g, current, cfg, rng);
  }
  return current;
}

}  // namespace plansim
