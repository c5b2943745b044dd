#include "test_support.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace plansim::testing {

Plan random_grown_plan(const DualGraph& g, int m, Rng& rng) {
  const int n = g.num_nodes();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.below(i + 1)]);
  }
  std::vector<int> district(n, kUnassigned);
  std::vector<std::pair<int, int>> frontier;  // (node, district)
  for (int d = 0; d < m; ++d) {
    district[order[d]] = d;
    for (int v : g.neighbors(order[d])) frontier.emplace_back(v, d);
  }
  while (!frontier.empty()) {
    const std::size_t pick = rng.below(frontier.size());
    const auto [v, d] = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    if (district[v] != kUnassigned) continue;
    district[v] = d;
    for (int w : g.neighbors(v)) {
      if (district[w] == kUnassigned) frontier.emplace_back(w, d);
    }
  }
  return Plan(std::move(district), m);
}

IntersectionMatrix random_matrix(int rows, int cols, Rng& rng, bool integral) {
  IntersectionMatrix mtx(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      mtx(i, j) = integral ? static_cast<double>(rng.below(10)) : rng.uniform();
    }
  }
  return mtx;
}

std::vector<std::vector<double>> enumerate_intersections(const DualGraph& g,
                                                         const Plan& a,
                                                         const Plan& b,
                                                         WeightKind kind) {
  std::vector<std::vector<double>> out(a.num_districts(),
                                       std::vector<double>(b.num_districts(), 0.0));
  for (int i = 0; i < a.num_districts(); ++i) {
    for (int j = 0; j < b.num_districts(); ++j) {
      for (int v = 0; v < g.num_nodes(); ++v) {
        if (a.district(v) == i && b.district(v) == j) {
          out[i][j] += kind == WeightKind::kArea
                           ? g.precinct(v).area
                           : static_cast<double>(g.precinct(v).population);
        }
      }
    }
  }
  return out;
}

std::int64_t brute_force_min_gap(const SpanningTree& tree, const DualGraph& g) {
  const int size = tree.size();
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < size; ++t) {
    if (tree.parent[t] >= 0) edges.emplace_back(tree.parent[t], t);
  }
  std::int64_t total = 0;
  for (int node : tree.nodes) total += g.precinct(node).population;

  std::int64_t best = -1;
  for (std::size_t cut = 0; cut < edges.size(); ++cut) {
    std::vector<std::vector<int>> adj(size);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e == cut) continue;
      adj[edges[e].first].push_back(edges[e].second);
      adj[edges[e].second].push_back(edges[e].first);
    }
    std::vector<char> seen(size, 0);
    std::vector<int> stack{edges[cut].second};
    seen[edges[cut].second] = 1;
    std::int64_t side = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      side += g.precinct(tree.nodes[u]).population;
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    const std::int64_t gap = std::abs(total - 2 * side);
    if (best < 0 || gap < best) best = gap;
  }
  return best;
}

DualGraph random_connected_graph(int n, int extra, Rng& rng) {
  std::vector<Precinct> precincts;
  for (int i = 0; i < n; ++i) {
    precincts.push_back({"n" + std::to_string(i), 1.0 + rng.uniform(),
                         static_cast<std::int64_t>(rng.below(21))});
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<int>(rng.below(i)), i);
  }
  for (int e = 0; e < extra && n > 1; ++e) {
    int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n));
    if (a != b) edges.emplace_back(a, b);
  }
  return DualGraph(std::move(precincts), edges);
}

int induced_components(const DualGraph& g, const std::vector<int>& nodes) {
  std::vector<char> in(g.num_nodes(), 0), seen(g.num_nodes(), 0);
  for (int v : nodes) in[v] = 1;
  int count = 0;
  for (int start : nodes) {
    if (seen[start]) continue;
    ++count;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

}  // namespace plansim::testing
