#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace plansim {

// Which per-precinct quantity a weighted computation sums.
enum class WeightKind { kArea, kPopulation };

const char* to_string(WeightKind kind);
// Accepts "area" or "population"; throws Error(kUsage) otherwise.
WeightKind parse_weight_kind(std::string_view text);

struct Precinct {
  std::string id;
  double area = 0.0;
  std::int64_t population = 0;
};

// Precinct adjacency (dual) graph. Immutable once built; the constructor
// enforces every structural invariant, so a DualGraph value is always valid:
// unique ids, nonnegative weights, no self-loops, known endpoints, connected.
//
// Nodes are addressed by their position in the precinct list. Duplicate edges
// are collapsed.
class DualGraph {
 public:
  DualGraph(std::vector<Precinct> precincts,
            const std::vector<std::pair<std::string, std::string>>& edges);

  // Index-based construction for generators that already know node order.
  DualGraph(std::vector<Precinct> precincts,
            const std::vector<std::pair<int, int>>& edges);

  int num_nodes() const { return static_cast<int>(precincts_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  const Precinct& precinct(int node) const { return precincts_[node]; }
  const std::vector<Precinct>& precincts() const { return precincts_; }
  std::span<const int> neighbors(int node) const {
    return {adjacency_.data() + offsets_[node],
            adjacency_.data() + offsets_[node + 1]};
  }

  double total_area() const { return total_area_; }
  std::int64_t total_population() const { return total_population_; }
  double total(WeightKind kind) const {
    return kind == WeightKind::kArea ? total_area_
                                     : static_cast<double>(total_population_);
  }
  double weight(int node, WeightKind kind) const {
    return kind == WeightKind::kArea
               ? precincts_[node].area
               : static_cast<double>(precincts_[node].population);
  }

  std::optional<int> find(std::string_view id) const;
  // Unordered pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edge_list() const;

 private:
  void build(const std::vector<std::pair<int, int>>& edges);

  std::vector<Precinct> precincts_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> offsets_;
  std::vector<int> adjacency_;  // CSR, each neighbor list sorted ascending
  std::size_t num_edges_ = 0;
  double total_area_ = 0.0;
  std::int64_t total_population_ = 0;
};

// Node-link JSON:
//   {"nodes": [{"id": str, "area": number, "population": int}, ...],
//    "edges": [[id, id], ...]}
// Numeric ids in the file are accepted and converted to their decimal text.
DualGraph load_graph(std::istream& in);
DualGraph load_graph_file(const std::string& path);
void write_graph(std::ostream& out, const DualGraph& g);

}  // namespace plansim
