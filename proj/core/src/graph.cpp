#include "plansim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "plansim/error.hpp"

namespace plansim {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::kInvalidInput, message);
}

std::string id_text(const json& value, const char* where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  invalid(std::string(where) + ": precinct id must be a string or integer");
}

}  // namespace

const char* to_string(WeightKind kind) {
  return kind == WeightKind::kArea ? "area" : "population";
}

WeightKind parse_weight_kind(std::string_view text) {
  if (text == "area") return WeightKind::kArea;
  if (text == "population") return WeightKind::kPopulation;
  throw Error(ErrorKind::kUsage, "unknown weight kind '" + std::string(text) +
                                     "' (expected area or population)");
}

DualGraph::DualGraph(
    std::vector<Precinct> precincts,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : precincts_(std::move(precincts)) {
  for (int i = 0; i < num_nodes(); ++i) {
    if (!index_.emplace(precincts_[i].id, i).second) {
      invalid("duplicate precinct id '" + precincts_[i].id + "'");
    }
  }
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = find(a);
    if (!ia) invalid("edge endpoint '" + a + "' is not a precinct");
    auto ib = find(b);
    if (!ib) invalid("edge endpoint '" + b + "' is not a precinct");
    indexed.emplace_back(*ia, *ib);
  }
  build(indexed);
}

DualGraph::DualGraph(std::vector<Precinct> precincts,
                     const std::vector<std::pair<int, int>>& edges)
    : precincts_(std::move(precincts)) {
  for (int i = 0; i < num_nodes(); ++i) {
    if (!index_.emplace(precincts_[i].id, i).second) {
      invalid("duplicate precinct id '" + precincts_[i].id + "'");
    }
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= num_nodes() || b < 0 || b >= num_nodes()) {
      invalid("edge endpoint index out of range");
    }
  }
  build(edges);
}

void DualGraph::build(const std::vector<std::pair<int, int>>& edges) {
  if (precincts_.empty()) invalid("graph has no precincts");

  for (const auto& p : precincts_) {
    if (!(p.area >= 0.0) || !std::isfinite(p.area)) {
      invalid("precinct '" + p.id + "' has negative or non-finite area");
    }
    if (p.population < 0) {
      invalid("precinct '" + p.id + "' has negative population");
    }
    total_area_ += p.area;
    total_population_ += p.population;
  }

  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) invalid("self-loop on precinct '" + precincts_[a].id + "'");
    normalized.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());
  num_edges_ = normalized.size();

  const int n = num_nodes();
  std::vector<int> degree(n, 0);
  for (auto [a, b] : normalized) {
    ++degree[a];
    ++degree[b];
  }
  offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [a, b] : normalized) {
    adjacency_[fill[a]++] = b;
    adjacency_[fill[b]++] = a;
  }
  for (int i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + offsets_[i],
              adjacency_.begin() + offsets_[i + 1]);
  }

  // Connectivity: label components, report one representative of each.
  std::vector<int> component(n, -1);
  std::vector<int> representatives;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int label = static_cast<int>(representatives.size());
    representatives.push_back(start);
    component[start] = label;
    stack.push_back(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : neighbors(u)) {
        if (component[v] < 0) {
          component[v] = label;
          stack.push_back(v);
        }
      }
    }
  }
  if (representatives.size() > 1) {
    std::string message = "graph is disconnected: " +
                          std::to_string(representatives.size()) +
                          " components, representatives";
    for (int r : representatives) message += " '" + precincts_[r].id + "'";
    invalid(message);
  }
}

std::optional<int> DualGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> DualGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_nodes(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DualGraph load_graph(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    invalid("graph JSON must be an object with a 'nodes' array");
  }

  std::vector<Precinct> precincts;
  precincts.reserve(doc["nodes"].size());
  for (const auto& node : doc["nodes"]) {
    if (!node.is_object() || !node.contains("id")) {
      invalid("graph node must be an object with an 'id'");
    }
    Precinct p;
    p.id = id_text(node["id"], "node");
    if (node.contains("area")) {
      if (!node["area"].is_number()) {
        invalid("precinct '" + p.id + "': area must be a number");
      }
      p.area = node["area"].get<double>();
    }
    if (node.contains("population")) {
      const auto& pop = node["population"];
      if (pop.is_number_integer()) {
        p.population = pop.get<std::int64_t>();
      } else if (pop.is_number_float() &&
                 pop.get<double>() == std::floor(pop.get<double>())) {
        p.population = static_cast<std::int64_t>(pop.get<double>());
      } else {
        invalid("precinct '" + p.id + "': population must be an integer");
      }
    }
    precincts.push_back(std::move(p));
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) invalid("'edges' must be an array");
    for (const auto& edge : doc["edges"]) {
      if (!edge.is_array() || edge.size() != 2) {
        invalid("each edge must be a two-element array");
      }
      edges.emplace_back(id_text(edge[0], "edge"), id_text(edge[1], "edge"));
    }
  }
  return DualGraph(std::move(precincts), edges);
}

DualGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open graph file '" + path + "'");
  return load_graph(in);
}

void write_graph(std::ostream& out, const DualGraph& g) {
  json nodes = json::array();
  for (const auto& p : g.precincts()) {
    nodes.push_back({{"id", p.id}, {"area", p.area}, {"population", p.population}});
  }
  json edges = json::array();
  for (auto [u, v] : g.edge_list()) {
    edges.push_back({g.precinct(u).id, g.precinct(v).id});
  }
  json doc;
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  out << doc.dump() << '\n';
}

}  // namespace plansim
