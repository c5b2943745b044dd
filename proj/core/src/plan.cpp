#include "plansim/plan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

#include "csv.hpp"
#include "plansim/error.hpp"

namespace plansim {

Plan::Plan(std::vector<int> district_of, int num_districts,
           std::vector<std::string> labels)
    : district_of_(std::move(district_of)),
      num_districts_(num_districts),
      labels_(std::move(labels)) {
  if (num_districts_ < 1) {
    throw Error(ErrorKind::kUsage, "plan must have at least one district");
  }
  if (!labels_.empty() &&
      static_cast<int>(labels_.size()) != num_districts_) {
    throw Error(ErrorKind::kUsage, "plan label count does not match districts");
  }
}

Plan Plan::from_assignment(std::vector<int> district_of) {
  int m = 0;
  for (int d : district_of) m = std::max(m, d + 1);
  return Plan(std::move(district_of), m);
}

std::string Plan::label(int district) const {
  if (labels_.empty()) return std::to_string(district);
  return labels_[district];
}

std::string Violation::describe(const DualGraph& g) const {
  auto name = [&](int v) {
    return (v >= 0 && v < g.num_nodes()) ? "'" + g.precinct(v).id + "'"
                                         : std::to_string(v);
  };
  switch (kind) {
    case Kind::kSizeMismatch:
      return "plan covers a different precinct set than the graph";
    case Kind::kMissingPrecinct:
      return "precinct " + name(node) + " has no district";
    case Kind::kDistrictOutOfRange:
      return "precinct " + name(node) + " has district " +
             std::to_string(district) + " outside the plan's range";
    case Kind::kEmptyDistrict:
      return "district " + std::to_string(district) + " is empty";
    case Kind::kDiscontiguous:
      return "district " + std::to_string(district) + " is discontiguous (" +
             std::to_string(components) + " components)";
  }
  return "unknown violation";
}

std::vector<Violation> validate_plan(const DualGraph& g, const Plan& p) {
  std::vector<Violation> out;
  if (p.num_nodes() != g.num_nodes()) {
    out.push_back({Violation::Kind::kSizeMismatch});
    return out;
  }
  const int n = g.num_nodes();
  const int m = p.num_districts();
  std::vector<int> sizes(m, 0);
  for (int v = 0; v < n; ++v) {
    const int d = p.district(v);
    if (d == kUnassigned) {
      out.push_back({Violation::Kind::kMissingPrecinct, -1, v});
    } else if (d < 0 || d >= m) {
      out.push_back({Violation::Kind::kDistrictOutOfRange, d, v});
    } else {
      ++sizes[d];
    }
  }
  for (int d = 0; d < m; ++d) {
    if (sizes[d] == 0) out.push_back({Violation::Kind::kEmptyDistrict, d});
  }

  // Count connected components of each district's induced subgraph.
  std::vector<int> components(m, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    const int d = p.district(start);
    if (seen[start] || d < 0 || d >= m) continue;
    ++components[d];
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (!seen[v] && p.district(v) == d) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  for (int d = 0; d < m; ++d) {
    if (components[d] > 1) {
      out.push_back({Violation::Kind::kDiscontiguous, d, -1, components[d]});
    }
  }
  return out;
}

void require_total_assignment(const DualGraph& g, const Plan& p) {
  if (p.num_nodes() != g.num_nodes()) {
    throw Error(ErrorKind::kValidation,
                "plan covers a different precinct set than the graph");
  }
  for (int v = 0; v < p.num_nodes(); ++v) {
    const int d = p.district(v);
    if (d < 0 || d >= p.num_districts()) {
      Violation bad{d == kUnassigned ? Violation::Kind::kMissingPrecinct
                                     : Violation::Kind::kDistrictOutOfRange,
                    d, v};
      throw Error(ErrorKind::kValidation, bad.describe(g));
    }
  }
}

std::vector<double> district_weights(const DualGraph& g, const Plan& p,
                                     WeightKind kind) {
  require_total_assignment(g, p);
  std::vector<double> sums(p.num_districts(), 0.0);
  if (kind == WeightKind::kPopulation) {
    auto pops = district_populations(g, p);
    std::transform(pops.begin(), pops.end(), sums.begin(),
                   [](std::int64_t x) { return static_cast<double>(x); });
    return sums;
  }
  for (int v = 0; v < g.num_nodes(); ++v) sums[p.district(v)] += g.precinct(v).area;
  return sums;
}

std::vector<std::int64_t> district_populations(const DualGraph& g,
                                               const Plan& p) {
  require_total_assignment(g, p);
  std::vector<std::int64_t> sums(p.num_districts(), 0);
  for (int v = 0; v < g.num_nodes(); ++v) {
    sums[p.district(v)] += g.precinct(v).population;
  }
  return sums;
}

double population_deviation(const DualGraph& g, const Plan& p) {
  const auto pops = district_populations(g, p);
  const double ideal = static_cast<double>(g.total_population()) /
                       static_cast<double>(p.num_districts());
  if (ideal == 0.0) return 0.0;
  double worst = 0.0;
  for (std::int64_t pop : pops) {
    worst = std::max(worst, std::abs(static_cast<double>(pop) - ideal));
  }
  return worst / ideal;
}

namespace {

std::optional<long long> parse_integer(std::string_view text) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

Plan load_plan(std::istream& in, const DualGraph& g) {
  std::string line;
  bool first = true;
  bool header_seen = false;
  std::vector<std::pair<int, std::string>> rows;
  std::vector<char> seen(g.num_nodes(), 0);
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view record = csv::trim_record(line, first);
    first = false;
    if (record.empty()) continue;
    auto fields = csv::split_line(record);
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != "precinct_id" ||
          fields[1] != "district") {
        throw Error(ErrorKind::kInvalidInput,
                    "plan CSV header must be 'precinct_id,district'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw Error(ErrorKind::kInvalidInput,
                  "plan CSV line " + std::to_string(line_no) +
                      ": expected 2 fields");
    }
    auto node = g.find(fields[0]);
    if (!node) {
      throw Error(ErrorKind::kInvalidInput,
                  "plan references unknown precinct '" + fields[0] + "'");
    }
    if (seen[*node]) {
      throw Error(ErrorKind::kInvalidInput,
                  "precinct '" + fields[0] + "' appears twice in plan");
    }
    if (fields[1].empty()) {
      throw Error(ErrorKind::kInvalidInput,
                  "precinct '" + fields[0] + "' has an empty district label");
    }
    seen[*node] = 1;
    rows.emplace_back(*node, std::move(fields[1]));
  }
  if (!header_seen) {
    throw Error(ErrorKind::kInvalidInput, "plan CSV is empty");
  }
  if (rows.empty()) {
    throw Error(ErrorKind::kInvalidInput, "plan CSV has no rows");
  }

  // Densify labels.
  std::vector<std::string> labels;
  for (const auto& row : rows) labels.push_back(row.second);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const bool numeric = std::all_of(labels.begin(), labels.end(), [](const auto& s) {
    return parse_integer(s).has_value();
  });
  if (numeric) {
    std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) {
      return *parse_integer(a) < *parse_integer(b);
    });
  }
  std::map<std::string, int> rank;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) rank[labels[i]] = i;

  std::vector<int> assignment(g.num_nodes(), kUnassigned);
  for (const auto& [node, label] : rows) assignment[node] = rank[label];
  const int m = static_cast<int>(labels.size());
  return Plan(std::move(assignment), m, std::move(labels));
}

Plan load_plan_file(const std::string& path, const DualGraph& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open plan file '" + path + "'");
  return load_plan(in, g);
}

void write_plan(std::ostream& out, const DualGraph& g, const Plan& p) {
  require_total_assignment(g, p);
  out << "precinct_id,district\n";
  for (int v = 0; v < g.num_nodes(); ++v) {
    out << csv::quote(g.precinct(v).id) << ',' << csv::quote(p.label(p.district(v)))
        << '\n';
  }
}

void write_plan_file(const std::string& path, const DualGraph& g,
                     const Plan& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write plan file '" + path + "'");
  write_plan(out, g, p);
  if (!out) throw Error(ErrorKind::kIo, "failed writing plan file '" + path + "'");
}

}  // namespace plansim
