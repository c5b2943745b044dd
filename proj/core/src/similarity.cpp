#include "plansim/similarity.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "plansim/error.hpp"

namespace plansim {

namespace {

void check_pair(const DualGraph& g, const Plan& p1, const Plan& p2) {
  if (p1.num_nodes() != g.num_nodes() || p2.num_nodes() != g.num_nodes()) {
    throw Error(ErrorKind::kInvalidInput,
                "plan is defined on a different precinct set than the graph");
  }
  require_total_assignment(g, p1);
  require_total_assignment(g, p2);
  if (p1.num_districts() > p2.num_districts()) {
    throw Error(ErrorKind::kUsage,
                "intersection matrix needs the plan with fewer districts first");
  }
}

std::optional<long long> as_integer(const std::string& s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

// Labels for `count` districts beyond the reference's, avoiding collisions.
std::vector<std::string> fresh_labels(const Plan& reference, int count) {
  std::vector<std::string> out;
  std::set<std::string> used;
  bool numeric = true;
  long long max_label = -1;
  for (int d = 0; d < reference.num_districts(); ++d) {
    std::string label = reference.label(d);
    auto value = as_integer(label);
    if (value) {
      max_label = std::max(max_label, *value);
    } else {
      numeric = false;
    }
    used.insert(std::move(label));
  }
  long long next = numeric ? max_label + 1 : reference.num_districts();
  while (static_cast<int>(out.size()) < count) {
    std::string candidate = std::to_string(next++);
    if (used.insert(candidate).second) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace

IntersectionMatrix intersection_matrix(const DualGraph& g, const Plan& p1,
                                       const Plan& p2, WeightKind kind) {
  check_pair(g, p1, p2);
  IntersectionMatrix mtx(p1.num_districts(), p2.num_districts(), kind,
                         g.total(kind));
  for (int v = 0; v < g.num_nodes(); ++v) {
    mtx(p1.district(v), p2.district(v)) += g.weight(v, kind);
  }
  return mtx;
}

std::pair<IntersectionMatrix, IntersectionMatrix> intersection_matrices(
    const DualGraph& g, const Plan& p1, const Plan& p2) {
  check_pair(g, p1, p2);
  IntersectionMatrix area(p1.num_districts(), p2.num_districts(),
                          WeightKind::kArea, g.total(WeightKind::kArea));
  IntersectionMatrix pop(p1.num_districts(), p2.num_districts(),
                         WeightKind::kPopulation,
                         g.total(WeightKind::kPopulation));
  for (int v = 0; v < g.num_nodes(); ++v) {
    const int a = p1.district(v);
    const int b = p2.district(v);
    area(a, b) += g.precinct(v).area;
    pop(a, b) += static_cast<double>(g.precinct(v).population);
  }
  return {std::move(area), std::move(pop)};
}

SimilarityScore score_matrix(const IntersectionMatrix& mtx) {
  if (!(mtx.total() > 0.0)) {
    throw Error(ErrorKind::kInvalidInput,
                std::string("state total ") + to_string(mtx.kind()) +
                    " is zero; similarity is undefined");
  }
  const Assignment a = solve_assignment(mtx);
  const double value = std::clamp(a.matched_weight / mtx.total(), 0.0, 1.0);
  return {value, mtx.kind()};
}

SimilarityScore similarity_score(const DualGraph& g, const Plan& p1,
                                 const Plan& p2, WeightKind kind) {
  if (p1.num_districts() <= p2.num_districts()) {
    return score_matrix(intersection_matrix(g, p1, p2, kind));
  }
  return score_matrix(intersection_matrix(g, p2, p1, kind));
}

Plan relabel_plan(const Plan& p2, const Assignment& a) {
  const int n = static_cast<int>(a.mapping.size());
  const int k = p2.num_districts();
  if (n > k) {
    throw Error(ErrorKind::kUsage,
                "assignment has more rows than the plan has districts");
  }
  std::vector<int> new_label(k, -1);
  for (int i = 0; i < n; ++i) {
    const int j = a.mapping[i];
    if (j < 0 || j >= k || new_label[j] != -1) {
      throw Error(ErrorKind::kUsage,
                  "assignment is not an injective map into the plan's districts");
    }
    new_label[j] = i;
  }
  int next = n;
  for (int j = 0; j < k; ++j) {
    if (new_label[j] == -1) new_label[j] = next++;
  }
  std::vector<int> district_of(p2.assignment());
  for (int& d : district_of) {
    if (d >= 0 && d < k) d = new_label[d];
  }
  return Plan(std::move(district_of), k);
}

Plan relabel_to_reference(const DualGraph& g, const Plan& reference,
                          const Plan& target, WeightKind kind) {
  const int m_ref = reference.num_districts();
  const int m_target = target.num_districts();

  if (m_ref <= m_target) {
    const Assignment a =
        solve_assignment(intersection_matrix(g, reference, target, kind));
    Plan renumbered = relabel_plan(target, a);
    std::vector<std::string> labels;
    for (int i = 0; i < m_ref; ++i) labels.push_back(reference.label(i));
    for (auto& extra : fresh_labels(reference, m_target - m_ref)) {
      labels.push_back(std::move(extra));
    }
    return Plan(renumbered.assignment(), m_target, std::move(labels));
  }

  // Target has fewer districts: each target district takes the label of its
  // matched reference district; indices follow reference order.
  const Assignment a =
      solve_assignment(intersection_matrix(g, target, reference, kind));
  std::vector<int> order(m_target);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a.mapping[x] < a.mapping[y]; });
  std::vector<int> new_index(m_target);
  std::vector<std::string> labels(m_target);
  for (int rank = 0; rank < m_target; ++rank) {
    new_index[order[rank]] = rank;
    labels[rank] = reference.label(a.mapping[order[rank]]);
  }
  std::vector<int> district_of(target.assignment());
  for (int& d : district_of) d = new_index[d];
  return Plan(std::move(district_of), m_target, std::move(labels));
}

}  // namespace plansim
