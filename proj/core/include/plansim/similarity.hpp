#pragma once

#include <utility>

#include "plansim/assignment.hpp"
#include "plansim/graph.hpp"
#include "plansim/plan.hpp"

namespace plansim {

struct SimilarityScore {
  double value = 0.0;  // matched weight / state total, in [0, 1]
  WeightKind kind = WeightKind::kArea;
};

// One pass over precincts. Requires p1.num_districts() <= p2.num_districts();
// callers orient the smaller plan first.
IntersectionMatrix intersection_matrix(const DualGraph& g, const Plan& p1,
                                       const Plan& p2, WeightKind kind);

// Area and population matrices from a single pass.
std::pair<IntersectionMatrix, IntersectionMatrix> intersection_matrices(
    const DualGraph& g, const Plan& p1, const Plan& p2);

// Fraction of the state's weight that stays in the same district under the
// best relabeling. Symmetric in (p1, p2); orients internally.
SimilarityScore similarity_score(const DualGraph& g, const Plan& p1,
                                 const Plan& p2, WeightKind kind);

// Score from a prepared matrix (rows <= cols).
SimilarityScore score_matrix(const IntersectionMatrix& mtx);

// Renumbers p2 so that district mapping[i] becomes district i. Districts of
// p2 left unmatched (when p2 has more districts than the mapping has rows)
// take labels n, n+1, ... in ascending order of their old index. External
// labels are dropped.
Plan relabel_plan(const Plan& p2, const Assignment& a);

// Renumbers `target` to agree with `reference` under the best matching for
// `kind`, whichever plan has more districts. Matched districts inherit the
// reference's external labels; leftover target districts get fresh labels.
Plan relabel_to_reference(const DualGraph& g, const Plan& reference,
                          const Plan& target, WeightKind kind);

}  // namespace plansim
