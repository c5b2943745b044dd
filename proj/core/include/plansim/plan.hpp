#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "plansim/graph.hpp"

namespace plansim {

// Sentinel for a precinct with no district (only produced by loaders, so
// validate_plan can report coverage gaps).
inline constexpr int kUnassigned = -1;

// Assignment of graph nodes to dense district indices 0..m-1.
//
// `labels` optionally carries the external label of each district index so a
// plan read from a file can be written back with its original naming. When
// empty, the index itself is the label.
class Plan {
 public:
  Plan() = default;
  Plan(std::vector<int> district_of, int num_districts,
       std::vector<std::string> labels = {});

  // Infers num_districts as max index + 1.
  static Plan from_assignment(std::vector<int> district_of);

  int num_districts() const { return num_districts_; }
  int num_nodes() const { return static_cast<int>(district_of_.size()); }
  int district(int node) const { return district_of_[node]; }
  const std::vector<int>& assignment() const { return district_of_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int district) const;

  friend bool operator==(const Plan& a, const Plan& b) {
    return a.num_districts_ == b.num_districts_ &&
           a.district_of_ == b.district_of_;
  }

 private:
  std::vector<int> district_of_;
  int num_districts_ = 0;
  std::vector<std::string> labels_;
};

struct Violation {
  enum class Kind {
    kSizeMismatch,      // plan covers a different number of nodes than graph
    kMissingPrecinct,   // precinct has no district
    kDistrictOutOfRange,
    kEmptyDistrict,
    kDiscontiguous,     // district induces more than one component
  };
  Kind kind;
  int district = -1;
  int node = -1;
  int components = 0;

  std::string describe(const DualGraph& g) const;
};

// Empty iff the plan is a total, dense, contiguous assignment on g.
std::vector<Violation> validate_plan(const DualGraph& g, const Plan& p);

// Throws Error(kValidation) carrying the first violation when the plan does
// not cover g with in-range districts. Contiguity is not checked here; it does
// not affect weight sums.
void require_total_assignment(const DualGraph& g, const Plan& p);

// Per-district sums of the chosen weight.
std::vector<double> district_weights(const DualGraph& g, const Plan& p,
                                     WeightKind kind);
std::vector<std::int64_t> district_populations(const DualGraph& g,
                                               const Plan& p);

// max_i |pop_i - ideal| / ideal with ideal = total_population / m.
double population_deviation(const DualGraph& g, const Plan& p);

// Plan CSV: header `precinct_id,district`, one row per precinct. District
// labels are densified on load (numeric order when every label is an integer,
// lexicographic otherwise) and retained in Plan::labels(). Precincts absent
// from the file are left unassigned; unknown or repeated ids are errors.
Plan load_plan(std::istream& in, const DualGraph& g);
Plan load_plan_file(const std::string& path, const DualGraph& g);
// Rows in graph node order.
void write_plan(std::ostream& out, const DualGraph& g, const Plan& p);
void write_plan_file(const std::string& path, const DualGraph& g,
                     const Plan& p);

}  // namespace plansim
