#pragma once

#include <initializer_list>
#include <vector>

#include "plansim/graph.hpp"

namespace plansim {

// n x k matrix of shared weight between the districts of two plans: entry
// (i, j) is the weight of precincts in district i of the first plan and
// district j of the second. Row-major.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;
  IntersectionMatrix(int rows, int cols, WeightKind kind = WeightKind::kArea,
                     double total = 0.0);

  // Convenience for tests and small callers; total defaults to the entry sum.
  static IntersectionMatrix from_rows(
      const std::vector<std::vector<double>>& rows,
      WeightKind kind = WeightKind::kArea);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  WeightKind kind() const { return kind_; }
  // Total weight of the state for `kind`; the score denominator.
  double total() const { return total_; }
  void set_total(double total) { total_ = total; }

  double operator()(int i, int j) const { return data_[i * cols_ + j]; }
  double& operator()(int i, int j) { return data_[i * cols_ + j]; }

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;
  IntersectionMatrix transposed() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  WeightKind kind_ = WeightKind::kArea;
  double total_ = 0.0;
  std::vector<double> data_;
};

// Injective row -> column map. mapping[i] is the column matched to row i.
struct Assignment {
  std::vector<int> mapping;
  double matched_weight = 0.0;
};

// Sum of mtx(i, mapping[i]) accumulated in row order. Both solvers report
// their weight through this so equal mappings give bit-identical weights.
double assignment_weight(const IntersectionMatrix& mtx,
                         const std::vector<int>& mapping);

// Maximum-weight assignment of every row to a distinct column (rows <= cols).
//
// Shortest-augmenting-path Hungarian method on the matrix padded to k x k
// with zero rows, O(k^3). Among optimal assignments the lexicographically
// smallest mapping vector is returned: starting from the optimal dual
// solution, rows are pinned in order to the lowest column whose edge is tight
// and still admits a perfect tight matching, checked by one alternating-path
// search per candidate.
//
// Throws Error(kInvalidInput) on NaN, infinite or negative entries and
// Error(kUsage) when rows > cols.
Assignment solve_assignment(const IntersectionMatrix& mtx);

// Exhaustive search over all injective maps in lexicographic order, keeping
// the first strictly better one. Test oracle; cols must be <= 9.
Assignment brute_force_assignment(const IntersectionMatrix& mtx);

}  // namespace plansim
