#include "plansim/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "plansim/error.hpp"

namespace plansim {

IntersectionMatrix::IntersectionMatrix(int rows, int cols, WeightKind kind,
                                       double total)
    : rows_(rows), cols_(cols), kind_(kind), total_(total) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorKind::kUsage, "matrix dimensions must be nonnegative");
  }
  data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

IntersectionMatrix IntersectionMatrix::from_rows(
    const std::vector<std::vector<double>>& rows, WeightKind kind) {
  const int n = static_cast<int>(rows.size());
  const int k = n == 0 ? 0 : static_cast<int>(rows.front().size());
  IntersectionMatrix mtx(n, k, kind);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != k) {
      throw Error(ErrorKind::kUsage, "ragged matrix rows");
    }
    for (int j = 0; j < k; ++j) {
      mtx(i, j) = rows[i][j];
      total += rows[i][j];
    }
  }
  mtx.set_total(total);
  return mtx;
}

std::vector<double> IntersectionMatrix::row_sums() const {
  std::vector<double> sums(rows_, 0.0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
  return sums;
}

std::vector<double> IntersectionMatrix::col_sums() const {
  std::vector<double> sums(cols_, 0.0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) sums[j] += (*this)(i, j);
  return sums;
}

IntersectionMatrix IntersectionMatrix::transposed() const {
  IntersectionMatrix out(cols_, rows_, kind_, total_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double assignment_weight(const IntersectionMatrix& mtx,
                         const std::vector<int>& mapping) {
  double sum = 0.0;
  for (int i = 0; i < static_cast<int>(mapping.size()); ++i) {
    sum += mtx(i, mapping[i]);
  }
  return sum;
}

namespace {

void check_entries(const IntersectionMatrix& mtx) {
  if (mtx.rows() > mtx.cols()) {
    throw Error(ErrorKind::kUsage,
                "assignment needs rows <= cols (got " +
                    std::to_string(mtx.rows()) + "x" +
                    std::to_string(mtx.cols()) + "); orient the smaller plan first");
  }
  for (int i = 0; i < mtx.rows(); ++i) {
    for (int j = 0; j < mtx.cols(); ++j) {
      const double w = mtx(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorKind::kInvalidInput,
                    "matrix entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is negative or not finite");
      }
    }
  }
}

// Square min-cost assignment state after the Hungarian pass. Costs are the
// negated weights; padded rows cost zero everywhere.
struct DualSolution {
  int size = 0;
  std::vector<double> row_potential;  // u
  std::vector<double> col_potential;  // v
  std::vector<int> row_match;
  std::vector<int> col_match;
};

DualSolution hungarian(const IntersectionMatrix& mtx) {
  const int n = mtx.rows();
  const int k = mtx.cols();
  auto cost = [&](int i, int j) { return i < n ? -mtx(i, j) : 0.0; };
  const double inf = std::numeric_limits<double>::infinity();

  // 1-indexed arrays; column 0 is the virtual start of each augmentation.
  std::vector<double> u(k + 1, 0.0), v(k + 1, 0.0);
  std::vector<int> p(k + 1, 0), way(k + 1, 0);
  std::vector<double> minv(k + 1);
  std::vector<char> used(k + 1);
  for (int i = 1; i <= k; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  DualSolution out;
  out.size = k;
  out.row_potential.assign(u.begin() + 1, u.end());
  out.col_potential.assign(v.begin() + 1, v.end());
  out.row_match.assign(k, -1);
  out.col_match.assign(k, -1);
  for (int j = 1; j <= k; ++j) {
    out.row_match[p[j] - 1] = j - 1;
    out.col_match[j - 1] = p[j] - 1;
  }
  return out;
}

// Rewrites the optimal matching in `sol` into the lexicographically smallest
// optimal one over the first n rows. Optimal matchings are exactly the
// perfect matchings made of tight edges (zero reduced cost) for any optimal
// dual, so the search stays inside the tight subgraph.
void lexicographic_refine(const IntersectionMatrix& mtx, DualSolution& sol,
                          double tolerance) {
  const int n = mtx.rows();
  const int k = sol.size;
  auto tight = [&](int i, int j) {
    const double cost = i < n ? -mtx(i, j) : 0.0;
    return std::abs(cost - sol.row_potential[i] - sol.col_potential[j]) <=
           tolerance;
  };

  std::vector<char> blocked(k, 0);
  std::vector<char> visited(k);
  std::vector<int> via_row(k);
  std::deque<int> queue;

  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < k; ++c) {
      if (blocked[c] || !tight(i, c)) continue;
      if (sol.row_match[i] == c) break;

      const int displaced = sol.col_match[c];
      const int released = sol.row_match[i];
      sol.row_match[i] = c;
      sol.col_match[c] = i;
      sol.row_match[displaced] = -1;
      sol.col_match[released] = -1;
      blocked[c] = 1;

      // Alternating path from the displaced row to the released column.
      std::fill(visited.begin(), visited.end(), 0);
      queue.assign(1, displaced);
      bool found = false;
      while (!queue.empty() && !found) {
        const int row = queue.front();
        queue.pop_front();
        for (int j = 0; j < k; ++j) {
          if (blocked[j] || visited[j] || !tight(row, j)) continue;
          visited[j] = 1;
          via_row[j] = row;
          if (sol.col_match[j] == -1) {
            int col = j;
            while (true) {
              const int r = via_row[col];
              const int previous = sol.row_match[r];
              sol.row_match[r] = col;
              sol.col_match[col] = r;
              if (r == displaced) break;
              col = previous;
            }
            found = true;
            break;
          }
          queue.push_back(sol.col_match[j]);
        }
      }
      blocked[c] = 0;
      if (found) break;

      sol.row_match[i] = released;
      sol.col_match[released] = i;
      sol.row_match[displaced] = c;
      sol.col_match[c] = displaced;
    }
    blocked[sol.row_match[i]] = 1;
  }
}

}  // namespace

Assignment solve_assignment(const IntersectionMatrix& mtx) {
  check_entries(mtx);
  Assignment out;
  if (mtx.rows() == 0) return out;

  double scale = 0.0;
  for (int i = 0; i < mtx.rows(); ++i)
    for (int j = 0; j < mtx.cols(); ++j) scale = std::max(scale, mtx(i, j));

  DualSolution sol = hungarian(mtx);
  const double tolerance = 1e-11 * scale * static_cast<double>(mtx.cols());
  lexicographic_refine(mtx, sol, tolerance);

  out.mapping.assign(sol.row_match.begin(), sol.row_match.begin() + mtx.rows());
  out.matched_weight = assignment_weight(mtx, out.mapping);
  return out;
}

Assignment brute_force_assignment(const IntersectionMatrix& mtx) {
  check_entries(mtx);
  if (mtx.cols() > 9) {
    throw Error(ErrorKind::kUsage, "brute-force assignment limited to 9 columns");
  }
  const int n = mtx.rows();
  const int k = mtx.cols();
  Assignment best;
  best.matched_weight = -1.0;
  std::vector<int> current(n);
  std::vector<char> taken(k, 0);

  auto recurse = [&](auto& self, int row) -> void {
    if (row == n) {
      const double w = assignment_weight(mtx, current);
      if (w > best.matched_weight) {
        best.matched_weight = w;
        best.mapping = current;
      }
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (taken[j]) continue;
      taken[j] = 1;
      current[row] = j;
      self(self, row + 1);
      taken[j] = 0;
    }
  };
  recurse(recurse, 0);
  if (n == 0) best.matched_weight = 0.0;
  return best;
}

}  // namespace plansim
