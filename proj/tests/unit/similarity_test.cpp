#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "plansim/assignment.hpp"
#include "plansim/error.hpp"
#include "plansim/similarity.hpp"
#include "plansim/synth.hpp"
#include "test_support.hpp"

namespace plansim {
namespace {

using Rows = std::vector<std::vector<double>>;

Assignment solve(const Rows& rows) {
  return solve_assignment(IntersectionMatrix::from_rows(rows));
}

TEST(SolveAssignment, AllEqualPicksIdentity) {
  const Assignment a = solve({{1, 1}, {1, 1}});
  EXPECT_EQ(a.mapping, (std::vector<int>{0, 1}));
  EXPECT_EQ(a.matched_weight, 2.0);
}

TEST(SolveAssignment, TwoByTwo) {
  // Brute force: identity 3 + 4 = 7, swap 1 + 2 = 3.
  const Assignment a = solve({{3, 1}, {2, 4}});
  EXPECT_EQ(a.mapping, (std::vector<int>{0, 1}));
  EXPECT_EQ(a.matched_weight, 7.0);
}

TEST(SolveAssignment, SingleRowPicksMax) {
  const Assignment a = solve({{5, 1, 2}});
  EXPECT_EQ(a.mapping, (std::vector<int>{0}));
  EXPECT_EQ(a.matched_weight, 5.0);
}

TEST(SolveAssignment, ZeroMatrixLowestIndexMapping) {
  const Assignment a = solve({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(a.mapping, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(a.matched_weight, 0.0);
}

TEST(SolveAssignment, ZeroWeightMatchIsLegal) {
  // The optimum forces row 1 onto a zero entry.
  const Assignment a = solve({{0, 9, 0}, {0, 8, 0}});
  EXPECT_EQ(a.matched_weight, 9.0);
  EXPECT_EQ(a.mapping, (std::vector<int>{1, 0}));
}

TEST(SolveAssignment, RectangularTieBreakIsLexicographic) {
  // Optima of weight 2: {0->0,1->1}, {0->0,1->2}, {0->1,1->0}, ... smallest
  // vector is (0, 1).
  const Assignment a = solve({{1, 1, 0}, {1, 1, 1}});
  EXPECT_EQ(a.mapping, (std::vector<int>{0, 1}));
  const Assignment b = solve({{0, 1, 1}, {0, 1, 1}});
  EXPECT_EQ(b.mapping, (std::vector<int>{1, 2}));
}

TEST(SolveAssignment, RejectsBadInput) {
  EXPECT_THROW(solve({{1, -1}, {0, 0}}), Error);
  EXPECT_THROW(solve({{1, std::nan("")}, {0, 0}}), Error);
  EXPECT_THROW(solve({{1}, {2}}), Error);  // rows > cols
}

TEST(BruteForceAssignment, Examples) {
  auto one = brute_force_assignment(IntersectionMatrix::from_rows({{3, 1}, {2, 4}}));
  EXPECT_EQ(one.matched_weight, 7.0);
  auto single = brute_force_assignment(IntersectionMatrix::from_rows({{2.5}}));
  EXPECT_EQ(single.matched_weight, 2.5);
  EXPECT_EQ(single.mapping, (std::vector<int>{0}));
  auto zeros = brute_force_assignment(IntersectionMatrix::from_rows(Rows(3, {0, 0, 0})));
  EXPECT_EQ(zeros.mapping, (std::vector<int>{0, 1, 2}));
  EXPECT_THROW(brute_force_assignment(IntersectionMatrix(2, 10)), Error);
}

TEST(SolveAssignment, RandomSixBySixMatchesPermutationOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const IntersectionMatrix mtx = testing::random_matrix(6, 6, rng, false);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    double best = -1.0;
    do {
      best = std::max(best, assignment_weight(mtx, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(solve_assignment(mtx).matched_weight, best) << "trial " << trial;
  }
}

TEST(SolveAssignment, OptimalityAndTieBreakAgainstBruteForce) {
  Rng rng(22);
  for (int trial = 0; trial < 600; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(7));
    const int n = 1 + static_cast<int>(rng.below(k));
    const bool integral = trial % 2 == 0;
    const IntersectionMatrix mtx = testing::random_matrix(n, k, rng, integral);
    const Assignment fast = solve_assignment(mtx);
    const Assignment slow = brute_force_assignment(mtx);
    ASSERT_EQ(fast.matched_weight, slow.matched_weight)
        << n << "x" << k << " trial " << trial;
    // Integer matrices tie often; both must land on the same smallest mapping.
    if (integral) EXPECT_EQ(fast.mapping, slow.mapping) << "trial " << trial;

    std::vector<int> cols(fast.mapping);
    std::sort(cols.begin(), cols.end());
    EXPECT_EQ(std::adjacent_find(cols.begin(), cols.end()), cols.end());
  }
}

class GridSimilarity : public ::testing::Test {
 protected:
  DualGraph grid = grid_state({2, 2, 1});
  Plan horizontal{{0, 0, 1, 1}, 2};
  Plan vertical{{0, 1, 0, 1}, 2};
};

TEST_F(GridSimilarity, IdentityMatrixIsDiagonal) {
  const IntersectionMatrix mtx = intersection_matrix(grid, horizontal, horizontal,
                                                     WeightKind::kArea);
  EXPECT_EQ(mtx(0, 0), 2.0);
  EXPECT_EQ(mtx(1, 1), 2.0);
  EXPECT_EQ(mtx(0, 1), 0.0);
  EXPECT_EQ(mtx(1, 0), 0.0);
  EXPECT_EQ(mtx.total(), 4.0);
}

TEST_F(GridSimilarity, HorizontalVsVerticalMatrixMatchesEnumeration) {
  const auto expected =
      testing::enumerate_intersections(grid, horizontal, vertical, WeightKind::kArea);
  EXPECT_EQ(expected, (Rows{{1, 1}, {1, 1}}));
  const IntersectionMatrix mtx =
      intersection_matrix(grid, horizontal, vertical, WeightKind::kArea);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(mtx(i, j), expected[i][j]);
}

TEST(IntersectionMatrix, PopulationHotCornerMatchesEnumeration) {
  // Cell (0,0) holds 10 people, the rest 1 each.
  std::vector<Precinct> cells{{"0_0", 1, 10}, {"0_1", 1, 1}, {"1_0", 1, 1}, {"1_1", 1, 1}};
  const DualGraph g(std::move(cells), std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  const Plan horizontal({0, 0, 1, 1}, 2);
  const Plan vertical({0, 1, 0, 1}, 2);
  const auto expected =
      testing::enumerate_intersections(g, horizontal, vertical, WeightKind::kPopulation);
  EXPECT_EQ(expected, (Rows{{10, 1}, {1, 1}}));
  const IntersectionMatrix mtx =
      intersection_matrix(g, horizontal, vertical, WeightKind::kPopulation);
  EXPECT_EQ(mtx.row_sums(), (std::vector<double>{11, 2}));
  EXPECT_EQ(mtx.col_sums(), (std::vector<double>{11, 2}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(mtx(i, j), expected[i][j]);
}

TEST(IntersectionMatrix, RejectsForeignOrMisorientedPlans) {
  const DualGraph g = grid_state({2, 2, 1});
  EXPECT_THROW(intersection_matrix(g, Plan({0, 0, 1}, 2), Plan({0, 0, 1, 1}, 2),
                                   WeightKind::kArea),
               Error);
  EXPECT_THROW(intersection_matrix(g, Plan({0, 1, 2, 2}, 3), Plan({0, 0, 1, 1}, 2),
                                   WeightKind::kArea),
               Error);
}

TEST_F(GridSimilarity, Scores) {
  EXPECT_NEAR(similarity_score(grid, horizontal, horizontal, WeightKind::kArea).value,
              1.0, 1e-12);
  EXPECT_DOUBLE_EQ(similarity_score(grid, horizontal, vertical, WeightKind::kArea).value,
                   0.5);
}

TEST(SimilarityScore, CircleQuarterOffsetIsOneHalf) {
  const DualGraph circle = circle_state(360);
  const double value = similarity_score(circle, radial_plan(360, 4, 0),
                                        radial_plan(360, 4, 45), WeightKind::kArea)
                           .value;
  EXPECT_NEAR(value, 0.5, 1e-9);
}

TEST(SimilarityScore, MixedDistrictCountsAreSymmetric) {
  const DualGraph g = grid_state({6, 6, 5});
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Plan a = testing::random_grown_plan(g, 2 + static_cast<int>(rng.below(3)), rng);
    const Plan b = testing::random_grown_plan(g, 2 + static_cast<int>(rng.below(5)), rng);
    for (WeightKind kind : {WeightKind::kArea, WeightKind::kPopulation}) {
      const double ab = similarity_score(g, a, b, kind).value;
      const double ba = similarity_score(g, b, a, kind).value;
      EXPECT_NEAR(ab, ba, 1e-12);
      EXPECT_GE(ab, 0.0);
      EXPECT_LE(ab, 1.0);
    }
  }
}

TEST(SimilarityProperties, MarginalsRelabelingAndIdentity) {
  const DualGraph g = grid_state({8, 8, 10, 0.3, 2});
  Rng rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(5));
    const Plan a = testing::random_grown_plan(g, m, rng);
    const Plan b = testing::random_grown_plan(g, m + static_cast<int>(rng.below(3)), rng);
    for (WeightKind kind : {WeightKind::kArea, WeightKind::kPopulation}) {
      const IntersectionMatrix mtx = intersection_matrix(g, a, b, kind);
      const auto rows = mtx.row_sums();
      const auto cols = mtx.col_sums();
      const auto wa = district_weights(g, a, kind);
      const auto wb = district_weights(g, b, kind);
      for (int i = 0; i < m; ++i) EXPECT_NEAR(rows[i], wa[i], 1e-9);
      for (int j = 0; j < b.num_districts(); ++j) EXPECT_NEAR(cols[j], wb[j], 1e-9);

      // Reverse the labels of b; the score must not move.
      std::vector<int> reversed(b.assignment());
      for (int& d : reversed) d = b.num_districts() - 1 - d;
      const double base = similarity_score(g, a, b, kind).value;
      EXPECT_NEAR(similarity_score(g, a, Plan(reversed, b.num_districts()), kind).value,
                  base, 1e-12);
      EXPECT_NEAR(similarity_score(g, b, b, kind).value, 1.0, 1e-12);
      if (b.num_districts() == m) EXPECT_GE(base, 1.0 / m - 1e-12);
    }
  }
}

TEST(SimilarityScore, ValueOneOnlyForSamePartition) {
  const DualGraph g = grid_state({2, 3, 1});
  const Plan a({0, 0, 1, 0, 1, 1}, 2);
  const Plan b({1, 1, 0, 1, 0, 0}, 2);  // same partition, swapped labels
  const Plan c({0, 0, 0, 1, 1, 1}, 2);
  EXPECT_NEAR(similarity_score(g, a, b, WeightKind::kArea).value, 1.0, 1e-12);
  EXPECT_LT(similarity_score(g, a, c, WeightKind::kArea).value, 1.0);
}

TEST(RelabelPlan, IdentityAndSwap) {
  const Plan p({0, 0, 1, 1}, 2);
  EXPECT_EQ(relabel_plan(p, {{0, 1}, 0}), p);
  EXPECT_EQ(relabel_plan(p, {{1, 0}, 0}).assignment(), (std::vector<int>{1, 1, 0, 0}));
}

TEST(RelabelPlan, UnmatchedDistrictsTakeFreshLabels) {
  // Old districts (2, 0, 1) become labels (0, 1, 2).
  const Plan p({0, 1, 2}, 3);
  const Plan out = relabel_plan(p, {{2, 0}, 0});
  EXPECT_EQ(out.assignment(), (std::vector<int>{1, 2, 0}));
}

TEST(RelabelPlan, RejectsMismatchedAssignments) {
  const Plan p({0, 1}, 2);
  EXPECT_THROW(relabel_plan(p, {{0, 1, 2}, 0}), Error);
  EXPECT_THROW(relabel_plan(p, {{1, 1}, 0}), Error);
  EXPECT_THROW(relabel_plan(p, {{5}, 0}), Error);
}

TEST(RelabelToReference, RecoversReferenceNumbering) {
  const DualGraph g = grid_state({6, 6, 1});
  Rng rng(25);
  const Plan reference = testing::random_grown_plan(g, 4, rng);
  std::vector<int> scrambled(reference.assignment());
  const std::vector<int> perm{3, 1, 0, 2};
  for (int& d : scrambled) d = perm[d];
  const Plan out = relabel_to_reference(g, reference, Plan(scrambled, 4),
                                        WeightKind::kArea);
  EXPECT_EQ(out.assignment(), reference.assignment());
}

TEST(RelabelToReference, FewerTargetDistrictsInheritReferenceLabels) {
  const DualGraph g = grid_state({1, 6, 1});
  const Plan reference({0, 0, 1, 1, 2, 2}, 3, {"a", "b", "c"});
  const Plan target({0, 0, 0, 0, 1, 1}, 2);
  const Plan out = relabel_to_reference(g, reference, target, WeightKind::kArea);
  EXPECT_EQ(out.num_districts(), 2);
  EXPECT_EQ(out.label(out.district(0)), "a");
  EXPECT_EQ(out.label(out.district(5)), "c");
}

TEST(RelabelToReference, MoreTargetDistrictsGetFreshLabels) {
  const DualGraph g = grid_state({1, 6, 1});
  const Plan reference({0, 0, 0, 1, 1, 1}, 2, {"4", "7"});
  const Plan target({2, 2, 1, 1, 0, 0}, 3);
  const Plan out = relabel_to_reference(g, reference, target, WeightKind::kArea);
  EXPECT_EQ(out.label(out.district(0)), "4");
  EXPECT_EQ(out.label(out.district(5)), "7");
  EXPECT_EQ(out.label(out.district(2)), "8");
}

}  // namespace
}  // namespace plansim
