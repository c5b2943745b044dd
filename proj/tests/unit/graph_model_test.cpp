#include <gtest/gtest.h>

#include <sstream>

#include "plansim/error.hpp"
#include "plansim/graph.hpp"
#include "plansim/plan.hpp"
#include "plansim/synth.hpp"
#include "test_support.hpp"

namespace plansim {
namespace {

DualGraph parse(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

// Path a-b-c-d with the given populations and unit areas.
DualGraph path4(std::int64_t p0, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
  std::ostringstream json;
  json << R"({"nodes":[)"
       << R"({"id":"a","area":1,"population":)" << p0 << "},"
       << R"({"id":"b","area":1,"population":)" << p1 << "},"
       << R"({"id":"c","area":1,"population":)" << p2 << "},"
       << R"({"id":"d","area":1,"population":)" << p3 << "}"
       << R"(],"edges":[["a","b"],["b","c"],["c","d"]]})";
  return parse(json.str());
}

std::string error_message(const std::string& json) {
  try {
    parse(json);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
    return e.what();
  }
  ADD_FAILURE() << "expected load_graph to throw";
  return {};
}

TEST(LoadGraph, PathGraphTotals) {
  const DualGraph g = path4(1, 2, 3, 4);
  EXPECT_EQ(g.num_nodes(), 4);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_DOUBLE_EQ(g.total_area(), 4.0);
  EXPECT_EQ(g.total_population(), 10);
  EXPECT_EQ(g.find("c"), 2);
  EXPECT_FALSE(g.find("zz").has_value());
}

TEST(LoadGraph, DanglingEdgeNamesEndpoint) {
  const std::string msg = error_message(
      R"({"nodes":[{"id":"a","area":1,"population":1}],"edges":[["a","zz"]]})");
  EXPECT_NE(msg.find("'zz'"), std::string::npos) << msg;
}

TEST(LoadGraph, DisconnectedListsOneNodePerComponent) {
  const std::string msg = error_message(R"({"nodes":[
      {"id":"a","area":1,"population":1},{"id":"b","area":1,"population":1},
      {"id":"c","area":1,"population":1},{"id":"d","area":1,"population":1}],
      "edges":[["a","b"],["c","d"]]})");
  EXPECT_NE(msg.find("2 components"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'a'"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'c'"), std::string::npos) << msg;
}

TEST(LoadGraph, RejectsDuplicatesNegativesSelfLoopsAndJunk) {
  EXPECT_NE(error_message(R"({"nodes":[{"id":"a"},{"id":"a"}],"edges":[]})")
                .find("duplicate precinct id 'a'"),
            std::string::npos);
  EXPECT_NE(error_message(R"({"nodes":[{"id":"q","area":-1,"population":1}]})")
                .find("'q'"),
            std::string::npos);
  EXPECT_NE(error_message(R"({"nodes":[{"id":"q","area":1,"population":-5}]})")
                .find("'q'"),
            std::string::npos);
  EXPECT_NE(error_message(
                R"({"nodes":[{"id":"s","area":1,"population":1}],"edges":[["s","s"]]})")
                .find("'s'"),
            std::string::npos);
  EXPECT_NE(error_message("{not json").find("malformed"), std::string::npos);
  EXPECT_NE(error_message(R"({"nodes":[{"id":"a","population":1.5}]})")
                .find("integer"),
            std::string::npos);
}

TEST(LoadGraph, DuplicateEdgesCollapse) {
  const DualGraph g = parse(R"({"nodes":[{"id":"a","area":1,"population":1},
      {"id":"b","area":1,"population":1}],"edges":[["a","b"],["b","a"],["a","b"]]})");
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(LoadGraph, WriteThenLoadPreservesGraph) {
  const DualGraph g = grid_state({3, 4, 7, 0.5, 1});
  std::stringstream buffer;
  write_graph(buffer, g);
  const DualGraph back = load_graph(buffer);
  ASSERT_EQ(back.num_nodes(), g.num_nodes());
  EXPECT_EQ(back.edge_list(), g.edge_list());
  for (int v = 0; v < g.num_nodes(); ++v) {
    EXPECT_EQ(back.precinct(v).id, g.precinct(v).id);
    EXPECT_EQ(back.precinct(v).population, g.precinct(v).population);
    EXPECT_DOUBLE_EQ(back.precinct(v).area, g.precinct(v).area);
  }
}

class GridPlans : public ::testing::Test {
 protected:
  DualGraph grid = grid_state({2, 2, 1});
  Plan horizontal{{0, 0, 1, 1}, 2};
  Plan vertical{{0, 1, 0, 1}, 2};
};

TEST_F(GridPlans, HorizontalSplitIsValid) {
  EXPECT_TRUE(validate_plan(grid, horizontal).empty());
  EXPECT_TRUE(validate_plan(grid, vertical).empty());
}

TEST_F(GridPlans, DiagonalDistrictIsDiscontiguous) {
  const Plan diagonal({0, 1, 2, 0}, 3);
  const auto v = validate_plan(grid, diagonal);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::kDiscontiguous);
  EXPECT_EQ(v[0].district, 0);
  EXPECT_EQ(v[0].components, 2);
}

TEST_F(GridPlans, MissingPrecinctIsOneCoverageViolation) {
  const Plan missing({0, 0, 1, kUnassigned}, 2);
  const auto v = validate_plan(grid, missing);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::kMissingPrecinct);
  EXPECT_EQ(v[0].node, 3);
  EXPECT_NE(v[0].describe(grid).find("'1_1'"), std::string::npos);
}

TEST_F(GridPlans, EmptyDistrictAndWrongSize) {
  const auto empty = validate_plan(grid, Plan({0, 0, 0, 0}, 2));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].kind, Violation::Kind::kEmptyDistrict);
  EXPECT_EQ(empty[0].district, 1);

  const auto size = validate_plan(grid, Plan({0, 0, 1}, 2));
  ASSERT_EQ(size.size(), 1u);
  EXPECT_EQ(size[0].kind, Violation::Kind::kSizeMismatch);
}

TEST_F(GridPlans, DistrictWeights) {
  EXPECT_EQ(district_weights(grid, horizontal, WeightKind::kArea),
            (std::vector<double>{2.0, 2.0}));
  EXPECT_EQ(district_weights(grid, Plan({0, 0, 0, 0}, 1), WeightKind::kArea),
            (std::vector<double>{4.0}));
  EXPECT_THROW(district_weights(grid, Plan({0, 0, 1, kUnassigned}, 2),
                                WeightKind::kArea),
               Error);
}

TEST(DistrictWeights, PopulationOnPath) {
  const DualGraph g = path4(3, 1, 1, 1);
  EXPECT_EQ(district_weights(g, Plan({0, 1, 1, 1}, 2), WeightKind::kPopulation),
            (std::vector<double>{3.0, 3.0}));
}

TEST(PopulationDeviation, Examples) {
  EXPECT_DOUBLE_EQ(population_deviation(path4(1, 1, 1, 1), Plan({0, 0, 1, 1}, 2)), 0.0);
  // pops [3,1] with m = 2: ideal 2, max gap 1.
  EXPECT_DOUBLE_EQ(population_deviation(path4(2, 1, 0, 1), Plan({0, 0, 1, 1}, 2)), 0.5);
  // pops [4,3,2] with m = 3: ideal 3, max gap 1.
  EXPECT_DOUBLE_EQ(population_deviation(path4(4, 3, 1, 1), Plan({0, 1, 2, 2}, 3)),
                   1.0 / 3.0);
}

TEST(GraphModelProperties, WeightsSumToTotalAndGrownPlansValidate) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(40));
    const DualGraph g = testing::random_connected_graph(n, static_cast<int>(rng.below(n)), rng);
    const int m = 1 + static_cast<int>(rng.below(std::min(n, 6)));
    const Plan p = testing::random_grown_plan(g, m, rng);
    ASSERT_TRUE(validate_plan(g, p).empty()) << "trial " << trial;

    std::int64_t pop_sum = 0;
    for (auto x : district_populations(g, p)) pop_sum += x;
    EXPECT_EQ(pop_sum, g.total_population());
    double area_sum = 0.0;
    for (double x : district_weights(g, p, WeightKind::kArea)) area_sum += x;
    EXPECT_NEAR(area_sum, g.total_area(), 1e-9 * g.total_area());
  }
}

TEST(GraphModelProperties, DeviationIsRelabelingInvariant) {
  Rng rng(12);
  const DualGraph g = grid_state({6, 6, 10, 0.4, 2});
  for (int trial = 0; trial < 50; ++trial) {
    const Plan p = testing::random_grown_plan(g, 4, rng);
    std::vector<int> perm{2, 0, 3, 1};
    std::vector<int> relabeled(p.assignment());
    for (int& d : relabeled) d = perm[d];
    EXPECT_DOUBLE_EQ(population_deviation(g, p),
                     population_deviation(g, Plan(relabeled, 4)));
  }
}

TEST(PlanCsv, LabelsDensifyNumericallyAndRoundTrip) {
  const DualGraph g = path4(1, 1, 1, 1);
  std::istringstream in("precinct_id,district\nd,10\nc,10\nb,9\na,2\n");
  const Plan p = load_plan(in, g);
  EXPECT_EQ(p.num_districts(), 3);
  EXPECT_EQ(p.assignment(), (std::vector<int>{0, 1, 2, 2}));
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"2", "9", "10"}));

  std::ostringstream out;
  write_plan(out, g, p);
  EXPECT_EQ(out.str(), "precinct_id,district\na,2\nb,9\nc,10\nd,10\n");
}

TEST(PlanCsv, TextLabelsAndQuoting) {
  std::vector<Precinct> precincts{{"x,1", 1.0, 1}, {"y", 1.0, 1}};
  const DualGraph g(std::move(precincts),
                    std::vector<std::pair<std::string, std::string>>{{"x,1", "y"}});
  std::istringstream in("precinct_id,district\r\n\"x,1\",north\r\ny,east\r\n");
  const Plan p = load_plan(in, g);
  EXPECT_EQ(p.assignment(), (std::vector<int>{1, 0}));
  std::stringstream out;
  write_plan(out, g, p);
  EXPECT_EQ(out.str(), "precinct_id,district\n\"x,1\",north\ny,east\n");
  EXPECT_EQ(load_plan(out, g), p);
}

TEST(PlanCsv, Errors) {
  const DualGraph g = path4(1, 1, 1, 1);
  auto load = [&](const std::string& text) {
    std::istringstream in(text);
    return load_plan(in, g);
  };
  EXPECT_THROW(load("id,district\na,1\n"), Error);
  EXPECT_THROW(load("precinct_id,district\nzz,1\n"), Error);
  EXPECT_THROW(load("precinct_id,district\na,1\na,2\n"), Error);
  EXPECT_THROW(load(""), Error);
  // Missing precincts load, then show up as violations.
  const Plan partial = load("precinct_id,district\na,1\nb,1\n");
  const auto v = validate_plan(g, partial);
  EXPECT_EQ(v.size(), 2u);
}

TEST(PlanCsv, RoundTripProperty) {
  Rng rng(13);
  const DualGraph g = grid_state({7, 5, 3});
  for (int trial = 0; trial < 30; ++trial) {
    const Plan p = testing::random_grown_plan(g, 1 + static_cast<int>(rng.below(6)), rng);
    std::stringstream buffer;
    write_plan(buffer, g, p);
    EXPECT_EQ(load_plan(buffer, g).assignment(), p.assignment());
  }
}

}  // namespace
}  // namespace plansim
