#include "cayley/solution_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {
namespace {

Triple tri(long s, long a, long b, long c) { return Triple(s, {a, b, c}); }

TEST(SolutionGraphTest, IsolatedPair) {
  const SolutionGraph g = solution_graph(tri(12, 13, 20, 15), 40);
  ASSERT_EQ(g.vertices.size(), 2u);
  EXPECT_EQ(g.vertices[0], tri(12, 13, 15, 20));
  EXPECT_EQ(g.vertices[1], tri(12, 15, 20, 37));
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0], (GraphEdge{0, 1, Component::kA}));
  EXPECT_TRUE(g.adjacent(tri(12, 15, 20, 37), tri(12, 13, 15, 20)));
}

TEST(SolutionGraphTest, ChainSurfaceThree) {
  const SolutionGraph g = solution_graph(tri(3, 3, 6, 6), 300);
  const std::vector<Triple> expected{tri(3, 3, 6, 6), tri(3, 6, 6, 21),
                                     tri(3, 6, 21, 78), tri(3, 6, 78, 291)};
  EXPECT_EQ(g.vertices, expected);
  EXPECT_EQ(g.edges.size(), 3u);
  for (std::size_t i = 0; i + 1 < expected.size(); ++i) {
    EXPECT_TRUE(g.adjacent(expected[i], expected[i + 1]));
  }
  EXPECT_FALSE(g.adjacent(expected[0], expected[2]));
  EXPECT_FALSE(g.frontier.empty());
}

TEST(SolutionGraphTest, SingleVertex) {
  const SolutionGraph g = solution_graph(tri(7, 7, 1, 1), 100);
  ASSERT_EQ(g.vertices.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_TRUE(g.frontier.empty());
}

TEST(SolutionGraphTest, ChainNeighborsWithinMillion) {
  const Triple seed = tri(3, 21, 4053, 291);
  const SolutionGraph g = solution_graph(seed, 1'000'000);
  EXPECT_TRUE(g.find(seed).has_value());
  EXPECT_TRUE(g.adjacent(seed, tri(3, 21, 4053, 56451)));
  EXPECT_TRUE(g.adjacent(seed, tri(3, 291, 4053, 786261)));
  for (const Triple& v : g.vertices) {
    EXPECT_TRUE(is_solution(v));
    EXPECT_TRUE(v.is_canonical());
    EXPECT_LE(v.max(), 1'000'000);
  }
  EXPECT_TRUE(std::is_sorted(g.vertices.begin(), g.vertices.end()));
  for (const GraphEdge& e : g.edges) {
    EXPECT_LT(e.from, e.to);
    bool found = false;
    for (const Triple& n : neighbors(g.vertices[e.from])) {
      found = found || n.canonical() == g.vertices[e.to];
    }
    EXPECT_TRUE(found);
  }
  for (const FrontierMarker& f : g.frontier) EXPECT_GT(f.value, 1'000'000);
}

TEST(SolutionGraphTest, SameComponentFromAnySeed) {
  const SolutionGraph g = solution_graph(tri(3, 3, 6, 6), 20000);
  for (const Triple& v : g.vertices) {
    EXPECT_EQ(solution_graph(v, 20000).vertices, g.vertices);
  }
}

TEST(SolutionGraphTest, Errors) {
  EXPECT_THROW(solution_graph(tri(3, 21, 4053, 291), 1000), Error);
  EXPECT_THROW(solution_graph(tri(3, 21, 78, 291), 1000), Error);
  try {
    solution_graph(tri(1, 1, 2, 2), 1'000'000, 3);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(SolutionGraphTest, Exports) {
  const SolutionGraph g = solution_graph(tri(12, 13, 15, 20), 40);
  const std::string dot = to_dot(g);
  EXPECT_EQ(dot.rfind("graph cayley_s12 {", 0), 0u);
  EXPECT_NE(dot.find("\"13,15,20\""), std::string::npos);
  std::ostringstream json;
  write_json(json, g);
  EXPECT_EQ(json.str().rfind("{\"s\":12,\"bound\":40,\"vertices\":[", 0), 0u);
  EXPECT_NE(json.str().find("\"edges\":[[0,1,\"a\"]]"), std::string::npos);
}

}  // namespace
}  // namespace cayley
