// Copyright 2026 The rdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rdom/graph.hpp"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rdom/errors.hpp"
#include "rdom/families.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

namespace rdom {
namespace {

using ::rdom::testing::ext;
using ::rdom::testing::load_fixture;
using ::testing::ElementsAre;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kBadSpec;
}

TEST(BuildGraphTest, Star) {
  Graph g = build_graph(3, std::vector<Edge>{{0, 1}, {0, 2}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_EQ(g.degree(2), 1u);
}

TEST(BuildGraphTest, EmptyGraph) {
  Graph g = build_graph(0, {});
  EXPECT_EQ(g.order(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraphTest, DuplicateEdgesCollapse) {
  Graph g = build_graph(4, std::vector<Edge>{{0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THAT(g.edges(), ElementsAre(Edge{0, 1}));
}

TEST(BuildGraphTest, Errors) {
  EXPECT_EQ(code_of([] { build_graph(2, std::vector<Edge>{{0, 2}}); }),
            ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { build_graph(2, std::vector<Edge>{{1, 1}}); }),
            ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([] { build_graph(2, {}, {5, 5}); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { build_graph(2, {}, {-1, 3}); }), ErrorCode::kOutOfRange);
}

TEST(BuildGraphTest, ExternalIds) {
  Graph g = build_graph(2, std::vector<Edge>{{0, 1}}, {10, 4});
  EXPECT_EQ(g.external_id(0), 10);
  EXPECT_EQ(g.internal_id(4), Vertex{1});
  EXPECT_EQ(g.internal_id(7), std::nullopt);
}

TEST(OpenNeighborhoodTest, Examples) {
  Graph p3 = generate(FamilySpec::Path(3));
  EXPECT_THAT(open_neighborhood(p3, VertexSet(3, {0, 2})).to_vector(), ElementsAre(1));
  Graph k4 = generate(FamilySpec::Complete(4));
  EXPECT_THAT(open_neighborhood(k4, VertexSet(4, {0})).to_vector(), ElementsAre(1, 2, 3));
  Graph ten_vertex = load_fixture("ten_vertex.txt").graph;
  VertexSet s(ten_vertex.order(), {ext(ten_vertex, 8)});
  VertexSet expected(ten_vertex.order());
  for (Vertex v : ext(ten_vertex, {2, 4, 5, 7, 9})) expected.insert(v);
  EXPECT_EQ(open_neighborhood(ten_vertex, s), expected);
}

TEST(OpenNeighborhoodTest, DisjointFromSet) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(1 + trial % 14, 0.4, rng());
    VertexSet s(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 2) s.insert(v);
    VertexSet n = open_neighborhood(g, s);
    EXPECT_FALSE(n.intersects(s));
    for (Vertex v : n) EXPECT_TRUE(g.neighbors(v).intersects(s));
  }
}

TEST(BallTest, Examples) {
  Graph p21 = generate(FamilySpec::Path(21));
  Graph b = ball(p21, 10, 3);
  EXPECT_EQ(b.order(), 7u);
  EXPECT_EQ(b.edge_count(), 6u);
  EXPECT_EQ(max_degree(b), 2u);
  EXPECT_TRUE(is_connected(b));
  EXPECT_EQ(b.external_id(0), 7);

  Graph k4 = generate(FamilySpec::Complete(4));
  EXPECT_EQ(ball(k4, 2, 0).order(), 1u);
  Graph c6 = generate(FamilySpec::Cycle(6));
  EXPECT_EQ(ball(c6, 0, 10), c6);
  EXPECT_EQ(code_of([&] { ball(c6, 6, 1); }), ErrorCode::kOutOfRange);
}

TEST(BallTest, MonotoneAndStabilizesAtComponent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_graph(2 + trial % 12, 0.25, rng());
    Vertex root = rng() % g.order();
    auto dist = bfs_distances(g, root);
    std::size_t component = 0;
    for (const auto& d : dist) component += d.has_value();
    std::size_t previous = 0;
    for (std::size_t r = 0; r <= g.order(); ++r) {
      std::size_t size = ball(g, root, r).order();
      EXPECT_GE(size, previous);
      previous = size;
    }
    EXPECT_EQ(previous, component);
  }
}

TEST(MaxDegreeTest, Examples) {
  EXPECT_EQ(max_degree(generate(FamilySpec::Star(4))), 4u);
  EXPECT_EQ(max_degree(generate(FamilySpec::Cycle(9))), 2u);
  Graph ten_vertex = load_fixture("ten_vertex.txt").graph;
  EXPECT_EQ(max_degree(ten_vertex), 5u);
  EXPECT_EQ(ten_vertex.degree(ext(ten_vertex, 8)), 5u);
  EXPECT_EQ(code_of([] { max_degree(build_graph(0, {})); }), ErrorCode::kEmptyGraph);
}

TEST(InducedSubgraphTest, Examples) {
  Graph k4 = generate(FamilySpec::Complete(4));
  Graph edge = induced_subgraph(k4, VertexSet(4, {0, 1}));
  EXPECT_EQ(edge.order(), 2u);
  EXPECT_EQ(edge.edge_count(), 1u);

  Graph p5 = generate(FamilySpec::Path(5));
  Graph ends = induced_subgraph(p5, VertexSet(5, {0, 4}));
  EXPECT_EQ(ends.order(), 2u);
  EXPECT_EQ(ends.edge_count(), 0u);
  EXPECT_EQ(ends.external_id(1), 4);
}

TEST(InducedSubgraphTest, K66RightLabelingGivesK26) {
  // Keeping the two 2s and six 0s of the two-2 labeling leaves K_{2,6}.
  auto parsed = load_fixture("k6_6_two.txt");
  const Graph& g = parsed.graph;
  VertexSet keep(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if ((*parsed.labeling)[v] != 1) keep.insert(v);
  Graph h = induced_subgraph(g, keep);
  ASSERT_EQ(h.order(), 8u);
  EXPECT_EQ(h.edge_count(), 12u);
  std::vector<std::size_t> degrees;
  for (Vertex v = 0; v < h.order(); ++v) degrees.push_back(h.degree(v));
  std::sort(degrees.begin(), degrees.end());
  EXPECT_THAT(degrees, ElementsAre(2, 2, 2, 2, 2, 2, 6, 6));
  // Bipartite with hubs on one side: no two degree-2 vertices are adjacent.
  for (auto [u, v] : h.edges()) EXPECT_NE(h.degree(u), h.degree(v));
}

TEST(InducedSubgraphTest, FullKeepIsIdentity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_graph(1 + trial % 12, 0.5, rng());
    EXPECT_EQ(induced_subgraph(g, g.all_vertices()), g);
  }
}

TEST(GraphTest, AdjacencyIsSymmetric) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    for (Vertex u = 0; u < g.order(); ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.order(); ++v)
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

TEST(GraphTest, DisconnectedDistancesAreUnreachable) {
  Graph g = build_graph(4, std::vector<Edge>{{0, 1}, {2, 3}});
  auto d = bfs_distances(g, 0);
  EXPECT_EQ(d[1], 1u);
  EXPECT_FALSE(d[2].has_value());
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(ball(g, 0, 5).order(), 2u);
}

}  // namespace
}  // namespace rdom
