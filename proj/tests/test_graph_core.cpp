#include <gtest/gtest.h>

#include <random>

#include "thetakit/generators.hpp"
#include "thetakit/graph.hpp"

using namespace thetakit;

namespace {

Graph k23() { return biclique(2, 3); }  // {0,1} | {2,3,4}

}  // namespace

TEST(BuildGraph, EdgelessAndDuplicates) {
  Graph g = build_graph(3, std::vector<std::pair<Vertex, Vertex>>{});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 0u);

  Graph h = build_graph(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}});
  EXPECT_EQ(h.size(), 1u);
  EXPECT_TRUE(h.adjacent(0, 1));
}

TEST(BuildGraph, FiveCycle) {
  Graph g = build_graph(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(g, cycle(5));
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(BuildGraph, RejectsBadPairs) {
  EXPECT_THROW(build_graph(2, std::vector<std::pair<Vertex, Vertex>>{{0, 2}}), InvalidInput);
  try {
    build_graph(3, std::vector<std::pair<Vertex, Vertex>>{{1, 1}});
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos);
  }
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(cycle(5), {0, 1, 2}).graph, path(3));
  EXPECT_EQ(induced_subgraph(complete(4), {0, 2, 3}).graph, complete(3));
  // Outer ring of the Petersen labelling.
  auto outer = induced_subgraph(petersen(), {0, 1, 2, 3, 4});
  EXPECT_EQ(outer.graph, cycle(5));
  EXPECT_EQ(outer.to_host, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_THROW(induced_subgraph(cycle(5), {7}), InvalidInput);
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  Graph g = random_graph(9, 0.4, 17);
  std::vector<Vertex> all(9);
  for (int i = 0; i < 9; ++i) all[static_cast<std::size_t>(i)] = i;
  EXPECT_EQ(induced_subgraph(g, VertexSet(all)).graph, g);
}

TEST(Predicates, Anticomplete) {
  Graph c5 = cycle(5);
  EXPECT_TRUE(are_anticomplete(c5, {0}, {2}));
  EXPECT_FALSE(are_anticomplete(c5, {0}, {1}));
  EXPECT_FALSE(are_anticomplete(c5, {0}, {0}));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(8, 0.3, rng());
    VertexSet x{static_cast<Vertex>(rng() % 8), static_cast<Vertex>(rng() % 8)};
    VertexSet y{static_cast<Vertex>(rng() % 8)};
    EXPECT_EQ(are_anticomplete(g, x, y), are_anticomplete(g, y, x));
  }
}

TEST(Predicates, StableSets) {
  EXPECT_TRUE(is_stable_set(k23(), {2, 3, 4}));
  EXPECT_FALSE(is_stable_set(complete(4), {1, 3}));
  EXPECT_TRUE(is_stable_set(complete(4), {}));
}

TEST(Predicates, InducedPath) {
  Graph c5 = cycle(5);
  EXPECT_TRUE(is_induced_path(c5, {0, 1, 2}, 0, 2));
  EXPECT_FALSE(is_induced_path(c5, {0, 1, 2, 3, 4}, 0, 4));
  EXPECT_TRUE(is_induced_path(k23(), {0, 2, 1}, 0, 1));
  EXPECT_FALSE(is_induced_path(c5, {0, 1, 1, 2}, 0, 2));
}

TEST(PathFamilies, Validation) {
  EXPECT_TRUE(validate_path_family(k23(), {0, 1, {{0, 2, 1}, {0, 3, 1}, {0, 4, 1}}}));
  EXPECT_TRUE(validate_path_family(cycle(5), {0, 2, {{0, 1, 2}, {0, 4, 3, 2}}}));

  GraphBuilder b(5);
  for (Vertex side : {2, 3, 4}) b.add_edge(0, side).add_edge(1, side);
  b.add_edge(2, 3);
  Graph g = b.build();
  // Adjacent interiors are fine for internal disjointness.
  EXPECT_TRUE(validate_path_family(g, {0, 1, {{0, 2, 1}, {0, 3, 1}}}));
  auto v = validate_path_family(g, {0, 1, {{0, 2, 1}, {0, 2, 1}}});
  EXPECT_FALSE(v);
  EXPECT_NE(v.reason.find("shares interior vertex 2"), std::string::npos);

  EXPECT_FALSE(validate_path_family(cycle(5), {0, 1, {{0, 1}}}));
}

TEST(ABTree, Examples) {
  Graph one(1);
  EXPECT_TRUE(is_ab_tree(one, {{0}, 0, 5, 1, {}}));

  Graph star = biclique(1, 3);
  EXPECT_TRUE(is_ab_tree(star, {{0, 1, 2, 3}, 0, 3, 2, {{1, 0}, {2, 0}, {3, 0}}}));

  Graph p3 = path(3);
  EXPECT_FALSE(is_ab_tree(p3, {{0, 1, 2}, 0, 2, 2, {{1, 0}, {2, 1}}}));
}

TEST(ABTree, RejectsBrokenCertificates) {
  auto t = ab_tree_graph(3, 3);
  ASSERT_TRUE(is_ab_tree(t.graph, t.cert));
  auto missing = t.cert;
  missing.parent.erase(missing.parent.begin());
  EXPECT_FALSE(is_ab_tree(t.graph, missing));

  // Extra chord turns the tree into a non-tree.
  GraphBuilder b(t.graph.order());
  for (auto e : t.graph.edges()) b.add_edge(e.u, e.v);
  b.add_edge(4, 5);
  EXPECT_FALSE(is_ab_tree(b.build(), t.cert));

  EXPECT_FALSE(is_ab_tree(path(3), {{0, 1, 2}, 1, 1, 3, {{0, 1}, {2, 1}}}));
}

TEST(ABTree, OrderFormula) {
  for (int a = 2; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      auto t = ab_tree_graph(a, b);
      ASSERT_TRUE(is_ab_tree(t.graph, t.cert)) << a << "," << b;
      long long expect = 1;
      if (b >= 2) {
        long long pow = 1;
        long long sum = 0;
        for (int i = 0; i <= b - 2; ++i) {
          sum += pow;
          pow *= (a - 1);
        }
        expect = 1 + a * sum;
      }
      EXPECT_EQ(static_cast<long long>(t.cert.vertices.size()), expect);
    }
  }
}

TEST(DigraphType, Basics) {
  Digraph d = Digraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_TRUE(d.has_arc(1, 0));
  EXPECT_EQ(d.out_degree(1), 2);
  EXPECT_EQ(d.underlying().size(), 2u);
  EXPECT_THROW(Digraph::from_arcs(2, {{1, 1}}), InvalidInput);
}

TEST(Components, ForestsAndTrees) {
  EXPECT_TRUE(is_forest(path(5)));
  EXPECT_FALSE(is_forest(cycle(4)));
  Graph g = build_graph(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {3, 4}});
  auto comps = components(g, g.full_set());
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_TRUE(comps[0].test(1));
  EXPECT_TRUE(comps[1].test(2));
  EXPECT_TRUE(induces_tree(g, comps[2]));
}
