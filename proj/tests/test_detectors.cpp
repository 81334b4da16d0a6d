#include <gtest/gtest.h>

#include <random>

#include "thetakit/detectors.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/reference.hpp"

using namespace thetakit;

namespace {

Graph net_graph() {
  return build_graph(6, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

Graph sample(std::mt19937_64& rng, int max_n) {
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  const double p = static_cast<double>(rng() % 1000) / 1000.0;
  return random_graph(n, p, rng());
}

}  // namespace

TEST(FindInduced, Examples) {
  auto hit = find_induced(cycle(5), path(3));
  ASSERT_TRUE(hit.found());
  EXPECT_EQ(hit.witness->map, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(find_induced(complete(4), cycle(4)).status, SearchStatus::none);
  auto c5 = find_induced(petersen(), cycle(5));
  ASSERT_TRUE(c5.found());
  EXPECT_TRUE(is_induced_embedding(petersen(), cycle(5), *c5.witness));
}

TEST(FindInduced, CapIsReported) {
  SearchCaps caps;
  caps.max_vertices = 4;
  EXPECT_EQ(find_induced(cycle(5), path(2), caps).status, SearchStatus::cap_exceeded);
}

TEST(FindInduced, CancellationIsReported) {
  std::stop_source src;
  src.request_stop();
  SearchCaps caps;
  caps.stop = src.get_token();
  EXPECT_EQ(find_induced(cycle(6), path(3), caps).status, SearchStatus::cancelled);
  EXPECT_EQ(find_theta(biclique(2, 3), caps).status, SearchStatus::cancelled);
}

TEST(FindInduced, LeastEmbeddingMatchesOracle) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = sample(rng, 7);
    Graph h = sample(rng, 4);
    auto got = find_induced(g, h);
    auto want = reference::least_embedding(g, h);
    ASSERT_EQ(got.found(), want.has_value()) << "trial " << trial;
    if (want) {
      EXPECT_EQ(got.witness->map, *want);
    }
  }
}

TEST(FindTheta, Examples) {
  auto k23 = find_theta(biclique(2, 3));
  ASSERT_TRUE(k23.found());
  EXPECT_EQ(k23.witness->x, 0);
  EXPECT_EQ(k23.witness->y, 1);
  EXPECT_TRUE(is_theta_witness(biclique(2, 3), *k23.witness));
  EXPECT_EQ(find_theta(complete(5)).status, SearchStatus::none);
  EXPECT_EQ(find_theta(wall(2)).status, SearchStatus::none);

  std::mt19937_64 rng(5);
  Graph w = wall(3);
  for (int i = 0; i < 10; ++i) {
    Graph s = subdivide(w, random_plan(w, 2, rng));
    auto r = find_theta(s);
    ASSERT_TRUE(r.found());
    EXPECT_TRUE(is_theta_witness(s, *r.witness));
  }
}

TEST(FindTheta, WitnessValidatorRejects) {
  Graph g = biclique(2, 3);
  ThetaWitness w{0, 1, {{{0, 2, 1}, {0, 3, 1}, {0, 3, 1}}}};
  EXPECT_FALSE(is_theta_witness(g, w));
  Graph chord = build_graph(5, std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
  EXPECT_FALSE(is_theta_witness(chord, {0, 1, {{{0, 2, 1}, {0, 3, 1}, {0, 4, 1}}}}));
  EXPECT_EQ(find_theta(chord).status, SearchStatus::none);
}

TEST(FindTheta, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1500; ++trial) {
    Graph g = sample(rng, 8);
    auto r = find_theta(g);
    ASSERT_EQ(r.found(), reference::has_theta(g)) << "trial " << trial;
    if (r.found()) {
      EXPECT_TRUE(is_theta_witness(g, *r.witness));
    }
  }
}

TEST(FindPrism, Examples) {
  EXPECT_TRUE(find_prism(prism(2, 2, 2)).found());
  EXPECT_EQ(find_prism(cycle(6)).status, SearchStatus::none);
  Graph w = wall(3);
  std::mt19937_64 rng(9);
  Graph l = line_graph(subdivide(w, random_plan(w, 1, rng))).graph;
  auto r = find_prism(l);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_induced_embedding(l, prism(r.witness->l1, r.witness->l2, r.witness->l3), r.witness->embedding));
}

TEST(FindPrism, EveryThetaLineGraph) {
  for (int a = 2; a <= 3; ++a)
    for (int b = 2; b <= 3; ++b)
      for (int c = 2; c <= 3; ++c) {
        Graph l = prism(a, b, c);
        auto r = find_prism(l);
        ASSERT_TRUE(r.found());
        EXPECT_TRUE(is_induced_embedding(l, prism(r.witness->l1, r.witness->l2, r.witness->l3), r.witness->embedding));
      }
}

TEST(FindPrism, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 600; ++trial) {
    Graph g = sample(rng, 9);
    auto r = find_prism(g);
    ASSERT_EQ(r.found(), reference::has_prism(g)) << "trial " << trial;
  }
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(complete(4)).size, 4);
  EXPECT_EQ(clique_number(petersen()).size, 2);
  EXPECT_EQ(reference::clique_number(petersen()), 2);
  EXPECT_EQ(clique_number(cycle(5)).size, 2);
  EXPECT_EQ(clique_number(Graph(0)).size, 0);
  EXPECT_EQ(clique_number(Graph(3)).size, 1);
}

TEST(CliqueNumber, AgreesWithOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = sample(rng, 10);
    auto r = clique_number(g);
    EXPECT_EQ(r.size, reference::clique_number(g));
    EXPECT_TRUE(is_clique(g, r.witness));
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.size);
  }
}

TEST(FindBiclique, Examples) {
  EXPECT_TRUE(find_biclique(biclique(3, 3), 3).found());
  EXPECT_EQ(find_biclique(theta_graph(3, 3, 3), 3).status, SearchStatus::none);
  EXPECT_EQ(find_biclique(cycle(6), 2).status, SearchStatus::none);
  EXPECT_TRUE(find_biclique(cycle(4), 2).found());
}

TEST(FindConstellation, Examples) {
  auto k23 = find_constellation(biclique(2, 3), 2, 3);
  ASSERT_TRUE(k23.found());
  EXPECT_TRUE(validate_constellation_witness(biclique(2, 3), *k23.witness, 2, 3));
  auto c5 = find_constellation(cycle(5), 1, 1);
  ASSERT_TRUE(c5.found());
  EXPECT_TRUE(validate_constellation_witness(cycle(5), *c5.witness, 1, 1));
  EXPECT_EQ(find_constellation(complete(4), 2, 1).status, SearchStatus::none);
}

TEST(FindConstellation, GeneratedOnesAreFound) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> lengths;
    for (int k = 0; k < 3; ++k) lengths.push_back(1 + static_cast<int>(rng() % 3));
    std::vector<std::vector<std::vector<int>>> attach(2);
    for (auto& row : attach)
      for (int len : lengths) row.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(len))});
    auto c = constellation(2, 3, lengths, attach);
    auto r = find_constellation(c.graph, 2, 3);
    ASSERT_TRUE(r.found());
    EXPECT_TRUE(validate_constellation_witness(c.graph, *r.witness, 2, 3));
    EXPECT_TRUE(find_theta(c.graph).found());
  }
}

TEST(ThreeInATree, Examples) {
  auto p = three_in_a_tree(path(5), {0, 2, 4});
  ASSERT_TRUE(p.found());
  EXPECT_EQ(p.witness->vertices, (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_TRUE(is_tree_witness(path(5), {0, 2, 4}, *p.witness));

  EXPECT_EQ(three_in_a_tree(net_graph(), {3, 4, 5}).status, SearchStatus::none);
  EXPECT_FALSE(reference::has_three_in_a_tree(net_graph(), {3, 4, 5}));
  EXPECT_TRUE(is_constricted(net_graph(), {3, 4, 5}));

  EXPECT_TRUE(three_in_a_tree(biclique(1, 3), {1, 2, 3}).found());
  EXPECT_THROW(three_in_a_tree(path(5), {0, 2}), InvalidInput);
  EXPECT_THROW(three_in_a_tree(path(5), {0, 1, 3}), InvalidInput);
}

TEST(ThreeInATree, AgreesWithOracle) {
  std::mt19937_64 rng(55);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 600; ++trial) {
    Graph g = sample(rng, 9);
    auto stable = maximum_stable_set(g).witness;
    if (stable.size() < 3) continue;
    ++checked;
    auto r = three_in_a_tree(g, stable);
    ASSERT_EQ(r.found(), reference::has_three_in_a_tree(g, stable)) << "trial " << trial;
    if (r.found()) {
      EXPECT_TRUE(is_tree_witness(g, stable, *r.witness));
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(WallLineGraphs, Examples) {
  auto tri_free = excludes_wall_line_graphs(cycle(7), 3);
  EXPECT_TRUE(tri_free.excluded);
  EXPECT_FALSE(tri_free.partial);

  Graph l3 = line_graph(wall(3)).graph;
  auto self = excludes_wall_line_graphs(l3, 3);
  EXPECT_FALSE(self.excluded);
  ASSERT_TRUE(self.witness.has_value());

  auto small = excludes_wall_line_graphs(biclique(2, 3), 3);
  EXPECT_TRUE(small.excluded);
  EXPECT_EQ(small.vertex_budget, 5);
}

TEST(WallLineGraphs, FindsSubdividedCopy) {
  Graph w = wall(2);
  SubdivisionPlan plan = uniform_plan(w, 0);
  plan.begin()->second = 2;
  Graph host = line_graph(subdivide(w, plan)).graph;
  auto r = excludes_wall_line_graphs(host, 2);
  EXPECT_FALSE(r.excluded);
}

TEST(MaxPathFan, Examples) {
  EXPECT_EQ(max_path_fan(biclique(1, 4), 0, {1, 2, 3, 4}), 4);
  EXPECT_EQ(max_path_fan(path(3), 1, {0, 2}), 2);
  EXPECT_EQ(max_path_fan(biclique(2, 3), 0, {1}), 1);
  EXPECT_THROW(max_path_fan(path(3), 1, {1}), InvalidInput);
}
