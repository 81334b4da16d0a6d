#include <gtest/gtest.h>

#include <random>

#include "thetakit/extraction.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/reference.hpp"

using namespace thetakit;

namespace {

Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng) < p) arcs.emplace_back(u, v);
  return Digraph::from_arcs(n, arcs);
}

int count_low(const Digraph& d, int r) {
  int c = 0;
  for (Vertex v = 0; v < d.order(); ++v) c += d.out_degree(v) <= r;
  return c;
}

int count_high(const Digraph& d, int k) {
  int c = 0;
  for (Vertex v = 0; v < d.order(); ++v) c += d.out_degree(v) >= k;
  return c;
}

// x = 0, y = 1. Member paths x-p_m-w_m-y, each p_m adjacent to the second
// interior vertex of 2a^2 private paths x-c1-c2-c3-c4-y; inside a group every
// c2 sees the c4 of every other path. Grows an (a,3)-tree with a = q and
// r = 2a.
PathBundle nested_instance(int a) {
  const int r = 2 * a;
  const int per = a * r;
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::pair<Vertex, Vertex>> edges;
  int n = 2;
  auto add_path = [&](int interior) {
    std::vector<Vertex> p{0};
    for (int k = 0; k < interior; ++k) p.push_back(n++);
    p.push_back(1);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) edges.emplace_back(p[k], p[k + 1]);
    paths.push_back(p);
    return p;
  };
  std::vector<std::vector<std::vector<Vertex>>> groups(static_cast<std::size_t>(a));
  std::vector<Vertex> tips;
  for (int m = 0; m < a; ++m) tips.push_back(add_path(2)[1]);
  for (int m = 0; m < a; ++m)
    for (int j = 0; j < per; ++j) groups[static_cast<std::size_t>(m)].push_back(add_path(4));
  for (int m = 0; m < a; ++m) {
    const auto& grp = groups[static_cast<std::size_t>(m)];
    for (std::size_t j = 0; j < grp.size(); ++j) {
      edges.emplace_back(tips[static_cast<std::size_t>(m)], grp[j][2]);
      for (std::size_t k = 0; k < grp.size(); ++k)
        if (k != j) edges.emplace_back(grp[j][2], grp[k][4]);
    }
  }
  return {build_graph(n, edges), PathFamily{0, 1, paths}};
}

Thresholds nested_thresholds(int a) {
  return Thresholds::fixed(1).set("q", TowerInt(a)).set("r_paths", TowerInt(2 * a)).set("low_stable", TowerInt(1000));
}

PathBundle random_bundle(std::mt19937_64& rng) {
  std::vector<int> lens;
  const int k = 3 + static_cast<int>(rng() % 7);
  for (int j = 0; j < k; ++j) lens.push_back(1 + static_cast<int>(rng() % 5));
  return path_bundle(lens, static_cast<double>(rng() % 60) / 100.0, rng());
}

}  // namespace

TEST(RamseyExtract, Examples) {
  auto k4 = ramsey_extract(complete(4), 3, 2);
  ASSERT_TRUE(std::holds_alternative<Clique>(k4));
  EXPECT_EQ(std::get<Clique>(k4).vertices.size(), 3u);

  auto e5 = ramsey_extract(Graph(5), 2, 4);
  ASSERT_TRUE(std::holds_alternative<StableSet>(e5));
  EXPECT_EQ(std::get<StableSet>(e5).vertices.size(), 4u);
  EXPECT_TRUE(is_stable_set(Graph(5), std::get<StableSet>(e5).vertices));

  auto c5 = ramsey_extract(cycle(5), 3, 3);
  ASSERT_TRUE(std::holds_alternative<ThresholdUnmet>(c5));
  EXPECT_EQ(std::get<ThresholdUnmet>(c5).which, "ramsey");
  EXPECT_EQ(std::get<ThresholdUnmet>(c5).available, 5);
  EXPECT_EQ(std::get<ThresholdUnmet>(c5).required.exact(), mpz_class(6));
  EXPECT_THROW(ramsey_extract(cycle(5), 0, 2), InvalidInput);
}

TEST(RamseyExtract, NeverUnmetAtBound) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10000; ++trial) {
    const int t = 1 + static_cast<int>(rng() % 3);
    const int alpha = 1 + static_cast<int>(rng() % 3);
    const int n = static_cast<int>(detail::binomial(t + alpha - 2, t - 1).exact()->get_si());
    Graph g = random_graph(n, static_cast<double>(rng() % 1000) / 1000.0, rng());
    auto r = ramsey_extract(g, t, alpha);
    ASSERT_FALSE(std::holds_alternative<ThresholdUnmet>(r)) << "trial " << trial;
    if (const auto* c = std::get_if<Clique>(&r)) {
      EXPECT_TRUE(is_clique(g, c->vertices));
      EXPECT_EQ(static_cast<int>(c->vertices.size()), t);
    } else {
      const auto& s = std::get<StableSet>(r).vertices;
      EXPECT_TRUE(is_stable_set(g, s));
      EXPECT_EQ(static_cast<int>(s.size()), alpha);
    }
  }
}

TEST(EhExtract, Examples) {
  auto k33 = eh_extract(biclique(3, 3), 2, 3, 4);
  ASSERT_TRUE(std::holds_alternative<Biclique>(k33));
  EXPECT_TRUE(is_induced_biclique(biclique(3, 3), std::get<Biclique>(k33), 2));

  auto k5 = eh_extract(complete(5), 2, 4, 2);
  ASSERT_TRUE(std::holds_alternative<Clique>(k5));
  EXPECT_EQ(std::get<Clique>(k5).vertices.size(), 4u);

  auto e8 = eh_extract(Graph(8), 2, 2, 5);
  ASSERT_TRUE(std::holds_alternative<StableSet>(e8));
  EXPECT_EQ(std::get<StableSet>(e8).vertices.size(), 5u);

  SearchCaps caps;
  caps.max_vertices = 4;
  EXPECT_THROW(eh_extract(Graph(8), 2, 2, 5, {}, nullptr, caps), CapExceeded);
}

TEST(DigraphStable, Examples) {
  Digraph c4 = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto s = digraph_stable(c4, 1, 2);
  ASSERT_TRUE(std::holds_alternative<StableSet>(s));
  EXPECT_EQ(std::get<StableSet>(s).vertices, (VertexSet{0, 2}));

  Digraph k3 = Digraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  auto u = digraph_stable(k3, 2, 2);
  ASSERT_TRUE(std::holds_alternative<ThresholdUnmet>(u));
  EXPECT_EQ(std::get<ThresholdUnmet>(u).available, 3);

  auto iso = digraph_stable(Digraph::from_arcs(4, {}), 1, 2);
  ASSERT_TRUE(std::holds_alternative<StableSet>(iso));
  EXPECT_EQ(std::get<StableSet>(iso).vertices.size(), 2u);
}

TEST(DigraphStable, AllDigraphsOnFourVertices) {
  const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int checked = 0;
  for (int code = 0; code < 4096; ++code) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const int state = (code >> (2 * k)) & 3;
      if (state & 1) arcs.push_back(pairs[k]);
      if (state & 2) arcs.emplace_back(pairs[k].second, pairs[k].first);
    }
    Digraph d = Digraph::from_arcs(4, arcs);
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; s <= 2; ++s) {
        if (count_low(d, r) < 2 * r * s) continue;
        ++checked;
        auto out = digraph_stable(d, r, s);
        ASSERT_TRUE(std::holds_alternative<StableSet>(out)) << "code " << code;
        const auto& st = std::get<StableSet>(out).vertices;
        EXPECT_EQ(static_cast<int>(st.size()), s);
        EXPECT_TRUE(is_stable_set(d.underlying(), st));
        for (Vertex v : st) EXPECT_LE(d.out_degree(v), r);
      }
  }
  EXPECT_GT(checked, 4096);
}

TEST(DigraphStable, SeededDigraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Digraph d = random_digraph(n, static_cast<double>(rng() % 100) / 100.0, rng);
    const int r = 1 + static_cast<int>(rng() % 2);
    const int s = 1 + static_cast<int>(rng() % 2);
    auto out = digraph_stable(d, r, s);
    EXPECT_EQ(std::holds_alternative<StableSet>(out), reference::has_low_outdegree_stable(d, r, s)) << "trial " << trial;
    if (count_low(d, r) >= 2 * r * s) {
      ASSERT_TRUE(std::holds_alternative<StableSet>(out)) << "trial " << trial;
    }
  }
}

TEST(DigraphStable, LargerTargetsCanFail) {
  // Two directed triangles: six vertices of out-degree 1, but every stable set
  // of the underlying graph has at most two vertices.
  Digraph d = Digraph::from_arcs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(count_low(d, 1), 6);
  auto out = digraph_stable(d, 1, 3);
  ASSERT_TRUE(std::holds_alternative<ThresholdUnmet>(out));
  EXPECT_EQ(reference::stability_number(d.underlying()), 2);
}

TEST(DigraphFanout, Examples) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex k = 0; k < 4; ++k) {
    arcs.emplace_back(0, 2 + k);
    arcs.emplace_back(1, 6 + k);
  }
  Digraph d = Digraph::from_arcs(10, arcs);
  auto out = digraph_fanout(d, 1, 2, 2);
  ASSERT_TRUE(std::holds_alternative<Fanout>(out));
  EXPECT_EQ(std::get<Fanout>(out).set, (VertexSet{0, 1}));
  EXPECT_TRUE(validate_fanout(d, 1, 2, 2, std::get<Fanout>(out)));

  Digraph one = Digraph::from_arcs(3, {{2, 0}});
  auto single = digraph_fanout(one, 1, 1, 1);
  ASSERT_TRUE(std::holds_alternative<Fanout>(single));
  EXPECT_EQ(std::get<Fanout>(single).set, (VertexSet{2}));

  auto none = digraph_fanout(Digraph::from_arcs(4, {}), 1, 1, 1);
  ASSERT_TRUE(std::holds_alternative<ThresholdUnmet>(none));
  EXPECT_EQ(std::get<ThresholdUnmet>(none).available, 0);
}

TEST(DigraphFanout, ValidatorRejects) {
  Digraph d = Digraph::from_arcs(4, {{0, 2}, {1, 2}, {0, 3}});
  Fanout bad{VertexSet{0, 1}, {{VertexSet{0, 1}, {VertexSet{2}, VertexSet{2}}}}};
  EXPECT_FALSE(validate_fanout(d, 2, 1, 2, bad));
  Fanout good{VertexSet{0, 1}, {{VertexSet{0, 1}, {VertexSet{3}, VertexSet{2}}}}};
  EXPECT_TRUE(validate_fanout(d, 2, 1, 2, good));
}

TEST(DigraphFanout, SeededDigraphs) {
  std::mt19937_64 rng(29);
  int guaranteed = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Digraph d = random_digraph(n, static_cast<double>(rng() % 100) / 100.0, rng);
    const int q = 1 + static_cast<int>(rng() % 2);
    const int r = 1 + static_cast<int>(rng() % 2);
    const int s = 1 + static_cast<int>(rng() % 2);
    auto out = digraph_fanout(d, q, r, s);
    if (const auto* f = std::get_if<Fanout>(&out)) {
      EXPECT_TRUE(validate_fanout(d, q, r, s, *f)) << "trial " << trial;
    }
    if (n <= 7) {
      EXPECT_EQ(std::holds_alternative<Fanout>(out), reference::has_fanout_set(d, q, r, s)) << "trial " << trial;
    }
    if (count_high(d, q * r) >= 2 * q * r * s) {
      ++guaranteed;
      ASSERT_TRUE(std::holds_alternative<Fanout>(out)) << "trial " << trial;
    }
  }
  EXPECT_GT(guaranteed, 300);
}

TEST(AnticompleteFamily, Examples) {
  std::vector<VertexSet> singles{{0}, {1}, {2}};
  auto e = anticomplete_family(Graph(3), singles, 3, 2, 3, Thresholds::fixed(1));
  ASSERT_TRUE(std::holds_alternative<AnticompleteFamily>(e));
  EXPECT_EQ(std::get<AnticompleteFamily>(e).indices, (std::vector<int>{0, 1, 2}));

  Graph two = build_graph(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
  std::vector<VertexSet> edges{{0, 1}, {2, 3}};
  auto f = anticomplete_family(two, edges, 2, 2, 3, Thresholds::fixed(1));
  ASSERT_TRUE(std::holds_alternative<AnticompleteFamily>(f));
  EXPECT_TRUE(validate_anticomplete_family(two, edges, std::get<AnticompleteFamily>(f), 2));

  // The two sides of K_{2,2} are complete to each other.
  std::vector<VertexSet> sides{{0, 1}, {2, 3}};
  auto k = anticomplete_family(biclique(2, 2), sides, 2, 2, 3, Thresholds::fixed(1));
  ASSERT_TRUE(std::holds_alternative<Biclique>(k));
  EXPECT_TRUE(is_induced_biclique(biclique(2, 2), std::get<Biclique>(k), 2));
}

TEST(AnticompleteFamily, Preconditions) {
  EXPECT_THROW(anticomplete_family(Graph(3), {{0, 1}, {1, 2}}, 2, 2, 2), InvalidInput);
  EXPECT_THROW(anticomplete_family(Graph(3), {{0}, {}}, 2, 2, 2), InvalidInput);
  EXPECT_THROW(anticomplete_family(Graph(3), {{0}, {5}}, 2, 2, 2), InvalidInput);
}

TEST(AnticompleteFamily, OneEdgeGivesSmallBiclique) {
  Graph g = build_graph(3, std::vector<std::pair<Vertex, Vertex>>{{1, 2}});
  auto out = anticomplete_family(g, {{0}, {1}, {2}}, 3, 1, 3, Thresholds::fixed(1));
  ASSERT_TRUE(std::holds_alternative<Biclique>(out));
  EXPECT_TRUE(is_induced_biclique(g, std::get<Biclique>(out), 1));
}

TEST(AnticompleteFamily, PairsDescentFindsBiclique) {
  // Pairs (x_i, y_i) with x_i y_j an edge exactly when i < j: Gamma is edgeless
  // and Gamma' complete, so the descent must return K_{2,2}.
  const int m = 6;
  GraphBuilder b(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) b.add_edge(2 * i, 2 * j + 1);
  Graph g = b.build();
  std::vector<VertexSet> pairs;
  for (int i = 0; i < m; ++i) pairs.push_back({2 * i, 2 * i + 1});
  ExtractionTrace tr;
  auto out = anticomplete_family(g, pairs, 3, 2, 5, Thresholds::fixed(1), &tr);
  ASSERT_TRUE(std::holds_alternative<Biclique>(out));
  EXPECT_TRUE(is_induced_biclique(g, std::get<Biclique>(out), 2));
  EXPECT_NE(std::find(tr.steps.begin(), tr.steps.end(), "anticomplete: Gamma' descent found K_{s,s}"), tr.steps.end());
}

TEST(AnticompleteFamily, SoundAgainstOracle) {
  std::mt19937_64 rng(31);
  int families = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 20);
    Graph g = random_graph(n, static_cast<double>(rng() % 40) / 100.0, rng());
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexSet> xs;
    for (std::size_t at = 0; at < perm.size() && xs.size() < 12;) {
      const std::size_t len = std::min<std::size_t>(1 + rng() % 3, perm.size() - at);
      xs.emplace_back(std::vector<Vertex>(perm.begin() + static_cast<std::ptrdiff_t>(at), perm.begin() + static_cast<std::ptrdiff_t>(at + len)));
      at += len;
    }
    const int alpha = 1 + static_cast<int>(rng() % 4);
    const int s = 1 + static_cast<int>(rng() % 2);
    const int t = 2 + static_cast<int>(rng() % 3);
    auto out = anticomplete_family(g, xs, alpha, s, t, Thresholds::fixed(1));
    auto ok = validate_outcome(g, out, s, t, [&](const AnticompleteFamily& f) {
      return validate_anticomplete_family(g, xs, f, alpha);
    });
    ASSERT_TRUE(ok) << "trial " << trial << ": " << ok.reason;
    if (std::holds_alternative<AnticompleteFamily>(out)) {
      ++families;
      EXPECT_LE(alpha, reference::max_anticomplete_subfamily(g, xs));
    }
  }
  EXPECT_GT(families, 50);
}

TEST(GrowAbTree, BaseCase) {
  auto pb = path_bundle({2, 3}, 0.0, 1);
  auto out = grow_ab_tree(pb.graph, 0, 1, pb.family, 3, 1, 4);
  ASSERT_TRUE(std::holds_alternative<ABTreeCert>(out));
  const auto& c = std::get<ABTreeCert>(out);
  EXPECT_EQ(c.vertices, (VertexSet{0}));
  EXPECT_TRUE(is_ab_tree(pb.graph, c));
}

TEST(GrowAbTree, BicliqueTwoThreeIsATheta) {
  Graph g = biclique(2, 3);
  PathFamily f{0, 1, {{0, 2, 1}, {0, 3, 1}, {0, 4, 1}}};
  auto out = grow_ab_tree(g, 0, 1, f, 3, 2, 4, Thresholds::fixed(0));
  ASSERT_TRUE(std::holds_alternative<ThetaWitness>(out));
  EXPECT_TRUE(is_theta_witness(g, std::get<ThetaWitness>(out)));
}

TEST(GrowAbTree, HandBuiltStar) {
  // Root 0 with leaves 2, 3, 4; y = 1 sees every leaf; the leaves form a triangle.
  Graph g = build_graph(5, std::vector<std::pair<Vertex, Vertex>>{
                               {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {2, 4}});
  PathFamily f{0, 1, {{0, 2, 1}, {0, 3, 1}, {0, 4, 1}}};
  for (int b = 1; b <= 2; ++b) {
    auto out = grow_ab_tree(g, 0, 1, f, 3, b, 4, Thresholds::fixed(1));
    auto ok = validate_outcome(g, out, 3, 4, [&](const ABTreeCert& c) { return is_ab_tree(g, c); });
    EXPECT_TRUE(ok) << ok.reason;
  }
}

TEST(GrowAbTree, NestedInstanceGrowsDepthThree) {
  for (int a = 2; a <= 3; ++a) {
    auto pb = nested_instance(a);
    ExtractionTrace tr;
    auto out = grow_ab_tree(pb.graph, 0, 1, pb.family, a, 3, 4, nested_thresholds(a), &tr);
    ASSERT_TRUE(std::holds_alternative<ABTreeCert>(out)) << "a=" << a << " got " << outcome_kind(out);
    const auto& c = std::get<ABTreeCert>(out);
    EXPECT_TRUE(is_ab_tree(pb.graph, c));
    EXPECT_EQ(c.a, a);
    EXPECT_EQ(c.b, 3);
    EXPECT_EQ(static_cast<long long>(c.vertices.size()), ab_tree_order(a, 3));
  }
}

TEST(GrowAbTree, ProofThresholdsReportFirstGate) {
  auto pb = path_bundle({2, 3, 4}, 0.0, 1);
  auto out = grow_ab_tree(pb.graph, 0, 1, pb.family, 2, 2, 3);
  // Three chordless paths are a theta, found regardless of the thresholds.
  ASSERT_TRUE(std::holds_alternative<ThetaWitness>(out));

  Graph g = build_graph(4, std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {2, 3}, {3, 1}});
  auto unmet = grow_ab_tree(g, 0, 1, PathFamily{0, 1, {{0, 2, 3, 1}}}, 2, 2, 3);
  ASSERT_TRUE(std::holds_alternative<ThresholdUnmet>(unmet));
  EXPECT_EQ(std::get<ThresholdUnmet>(unmet).which, "paths");
  EXPECT_EQ(std::get<ThresholdUnmet>(unmet).available, 1);
}

TEST(GrowAbTree, RejectsMalformedFamily) {
  auto pb = path_bundle({2, 2}, 0.0, 1);
  EXPECT_THROW(grow_ab_tree(pb.graph, 0, 1, PathFamily{0, 1, {{0, 2, 4, 1}}}, 2, 2, 3), InvalidInput);
  EXPECT_THROW(grow_ab_tree(pb.graph, 1, 0, pb.family, 2, 2, 3), InvalidInput);
}

TEST(GrowAbTree, SoundOnRandomBundles) {
  std::mt19937_64 rng(37);
  std::map<std::string, int> kinds;
  for (int trial = 0; trial < 500; ++trial) {
    auto pb = random_bundle(rng);
    const int a = 2 + static_cast<int>(rng() % 2);
    const int b = 1 + static_cast<int>(rng() % 3);
    const int t = 3 + static_cast<int>(rng() % 2);
    auto thr = Thresholds::fixed(1 + rng() % 3);
    auto out = grow_ab_tree(pb.graph, 0, 1, pb.family, a, b, t, thr);
    ++kinds[outcome_kind(out)];
    auto ok = validate_outcome(pb.graph, out, 3, t, [&](const ABTreeCert& c) {
      if (c.a != a || c.b != b || c.root != 0) return Validation::fail("wrong shape");
      return is_ab_tree(pb.graph, c);
    });
    ASSERT_TRUE(ok) << "trial " << trial << ": " << ok.reason;
  }
  EXPECT_GT(kinds["success"], 0);
  EXPECT_GT(kinds["theta"], 0);
  EXPECT_GT(kinds["threshold_unmet"], 0);
}

TEST(GrowAbTree, Deterministic) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto pb = random_bundle(rng);
    ExtractionTrace t1, t2;
    auto o1 = grow_ab_tree(pb.graph, 0, 1, pb.family, 2, 3, 4, Thresholds::fixed(2), &t1);
    auto o2 = grow_ab_tree(pb.graph, 0, 1, pb.family, 2, 3, 4, Thresholds::fixed(2), &t2);
    EXPECT_EQ(t1, t2);
    EXPECT_EQ(o1.index(), o2.index());
    EXPECT_FALSE(t1.steps.empty());
  }
  auto pb = nested_instance(2);
  ExtractionTrace t1, t2;
  auto o1 = grow_ab_tree(pb.graph, 0, 1, pb.family, 2, 3, 4, nested_thresholds(2), &t1);
  auto o2 = grow_ab_tree(pb.graph, 0, 1, pb.family, 2, 3, 4, nested_thresholds(2), &t2);
  EXPECT_EQ(t1, t2);
  EXPECT_EQ(std::get<ABTreeCert>(o1), std::get<ABTreeCert>(o2));
}

TEST(ForestCompletion, Shapes) {
  Graph h = build_graph(4, std::vector<std::pair<Vertex, Vertex>>{{1, 2}});
  Graph hp = forest_completion(h);
  EXPECT_EQ(hp.order(), 5);
  EXPECT_TRUE(induces_tree(hp, hp.full_set()));
  EXPECT_TRUE(hp.adjacent(0, 4));
  EXPECT_TRUE(hp.adjacent(1, 4));
  EXPECT_FALSE(hp.adjacent(2, 4));
  EXPECT_THROW(forest_completion(cycle(3)), InvalidInput);
}

TEST(EmbedForest, Examples) {
  auto pb = path_bundle({2, 2, 3}, 0.3, 5);
  auto one = embed_forest(pb.graph, 0, 1, pb.family, Graph(1), 3);
  ASSERT_TRUE(std::holds_alternative<Embedding>(one));
  EXPECT_EQ(std::get<Embedding>(one).map, (std::vector<Vertex>{0}));
  EXPECT_THROW(embed_forest(pb.graph, 0, 1, pb.family, cycle(3), 3), InvalidInput);

  // P_3 sits inside any (4,4)-tree.
  auto tree = ab_tree_graph(4, 4);
  auto p3 = embed_forest_in_tree(tree.graph, tree.cert, path(3));
  ASSERT_TRUE(p3.has_value());
  EXPECT_TRUE(is_induced_embedding(tree.graph, path(3), *p3));
}

TEST(EmbedForest, ThroughGrownTree) {
  auto pb = nested_instance(3);
  for (const Graph& h : {path(2), Graph(2)}) {
    ExtractionTrace tr;
    auto out = embed_forest(pb.graph, 0, 1, pb.family, h, 4, nested_thresholds(3), &tr);
    ASSERT_TRUE(std::holds_alternative<Embedding>(out)) << outcome_kind(out);
    EXPECT_TRUE(is_induced_embedding(pb.graph, h, std::get<Embedding>(out)));
    EXPECT_EQ(tr.steps.back(), "embed_forest: embedded H");
  }
}

TEST(EmbedForest, SmallForestsUpToIsomorphism) {
  const auto forests = nonisomorphic_forests(5);
  std::vector<int> per_order(6, 0);
  for (const Graph& h : forests) ++per_order[static_cast<std::size_t>(h.order())];
  EXPECT_EQ(per_order, (std::vector<int>{1, 1, 2, 3, 6, 10}));
}

TEST(EmbedForest, EveryForestInSixSixTree) {
  auto tree = ab_tree_graph(6, 6);
  for (const Graph& h : nonisomorphic_forests(5)) {
    auto e = embed_forest_in_tree(tree.graph, tree.cert, h);
    ASSERT_TRUE(e.has_value()) << "forest on " << h.order() << " vertices, " << h.size() << " edges";
    EXPECT_TRUE(is_induced_embedding(tree.graph, h, *e));
  }
}

TEST(EmbedForest, SoundOnRandomBundles) {
  std::mt19937_64 rng(43);
  const auto forests = nonisomorphic_forests(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto pb = random_bundle(rng);
    const Graph& h = forests[rng() % forests.size()];
    const int t = 3 + static_cast<int>(rng() % 2);
    auto out = embed_forest(pb.graph, 0, 1, pb.family, h, t, Thresholds::fixed(1 + rng() % 3));
    auto ok = validate_outcome(pb.graph, out, 3, t, [&](const Embedding& e) {
      return is_induced_embedding(pb.graph, h, e);
    });
    ASSERT_TRUE(ok) << "trial " << trial << ": " << ok.reason;
  }
}

TEST(Thresholds, Overrides) {
  auto thr = Thresholds::fixed(5).set("q", TowerInt(2));
  EXPECT_EQ(thr.get("q", [] { return TowerInt(9); }).exact(), mpz_class(2));
  EXPECT_EQ(thr.get("eh", [] { return TowerInt(9); }).exact(), mpz_class(5));
  EXPECT_EQ(Thresholds::paper().get("eh", [] { return TowerInt(9); }).exact(), mpz_class(9));
  EXPECT_TRUE(Thresholds::paper().is_paper());
  EXPECT_THROW(Thresholds::paper().set("nope", TowerInt(1)), InvalidInput);
}
