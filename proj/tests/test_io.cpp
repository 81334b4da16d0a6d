#include <gtest/gtest.h>

#include <random>

#include "thetakit/generators.hpp"
#include "thetakit/io.hpp"

using namespace thetakit;

TEST(Graph6, Examples) {
  Graph g = from_graph6("D?{");
  EXPECT_EQ(g.order(), 5);
  // x(0,4), x(1,4), x(2,4), x(3,4): the star at vertex 4.
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(to_graph6(g), "D?{");

  EXPECT_EQ(to_graph6(Graph(3)), "B?");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(complete(4)), "C~");
  EXPECT_EQ(to_graph6(petersen()).size(), 9u);
}

TEST(Graph6, LongOrderPrefix) {
  Graph g = path(70);
  const std::string s = to_graph6(g);
  EXPECT_EQ(s.substr(0, 4), std::string("~?@E"));  // 70 = 1*64 + 6
  EXPECT_EQ(from_graph6(s), g);
}

TEST(Graph6, HeaderAndNewline) {
  EXPECT_EQ(from_graph6(">>graph6<<D?{\n"), from_graph6("D?{"));
}

TEST(Graph6, ErrorsCarryPosition) {
  try {
    from_graph6("D?|");  // last group 61 = 111101, one padding bit set
    FAIL() << "padding accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    from_graph6("D?");
    FAIL() << "short input accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    from_graph6("D? {");
    FAIL() << "bad byte accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(from_graph6("D?{?"), ParseError);
  EXPECT_THROW(from_graph6(""), ParseError);
}

TEST(EdgeJson, Examples) {
  Graph g = from_edge_json(R"({"n":2,"edges":[[0,1]]})");
  EXPECT_EQ(g.order(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_EQ(to_edge_json(complete(4)), R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  EXPECT_EQ(to_edge_json(Graph(3)), R"({"n":3,"edges":[]})");
  EXPECT_EQ(from_edge_json(R"({"edges":[[1,0]],"n":2})"), g);
}

TEST(EdgeJson, Errors) {
  try {
    from_edge_json(R"({"n":1,"edges":[[0,0]]})");
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
  try {
    from_edge_json(R"({"n":3,"edges":[[0,1],[1,3]]})");
    FAIL() << "out of range accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  EXPECT_THROW(from_edge_json(R"({"n":2,"edges":[[0,1]})"), ParseError);
  EXPECT_THROW(from_edge_json(R"({"edges":[]})"), ParseError);
  EXPECT_THROW(from_edge_json(R"({"n":2,"edges":[[0]]})"), ParseError);
  EXPECT_THROW(from_edge_json(R"([1,2])"), ParseError);
}

TEST(GraphIo, FormatSelection) {
  EXPECT_EQ(sniff_format("  {\"n\":0}"), GraphFormat::edge_json);
  EXPECT_EQ(sniff_format("D?{"), GraphFormat::graph6);
  EXPECT_EQ(parse_format("edge-json"), GraphFormat::edge_json);
  EXPECT_THROW(parse_format("dot"), InvalidInput);
}

TEST(GraphIo, RoundTripSeeded) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 80);
    Graph g = random_graph(n, static_cast<double>(rng() % 1000) / 1000.0, rng());
    for (GraphFormat f : {GraphFormat::graph6, GraphFormat::edge_json}) {
      const std::string text = emit_graph(g, f);
      Graph back = parse_graph(text, f);
      ASSERT_EQ(back, g) << "trial " << trial;
      ASSERT_EQ(emit_graph(back, f), text) << "trial " << trial;
    }
  }
}
