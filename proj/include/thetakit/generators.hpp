#pragma once

// Deterministic constructors for the graph families used throughout the
// library, plus a seeded G(n,p) source.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit {

/// Number of new internal vertices inserted on each edge (keys normalized u < v).
using SubdivisionPlan = std::map<Edge, int>;

inline Edge normalized(Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; }

/// Brick wall on `rows` horizontal paths of `cols` vertices each. Rungs join
/// row i to row i+1 at the columns j with j = i (mod 2); vertices of degree at
/// most one are then stripped repeatedly and the survivors renumbered in
/// row-major order.
inline Graph brick_wall(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidInput("brick wall needs positive dimensions");
  const int n = rows * cols;
  auto id = [cols](int r, int c) { return r * cols + c; };
  GraphBuilder full(n);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) full.add_edge(id(r, c), id(r, c + 1));
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = r % 2; c < cols; c += 2) full.add_edge(id(r, c), id(r + 1, c));
  Graph g = full.build();

  Bits alive = g.full_set();
  if (rows > 1) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < n; ++v) {
        if (alive.test(static_cast<std::size_t>(v)) && (g.neighbors(v) & alive).count() <= 1) {
          alive.reset(static_cast<std::size_t>(v));
          changed = true;
        }
      }
    }
  }
  return induced_subgraph(g, VertexSet::from_bits(alive)).graph;
}

/// The t-by-t wall: t rows of 2t vertices. wall(1) is a single edge, wall(2)
/// a single brick (a 6-cycle), wall(3) four bricks.
inline Graph wall(int t) {
  if (t < 1) throw InvalidInput("wall size must be at least 1");
  return brick_wall(t, 2 * t);
}

inline Graph subdivide(const Graph& g, const SubdivisionPlan& plan) {
  for (const auto& [e, k] : plan) {
    if (e.u >= e.v || !g.valid(e.u) || !g.valid(e.v) || !g.adjacent(e.u, e.v)) {
      throw InvalidInput("plan key (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not an edge");
    }
    if (k < 0) throw InvalidInput("negative subdivision count");
  }
  const auto edges = g.edges();
  int extra = 0;
  for (auto e : edges) {
    auto it = plan.find(e);
    if (it == plan.end()) {
      throw InvalidInput("plan misses edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    extra += it->second;
  }
  GraphBuilder b(g.order() + extra);
  Vertex next = g.order();
  for (auto e : edges) {
    Vertex prev = e.u;
    for (int i = 0; i < plan.at(e); ++i) {
      b.add_edge(prev, next);
      prev = next++;
    }
    b.add_edge(prev, e.v);
  }
  return b.build();
}

inline SubdivisionPlan uniform_plan(const Graph& g, int k) {
  SubdivisionPlan plan;
  for (auto e : g.edges()) plan[e] = k;
  return plan;
}

/// Independent uniform draws in [0, max_per_edge] per edge, in edge order.
inline SubdivisionPlan random_plan(const Graph& g, int max_per_edge, std::mt19937_64& rng) {
  SubdivisionPlan plan;
  for (auto e : g.edges()) {
    plan[e] = static_cast<int>(rng() % static_cast<std::uint64_t>(max_per_edge + 1));
  }
  return plan;
}

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;  // vertex i of the line graph is edge_of[i]
};

inline LineGraph line_graph(const Graph& g) {
  auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge e = edges[static_cast<std::size_t>(i)];
      const Edge f = edges[static_cast<std::size_t>(j)];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) b.add_edge(i, j);
    }
  }
  return {b.build(), std::move(edges)};
}

/// Branch vertices 0 and 1 joined by three paths with l1, l2, l3 edges.
inline Graph theta_graph(int l1, int l2, int l3) {
  for (int l : {l1, l2, l3}) {
    if (l < 2) throw InvalidInput("theta path lengths must be at least 2");
  }
  GraphBuilder b(2 + (l1 - 1) + (l2 - 1) + (l3 - 1));
  Vertex next = 2;
  for (int l : {l1, l2, l3}) {
    Vertex prev = 0;
    for (int i = 0; i < l - 1; ++i) {
      b.add_edge(prev, next);
      prev = next++;
    }
    b.add_edge(prev, 1);
  }
  return b.build();
}

inline Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

/// K_{s,t} with sides {0..s-1} and {s..s+t-1}.
inline Graph biclique(int s, int t) {
  GraphBuilder b(s + t);
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = s; v < s + t; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph cycle(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

/// Path on n vertices.
inline Graph path(int n) {
  if (n < 1) throw InvalidInput("path needs at least 1 vertex");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph prism(int l1, int l2, int l3) { return line_graph(theta_graph(l1, l2, l3)).graph; }

inline Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    b.add_edge(i, 5 + i);                // spokes
  }
  return b.build();
}

/// Named family lookup: complete(n), biclique(s,t), cycle(n), path(n),
/// prism(l1,l2,l3), theta(l1,l2,l3), wall(t), petersen().
inline Graph canonical(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw InvalidInput("family '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    }
  };
  if (name == "complete") { need(1); return complete(params[0]); }
  if (name == "biclique") { need(2); return biclique(params[0], params[1]); }
  if (name == "cycle") { need(1); return cycle(params[0]); }
  if (name == "path") { need(1); return path(params[0]); }
  if (name == "prism") { need(3); return prism(params[0], params[1], params[2]); }
  if (name == "theta") { need(3); return theta_graph(params[0], params[1], params[2]); }
  if (name == "wall") { need(1); return wall(params[0]); }
  if (name == "petersen") { need(0); return petersen(); }
  throw InvalidInput("unknown graph family '" + name + "'");
}

struct Constellation {
  Graph graph;
  VertexSet centers;
  std::vector<std::vector<Vertex>> paths;
};

/// Definitional check that G[S ∪ rest-of-mask] is an (s,l)-constellation with
/// centre set S: S stable, G[mask]-S has exactly l components, each an induced
/// path, and every centre has a neighbour in every component.
inline Validation is_constellation(const Graph& g, const Bits& mask, const VertexSet& centers,
                                   std::size_t s, std::size_t l) {
  if (centers.size() != s) return Validation::fail("wrong number of centres");
  Bits cs = centers.to_bits(g.order());
  if ((cs & mask) != cs) return Validation::fail("centre outside the constellation");
  if (!is_stable_set(g, centers)) return Validation::fail("centres are not stable");
  const Bits rest = mask - cs;
  const auto comps = components(g, rest);
  if (comps.size() != l) {
    return Validation::fail("found " + std::to_string(comps.size()) + " components, expected " +
                            std::to_string(l));
  }
  for (const auto& comp : comps) {
    int ends = 0;
    bool ok = true;
    for_each_bit(comp, [&](Vertex v) {
      const auto d = (g.neighbors(v) & comp).count();
      if (d > 2) ok = false;
      if (d <= 1) ++ends;
    });
    if (!ok || !induces_tree(g, comp) || (comp.count() > 1 && ends != 2)) {
      return Validation::fail("component is not a path");
    }
    for (Vertex c : centers) {
      if ((g.neighbors(c) & comp).none()) {
        return Validation::fail("centre " + std::to_string(c) + " misses a component");
      }
    }
  }
  return Validation::pass();
}

/// Centres 0..s-1 followed by the l paths in order; attach[c][k] lists the
/// positions on path k adjacent to centre c.
inline Constellation constellation(int s, int l, const std::vector<int>& lengths,
                                   const std::vector<std::vector<std::vector<int>>>& attach) {
  if (s < 1 || l < 1) throw InvalidInput("constellation needs s, l >= 1");
  if (lengths.size() != static_cast<std::size_t>(l)) throw InvalidInput("need one length per path");
  if (attach.size() != static_cast<std::size_t>(s)) throw InvalidInput("need one attachment row per centre");
  int n = s;
  for (int len : lengths) {
    if (len < 1) throw InvalidInput("path lengths count vertices and must be >= 1");
    n += len;
  }
  GraphBuilder b(n);
  Constellation out;
  std::vector<Vertex> first(static_cast<std::size_t>(l));
  Vertex next = s;
  for (int k = 0; k < l; ++k) {
    first[static_cast<std::size_t>(k)] = next;
    std::vector<Vertex> p;
    for (int i = 0; i < lengths[static_cast<std::size_t>(k)]; ++i) {
      if (i > 0) b.add_edge(next - 1, next);
      p.push_back(next++);
    }
    out.paths.push_back(std::move(p));
  }
  for (int c = 0; c < s; ++c) {
    const auto& row = attach[static_cast<std::size_t>(c)];
    if (row.size() != static_cast<std::size_t>(l)) throw InvalidInput("attachment row has wrong arity");
    for (int k = 0; k < l; ++k) {
      const auto& positions = row[static_cast<std::size_t>(k)];
      if (positions.empty()) {
        throw InvalidInput("centre " + std::to_string(c) + " has empty attachment to path " +
                           std::to_string(k));
      }
      for (int pos : positions) {
        if (pos < 0 || pos >= lengths[static_cast<std::size_t>(k)]) {
          throw InvalidInput("attachment (" + std::to_string(c) + "," + std::to_string(k) +
                             ") position out of range");
        }
        b.add_edge(c, first[static_cast<std::size_t>(k)] + pos);
      }
    }
  }
  std::vector<Vertex> cs(static_cast<std::size_t>(s));
  for (int c = 0; c < s; ++c) cs[static_cast<std::size_t>(c)] = c;
  out.centers = VertexSet(cs);
  out.graph = b.build();
  return out;
}

/// Full attachment: every centre adjacent to every path vertex.
inline Constellation full_constellation(int s, const std::vector<int>& lengths) {
  std::vector<std::vector<std::vector<int>>> attach(static_cast<std::size_t>(s));
  for (auto& row : attach) {
    for (int len : lengths) {
      std::vector<int> all(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i) all[static_cast<std::size_t>(i)] = i;
      row.push_back(all);
    }
  }
  return constellation(s, static_cast<int>(lengths.size()), lengths, attach);
}

struct RootedTree {
  Graph graph;
  Vertex root = 0;
  ABTreeCert cert;
};

/// The (a,b)-tree in breadth-first numbering with the root at 0.
inline RootedTree ab_tree_graph(int a, int b) {
  if (b < 1 || a < 1) throw InvalidInput("(a,b)-tree needs a, b >= 1");
  if (a == 1 && b >= 3) throw InvalidInput("no (1,b)-tree exists for b >= 3");
  const long long order = ab_tree_order(a, b);
  if (order > 5'000'000) throw InvalidInput("(a,b)-tree too large to materialize");
  const int n = static_cast<int>(order);
  GraphBuilder builder(n);
  ABTreeCert cert;
  cert.root = 0;
  cert.a = a;
  cert.b = b;
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  Vertex next = 1;
  for (Vertex v = 0; v < n && next < n; ++v) {
    if (depth[static_cast<std::size_t>(v)] >= b - 1) continue;
    const int kids = (v == 0) ? a : a - 1;
    for (int k = 0; k < kids; ++k) {
      builder.add_edge(v, next);
      cert.parent[next] = v;
      depth[static_cast<std::size_t>(next)] = depth[static_cast<std::size_t>(v)] + 1;
      ++next;
    }
  }
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  cert.vertices = VertexSet(all);
  return {builder.build(), 0, std::move(cert)};
}

/// G(n,p) from std::mt19937_64 seeded with `seed`: pairs u<v in lexicographic
/// order each consume one 64-bit draw w, and uv is an edge iff
/// (w >> 11) * 2^-53 < p.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidInput("edge probability outside [0,1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) b.add_edge(u, v);
    }
  }
  return b.build();
}

/// x = 0 and y = 1 joined by one path per entry of `interiors` (that many
/// interior vertices each, numbered consecutively). Interior vertices of
/// different paths are joined independently with probability `chord_p`, so
/// every path stays induced.
struct PathBundle {
  Graph graph;
  PathFamily family;
};

inline PathBundle path_bundle(const std::vector<int>& interiors, double chord_p, std::uint64_t seed) {
  if (chord_p < 0.0 || chord_p > 1.0) throw InvalidInput("chord probability outside [0,1]");
  int n = 2;
  std::vector<int> owner{-1, -1};
  PathFamily fam{0, 1, {}};
  for (std::size_t i = 0; i < interiors.size(); ++i) {
    if (interiors[i] < 1) throw InvalidInput("bundle paths need an interior vertex");
    std::vector<Vertex> p{0};
    for (int k = 0; k < interiors[i]; ++k) {
      p.push_back(n++);
      owner.push_back(static_cast<int>(i));
    }
    p.push_back(1);
    fam.paths.push_back(std::move(p));
  }
  GraphBuilder b(n);
  for (const auto& p : fam.paths)
    for (std::size_t k = 0; k + 1 < p.size(); ++k) b.add_edge(p[k], p[k + 1]);
  std::mt19937_64 rng(seed);
  for (Vertex u = 2; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (owner[static_cast<std::size_t>(u)] == owner[static_cast<std::size_t>(v)]) continue;
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < chord_p) b.add_edge(u, v);
    }
  return {b.build(), std::move(fam)};
}

/// One forest per isomorphism class on 0..max_n vertices, smallest first.
inline std::vector<Graph> nonisomorphic_forests(int max_n) {
  if (max_n < 0 || max_n > 6) throw InvalidInput("forest enumeration supports up to 6 vertices");
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::map<std::uint32_t, Graph> classes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
      if (std::popcount(mask) >= std::max(n, 1)) continue;
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (mask >> k & 1) edges.push_back(slots[k]);
      Graph g = build_graph(n, edges);
      if (!is_forest(g)) continue;
      // Canonical label: least edge mask over all relabellings.
      std::uint32_t best = ~std::uint32_t{0};
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      do {
        std::uint32_t m = 0;
        for (auto [u, v] : edges) {
          Vertex a = perm[static_cast<std::size_t>(u)];
          Vertex c = perm[static_cast<std::size_t>(v)];
          if (a > c) std::swap(a, c);
          const auto at = std::find(slots.begin(), slots.end(), std::pair<Vertex, Vertex>{a, c}) - slots.begin();
          m |= std::uint32_t{1} << at;
        }
        best = std::min(best, m);
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.emplace(best, g);
    }
    for (auto& [key, g] : classes) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace thetakit
