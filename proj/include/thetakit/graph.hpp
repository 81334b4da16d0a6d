#pragma once

// Core graph types for thetakit: an immutable undirected simple graph, a
// loopless digraph, vertex sets, x-y path families and rooted (a,b)-tree
// certificates, together with the validators every search result is checked
// against.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace thetakit {

using Vertex = int;
using Bits = boost::dynamic_bitset<>;

/// Raised when an input violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Iterate the set bits of a dynamic bitset in increasing order.
template <class F>
void for_each_bit(const Bits& bits, F&& f) {
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    f(static_cast<Vertex>(i));
  }
}

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

  static VertexSet from_bits(const Bits& bits) {
    VertexSet s;
    for_each_bit(bits, [&](Vertex v) { s.members_.push_back(v); });
    return s;
  }

  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }

  [[nodiscard]] Bits to_bits(int n) const {
    Bits b(static_cast<std::size_t>(n));
    for (Vertex v : members_) b.set(static_cast<std::size_t>(v));
    return b;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

/// Immutable undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n))) {
    if (n < 0) throw InvalidInput("negative vertex count");
  }

  [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] std::size_t size() const { return edge_count_; }
  [[nodiscard]] bool valid(Vertex v) const { return v >= 0 && v < order(); }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }
  [[nodiscard]] const Bits& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int degree(Vertex v) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].count());
  }

  /// Edges with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
      for_each_bit(neighbors(u), [&](Vertex v) {
        if (u < v) out.push_back({u, v});
      });
    }
    return out;
  }

  [[nodiscard]] Bits empty_set() const { return Bits(adj_.size()); }
  [[nodiscard]] Bits full_set() const {
    Bits b(adj_.size());
    b.set();
    return b;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  std::vector<Bits> adj_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area; `build()` freezes the result into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (!g_.valid(u) || !g_.valid(v)) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") out of range for n=" << g_.order();
      throw InvalidInput(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "self-loop (" << u << "," << v << ")";
      throw InvalidInput(msg.str());
    }
    if (!g_.adjacent(u, v)) {
      g_.adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
      g_.adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
      ++g_.edge_count_;
    }
    return *this;
  }

  [[nodiscard]] int order() const { return g_.order(); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  [[nodiscard]] Graph build() const { return g_; }

 private:
  Graph g_;
};

inline Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (auto e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

inline void check_range(const Graph& g, const VertexSet& x) {
  for (Vertex v : x) {
    if (!g.valid(v)) {
      std::ostringstream msg;
      msg << "vertex " << v << " out of range for n=" << g.order();
      throw InvalidInput(msg.str());
    }
  }
}

/// G[X] relabelled to 0..|X|-1; `to_host[i]` is the host id of vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  check_range(g, x);
  const int k = static_cast<int>(x.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)])) b.add_edge(i, j);
  return {b.build(), x.members()};
}

inline bool are_anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check_range(g, x);
  check_range(g, y);
  for (Vertex u : x) {
    if (y.contains(u)) return false;
    for (Vertex v : y)
      if (g.adjacent(u, v)) return false;
  }
  return true;
}

inline bool is_stable_set(const Graph& g, const VertexSet& x) {
  check_range(g, x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j])) return false;
  return true;
}

inline bool is_clique(const Graph& g, const VertexSet& x) {
  check_range(g, x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!g.adjacent(x[i], x[j])) return false;
  return true;
}

/// Outcome of a validator: `ok` plus the first violation found.
struct Validation {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Validation pass() { return {}; }
  static Validation fail(std::string why) { return {false, std::move(why)}; }
};

inline bool is_induced_path(const Graph& g, const std::vector<Vertex>& seq, Vertex x, Vertex y) {
  if (seq.empty() || seq.front() != x || seq.back() != y) return false;
  for (Vertex v : seq)
    if (!g.valid(v)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return false;
      const bool consecutive = (j == i + 1);
      if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
    }
  }
  return true;
}

/// Set of pairwise internally disjoint induced x-y paths.
struct PathFamily {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<std::vector<Vertex>> paths;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

inline std::vector<Vertex> interior(const std::vector<Vertex>& path) {
  if (path.size() <= 2) return {};
  return {path.begin() + 1, path.end() - 1};
}

inline Validation validate_path_family(const Graph& g, const PathFamily& f) {
  if (!g.valid(f.x) || !g.valid(f.y)) return Validation::fail("end vertex out of range");
  if (f.x == f.y) return Validation::fail("x equals y");
  if (g.adjacent(f.x, f.y)) return Validation::fail("x and y are adjacent");
  Bits used = g.empty_set();
  for (std::size_t i = 0; i < f.paths.size(); ++i) {
    const auto& p = f.paths[i];
    if (!is_induced_path(g, p, f.x, f.y)) {
      return Validation::fail("path " + std::to_string(i) + " is not an induced x-y path");
    }
    for (Vertex v : interior(p)) {
      if (used.test(static_cast<std::size_t>(v))) {
        return Validation::fail("path " + std::to_string(i) + " shares interior vertex " +
                                std::to_string(v));
      }
      used.set(static_cast<std::size_t>(v));
    }
  }
  return Validation::pass();
}

/// Rooted induced-tree certificate: `parent` maps every non-root vertex to its parent.
struct ABTreeCert {
  VertexSet vertices;
  Vertex root = 0;
  int a = 0;
  int b = 0;
  std::map<Vertex, Vertex> parent;

  friend bool operator==(const ABTreeCert&, const ABTreeCert&) = default;
};

/// Number of vertices of any (a,b)-tree (root degree a, inner degree a).
inline long long ab_tree_order(int a, int b) {
  if (b <= 1) return 1;
  long long total = 1;
  long long layer = a;
  for (int depth = 1; depth <= b - 1; ++depth) {
    total += layer;
    layer *= (a - 1);
  }
  return total;
}

inline Validation is_ab_tree(const Graph& g, const ABTreeCert& cert) {
  if (cert.a < 1 || cert.b < 1) return Validation::fail("a and b must be positive");
  for (Vertex v : cert.vertices)
    if (!g.valid(v)) return Validation::fail("vertex out of range");
  if (!cert.vertices.contains(cert.root)) return Validation::fail("root not in vertex set");

  if (cert.b == 1) {
    if (cert.vertices.size() != 1) return Validation::fail("b=1 requires a single vertex");
    if (!cert.parent.empty()) return Validation::fail("b=1 tree has parent entries");
    return Validation::pass();
  }

  // Parent map must cover exactly the non-root vertices and realize G[V(T)].
  if (cert.parent.size() + 1 != cert.vertices.size()) {
    return Validation::fail("parent map does not cover the non-root vertices");
  }
  for (auto [child, par] : cert.parent) {
    if (child == cert.root) return Validation::fail("root has a parent");
    if (!cert.vertices.contains(child) || !cert.vertices.contains(par)) {
      return Validation::fail("parent entry outside the vertex set");
    }
    if (!g.adjacent(child, par)) {
      return Validation::fail("parent edge " + std::to_string(child) + "-" + std::to_string(par) +
                              " missing in host graph");
    }
  }
  std::size_t induced_edges = 0;
  const auto& vs = cert.vertices.members();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) continue;
      ++induced_edges;
      auto pi = cert.parent.find(vs[i]);
      auto pj = cert.parent.find(vs[j]);
      const bool tree_edge = (pi != cert.parent.end() && pi->second == vs[j]) ||
                             (pj != cert.parent.end() && pj->second == vs[i]);
      if (!tree_edge) {
        return Validation::fail("induced edge " + std::to_string(vs[i]) + "-" +
                                std::to_string(vs[j]) + " is not a tree edge");
      }
    }
  }
  if (induced_edges != cert.parent.size()) return Validation::fail("edge count mismatch");

  // Depth by following parents; detects cycles in the parent map.
  std::map<Vertex, int> depth{{cert.root, 0}};
  std::map<Vertex, int> children;
  for (auto [child, par] : cert.parent) ++children[par];
  for (Vertex v : vs) {
    std::vector<Vertex> chain;
    Vertex cur = v;
    while (!depth.count(cur)) {
      chain.push_back(cur);
      if (chain.size() > vs.size()) return Validation::fail("parent map has a cycle");
      cur = cert.parent.at(cur);
    }
    int d = depth[cur];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
  }

  for (Vertex v : vs) {
    const int kids = children.count(v) ? children[v] : 0;
    const int deg = kids + (v == cert.root ? 0 : 1);
    if (v == cert.root) {
      if (deg != cert.a) return Validation::fail("root degree " + std::to_string(deg) + " != a");
    } else if (kids == 0) {
      if (depth[v] != cert.b - 1) {
        return Validation::fail("leaf " + std::to_string(v) + " at depth " +
                                std::to_string(depth[v]) + " != b-1");
      }
    } else if (deg != cert.a) {
      return Validation::fail("inner vertex " + std::to_string(v) + " has degree " +
                              std::to_string(deg) + " != a");
    }
  }
  return Validation::pass();
}

/// Loopless digraph with at most one arc per ordered pair.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : out_(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n))) {}

  static Digraph from_arcs(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
    Digraph d(n);
    for (auto [u, v] : arcs) d.add_arc(u, v);
    return d;
  }

  [[nodiscard]] int order() const { return static_cast<int>(out_.size()); }
  [[nodiscard]] bool has_arc(Vertex u, Vertex v) const {
    return out_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }
  [[nodiscard]] const Bits& out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int out_degree(Vertex v) const {
    return static_cast<int>(out_[static_cast<std::size_t>(v)].count());
  }

  [[nodiscard]] Graph underlying() const {
    GraphBuilder b(order());
    for (Vertex u = 0; u < order(); ++u)
      for_each_bit(out_neighbors(u), [&](Vertex v) { b.add_edge(u, v); });
    return b.build();
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

 private:
  void add_arc(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) throw InvalidInput("arc out of range");
    if (u == v) throw InvalidInput("digraph self-loop at " + std::to_string(u));
    out_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
  }

  std::vector<Bits> out_;
};

/// Connected components of G[mask], each as a bitset, ordered by least vertex.
inline std::vector<Bits> components(const Graph& g, const Bits& mask) {
  std::vector<Bits> out;
  Bits left = mask;
  while (left.any()) {
    Bits comp = g.empty_set();
    Bits frontier = g.empty_set();
    frontier.set(left.find_first());
    while (frontier.any()) {
      comp |= frontier;
      Bits next = g.empty_set();
      for_each_bit(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      next &= mask;
      next -= comp;
      frontier = next;
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g, const Bits& mask) {
  return mask.none() || components(g, mask).size() == 1;
}

/// True iff G[mask] is a tree (connected, |E| = |V|-1).
inline bool induces_tree(const Graph& g, const Bits& mask) {
  if (mask.none()) return false;
  std::size_t edges = 0;
  for_each_bit(mask, [&](Vertex v) { edges += (g.neighbors(v) & mask).count(); });
  edges /= 2;
  return edges + 1 == mask.count() && is_connected(g, mask);
}

inline bool is_forest(const Graph& g) {
  std::size_t comps = components(g, g.full_set()).size();
  return g.size() + comps == static_cast<std::size_t>(g.order());
}

}  // namespace thetakit
