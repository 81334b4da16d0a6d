#pragma once

// Exact treewidth for small graphs. The main solver decides "tw <= k" by a
// depth-first search over elimination orderings with safe reductions and a
// memo of failed eliminated-sets; a subset dynamic program is kept as an
// independent second route for graphs on at most 20 vertices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit {

struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;

  [[nodiscard]] int width() const {
    std::size_t widest = 0;
    for (const auto& b : bags) widest = std::max(widest, b.size());
    return static_cast<int>(widest) - 1;
  }
};

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
  std::vector<Vertex> elimination_order;
};

inline Validation validate_decomposition(const Graph& g, const TreeDecomposition& d) {
  const int nodes = static_cast<int>(d.bags.size());
  if (d.tree.order() != nodes) return Validation::fail("tree order differs from bag count");
  if (nodes == 0) return g.order() == 0 ? Validation::pass() : Validation::fail("no bags");
  if (!induces_tree(d.tree, d.tree.full_set())) return Validation::fail("decomposition tree is not a tree");
  for (const auto& bag : d.bags)
    for (Vertex v : bag)
      if (!g.valid(v)) return Validation::fail("bag vertex out of range");

  for (Vertex v = 0; v < g.order(); ++v) {
    Bits holding = d.tree.empty_set();
    for (int i = 0; i < nodes; ++i)
      if (d.bags[static_cast<std::size_t>(i)].contains(v)) holding.set(static_cast<std::size_t>(i));
    if (holding.none()) return Validation::fail("vertex " + std::to_string(v) + " in no bag");
    if (!is_connected(d.tree, holding)) {
      return Validation::fail("bags holding vertex " + std::to_string(v) + " are not connected");
    }
  }
  for (auto e : g.edges()) {
    bool covered = false;
    for (const auto& bag : d.bags) {
      if (bag.contains(e.u) && bag.contains(e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return Validation::fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " uncovered");
    }
  }
  return Validation::pass();
}

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<Mask> to_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for_each_bit(g.neighbors(v), [&](Vertex u) { adj[static_cast<std::size_t>(v)] |= bit(u); });
  return adj;
}

inline void eliminate(std::vector<Mask>& adj, int v) {
  const Mask nb = adj[static_cast<std::size_t>(v)];
  for (Mask rest = nb; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    adj[static_cast<std::size_t>(u)] = (adj[static_cast<std::size_t>(u)] | nb) & ~bit(u) & ~bit(v);
  }
  adj[static_cast<std::size_t>(v)] = 0;
}

inline int fill_in(const std::vector<Mask>& adj, int v) {
  int missing = 0;
  const Mask nb = adj[static_cast<std::size_t>(v)];
  for (Mask rest = nb; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    missing += std::popcount(nb & ~adj[static_cast<std::size_t>(u)] & ~bit(u));
  }
  return missing / 2;
}

// Every neighbour but possibly one forms a clique.
inline bool almost_simplicial(const std::vector<Mask>& adj, int v) {
  const Mask nb = adj[static_cast<std::size_t>(v)];
  if (fill_in(adj, v) == 0) return true;
  for (Mask rest = nb; rest; rest &= rest - 1) {
    const int skip = std::countr_zero(rest);
    const Mask others = nb & ~bit(skip);
    bool clique = true;
    for (Mask r2 = others; r2 && clique; r2 &= r2 - 1) {
      const int u = std::countr_zero(r2);
      if ((others & ~bit(u) & ~adj[static_cast<std::size_t>(u)]) != 0) clique = false;
    }
    if (clique) return true;
  }
  return false;
}

// Minor-min-width: contract a minimum-degree vertex into its lowest-degree
// neighbour; the largest minimum degree seen bounds the treewidth from below.
inline int minor_min_width(std::vector<Mask> adj, Mask alive) {
  int lb = 0;
  while (alive) {
    int best = -1;
    int best_deg = std::numeric_limits<int>::max();
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj[static_cast<std::size_t>(v)]);
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    }
    lb = std::max(lb, best_deg);
    const Mask nb = adj[static_cast<std::size_t>(best)];
    if (nb == 0) {
      alive &= ~bit(best);
      continue;
    }
    int into = -1;
    int into_deg = std::numeric_limits<int>::max();
    for (Mask rest = nb; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int d = std::popcount(adj[static_cast<std::size_t>(u)]);
      if (d < into_deg) {
        into_deg = d;
        into = u;
      }
    }
    // Contract best into `into`.
    const Mask merged = (nb | adj[static_cast<std::size_t>(into)]) & ~bit(best) & ~bit(into);
    for (Mask rest = nb; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      adj[static_cast<std::size_t>(u)] &= ~bit(best);
    }
    adj[static_cast<std::size_t>(into)] = merged;
    for (Mask rest = merged; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      adj[static_cast<std::size_t>(u)] |= bit(into);
    }
    adj[static_cast<std::size_t>(best)] = 0;
    alive &= ~bit(best);
  }
  return lb;
}

class EliminationSearch {
 public:
  EliminationSearch(std::vector<Mask> adj, int n, int k) : adj0_(std::move(adj)), n_(n), k_(k) {}

  bool run() {
    order_.clear();
    const Mask all = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
    return dfs(adj0_, 0, all);
  }

  [[nodiscard]] const std::vector<Vertex>& order() const { return order_; }

 private:
  bool dfs(std::vector<Mask> adj, Mask eliminated, Mask all) {
    const std::size_t mark = order_.size();
    // Safe reductions: an (almost) simplicial vertex of degree <= k.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (Mask rest = all & ~eliminated; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (std::popcount(adj[static_cast<std::size_t>(v)]) <= k_ && almost_simplicial(adj, v)) {
          eliminate(adj, v);
          eliminated |= bit(v);
          order_.push_back(v);
          reduced = true;
        }
      }
    }
    const Mask remaining = all & ~eliminated;
    if (std::popcount(remaining) <= k_ + 1) {
      for (Mask rest = remaining; rest; rest &= rest - 1) order_.push_back(std::countr_zero(rest));
      return true;
    }
    if (failed_.count(eliminated) || minor_min_width(adj, remaining) > k_) {
      failed_.insert(eliminated);
      order_.resize(mark);
      return false;
    }
    std::vector<std::pair<std::pair<int, int>, int>> candidates;
    for (Mask rest = remaining; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj[static_cast<std::size_t>(v)]);
      if (d <= k_) candidates.push_back({{fill_in(adj, v), d}, v});
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& cand : candidates) {
      const int v = cand.second;
      auto next = adj;
      eliminate(next, v);
      order_.push_back(v);
      if (dfs(std::move(next), eliminated | bit(v), all)) return true;
      order_.pop_back();
    }
    failed_.insert(eliminated);
    order_.resize(mark);
    return false;
  }

  std::vector<Mask> adj0_;
  int n_;
  int k_;
  std::unordered_set<Mask> failed_;
  std::vector<Vertex> order_;
};

inline std::vector<Vertex> min_fill_order(std::vector<Mask> adj, int n) {
  std::vector<Vertex> order;
  Mask alive = n == 64 ? ~Mask{0} : (bit(n) - 1);
  while (alive) {
    int best = -1;
    std::pair<int, int> key{std::numeric_limits<int>::max(), 0};
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      std::pair<int, int> k{fill_in(adj, v), std::popcount(adj[static_cast<std::size_t>(v)])};
      if (k < key) {
        key = k;
        best = v;
      }
    }
    eliminate(adj, best);
    alive &= ~bit(best);
    order.push_back(best);
  }
  return order;
}

}  // namespace detail

/// Width of an elimination ordering together with its decomposition: node i
/// holds order[i] and its later neighbours in the fill-in graph.
inline TreewidthResult decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  TreewidthResult out;
  out.elimination_order = order;
  if (n == 0) {
    out.decomposition.tree = Graph(1);
    out.decomposition.bags = {VertexSet{}};
    out.width = -1;
    return out;
  }
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  // Fill-in adjacency via bitsets so this works beyond 64 vertices.
  std::vector<Bits> adj;
  for (Vertex v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
  std::vector<VertexSet> bags;
  GraphBuilder tree(n);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    Bits nb = adj[static_cast<std::size_t>(v)];
    std::vector<Vertex> bag{v};
    int next_node = -1;
    for_each_bit(nb, [&](Vertex u) {
      bag.push_back(u);
      const int p = position[static_cast<std::size_t>(u)];
      if (next_node < 0 || p < next_node) next_node = p;
    });
    for_each_bit(nb, [&](Vertex u) {
      adj[static_cast<std::size_t>(u)] |= nb;
      adj[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(u));
      adj[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v));
    });
    adj[static_cast<std::size_t>(v)].reset();
    bags.emplace_back(bag);
    parent[static_cast<std::size_t>(i)] = next_node;
  }
  // Nodes without a parent are component roots; chain them to the last node.
  for (int i = 0; i < n; ++i) {
    const int p = parent[static_cast<std::size_t>(i)];
    if (p >= 0) {
      tree.add_edge(i, p);
    } else if (i != n - 1) {
      tree.add_edge(i, n - 1);
    }
  }
  out.decomposition.tree = tree.build();
  out.decomposition.bags = std::move(bags);
  out.width = out.decomposition.width();
  return out;
}

struct TreewidthCaps {
  int max_vertices = 32;
};

/// Exact treewidth with a witnessing decomposition.
inline TreewidthResult treewidth_exact(const Graph& g, TreewidthCaps caps = {}) {
  const int n = g.order();
  if (n > caps.max_vertices || n > 64) {
    throw InvalidInput("treewidth_exact: " + std::to_string(n) + " vertices exceeds cap " +
                       std::to_string(std::min(caps.max_vertices, 64)));
  }
  if (n == 0) return decomposition_from_order(g, {});
  const auto adj = detail::to_masks(g);
  const auto all = n == 64 ? ~detail::Mask{0} : (detail::bit(n) - 1);
  const auto heuristic = detail::min_fill_order(adj, n);
  const int upper = decomposition_from_order(g, heuristic).width;
  const int lower = detail::minor_min_width(adj, all);
  for (int k = lower; k < upper; ++k) {
    detail::EliminationSearch search(adj, n, k);
    if (search.run()) return decomposition_from_order(g, search.order());
  }
  return decomposition_from_order(g, heuristic);
}

/// Subset dynamic program over eliminated sets (n <= 20): TW(S) is the best
/// width of eliminating exactly S first.
inline TreewidthResult treewidth_subset_dp(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw InvalidInput("treewidth_subset_dp supports at most 20 vertices");
  if (n == 0) return decomposition_from_order(g, {});
  const auto adj = detail::to_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  // Q(S, v): vertices outside S+v reachable from v through S.
  auto q_size = [&](std::uint32_t s, int v) {
    std::uint32_t seen = 1u << v;
    std::uint32_t frontier = 1u << v;
    std::uint32_t reach = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        next |= static_cast<std::uint32_t>(adj[static_cast<std::size_t>(std::countr_zero(f))]);
      }
      next &= ~seen;
      seen |= next;
      reach |= next & ~s;
      frontier = next & s;
    }
    return std::popcount(reach);
  };
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, std::numeric_limits<std::int8_t>::max());
  std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t prev = s & ~(1u << v);
      const int cand = std::max<int>(tw[prev], q_size(prev, v));
      if (cand < tw[s]) {
        tw[s] = static_cast<std::int8_t>(cand);
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<Vertex> order;
  for (std::uint32_t s = full; s; s &= ~(1u << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  auto out = decomposition_from_order(g, order);
  return out;
}

}  // namespace thetakit
