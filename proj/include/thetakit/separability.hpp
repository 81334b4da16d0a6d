#pragma once

// Maximum families of pairwise internally disjoint induced x-y paths.
// Exact up to a vertex cap by enumerating the induced paths and packing
// them; above the cap a greedy lower bound and a Menger upper bound are
// reported instead.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "thetakit/detectors.hpp"
#include "thetakit/flow.hpp"
#include "thetakit/graph.hpp"

namespace thetakit {

struct SeparabilityCaps {
  int exact_vertices = 16;
};

struct PathPacking {
  int count = 0;  // size of `family`, a lower bound when !exact
  int upper_bound = 0;
  bool exact = true;
  PathFamily family;
};

namespace detail {

/// Vertex-disjoint x-y path count (Menger); bounds the induced packing from above.
inline int menger_bound(const Graph& g, Vertex x, Vertex y) {
  const int n = g.order();
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == x || v == y) ? n : 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  return net.max_flow(2 * x + 1, 2 * y);
}

/// Repeated shortest paths in what is left; a shortest path is always induced.
inline PathFamily greedy_family(const Graph& g, Vertex x, Vertex y) {
  PathFamily fam{x, y, {}};
  Bits alive = g.full_set();
  while (true) {
    std::vector<Vertex> prev(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{x};
    prev[static_cast<std::size_t>(x)] = x;
    for (std::size_t i = 0; i < queue.size() && prev[static_cast<std::size_t>(y)] < 0; ++i) {
      Bits next = g.neighbors(queue[i]) & alive;
      for_each_bit(next, [&](Vertex v) {
        if (prev[static_cast<std::size_t>(v)] < 0) {
          prev[static_cast<std::size_t>(v)] = queue[i];
          queue.push_back(v);
        }
      });
    }
    if (prev[static_cast<std::size_t>(y)] < 0) break;
    std::vector<Vertex> p{y};
    while (p.back() != x) p.push_back(prev[static_cast<std::size_t>(p.back())]);
    std::reverse(p.begin(), p.end());
    for (Vertex v : interior(p)) alive.reset(static_cast<std::size_t>(v));
    fam.paths.push_back(std::move(p));
  }
  return fam;
}

}  // namespace detail

/// Every induced x-y path, in DFS order by first interior vertex.
inline std::vector<std::vector<Vertex>> induced_xy_paths(const Graph& g, Vertex x, Vertex y) {
  std::vector<std::vector<Vertex>> out;
  std::stop_token never;
  detail::PathWalker walker(g, never);
  Bits allowed = g.full_set() - detail::closed_nbhd(g, x);
  allowed.reset(static_cast<std::size_t>(y));
  for_each_bit(g.neighbors(x), [&](Vertex u) {
    walker.walk(u, allowed, [&](const std::vector<Vertex>& p) {
      if (!g.adjacent(p.back(), y)) return 0;
      std::vector<Vertex> full{x};
      full.insert(full.end(), p.begin(), p.end());
      full.push_back(y);
      out.push_back(std::move(full));
      return 1;
    });
  });
  return out;
}

inline PathPacking max_internally_disjoint_paths(const Graph& g, Vertex x, Vertex y,
                                                 const SeparabilityCaps& caps = {}) {
  if (!g.valid(x) || !g.valid(y)) throw InvalidInput("pair out of range");
  if (x == y) throw InvalidInput("x and y must differ");
  if (g.adjacent(x, y)) throw InvalidInput("x and y are adjacent");

  PathPacking out;
  out.upper_bound = detail::menger_bound(g, x, y);
  if (g.order() > std::min(caps.exact_vertices, 64)) {
    out.exact = false;
    out.family = detail::greedy_family(g, x, y);
    out.count = static_cast<int>(out.family.paths.size());
    return out;
  }

  // Each path uses exactly one neighbour of x; branch on them in order.
  const auto paths = induced_xy_paths(g, x, y);
  std::vector<Vertex> firsts;
  for_each_bit(g.neighbors(x), [&](Vertex u) { firsts.push_back(u); });
  std::vector<std::vector<std::size_t>> by_first(firsts.size());
  std::vector<std::uint64_t> masks(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (Vertex v : interior(paths[i])) masks[i] |= std::uint64_t{1} << v;
    const auto slot = std::lower_bound(firsts.begin(), firsts.end(), paths[i][1]) - firsts.begin();
    by_first[static_cast<std::size_t>(slot)].push_back(i);
  }
  std::uint64_t ny = 0;
  for_each_bit(g.neighbors(y), [&](Vertex v) { ny |= std::uint64_t{1} << v; });

  std::vector<std::size_t> chosen, best;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t used) {
    if (chosen.size() > best.size()) best = chosen;
    if (static_cast<int>(best.size()) == out.upper_bound) return;
    const auto free_ends = static_cast<std::size_t>(__builtin_popcountll(ny & ~used));
    const std::size_t room = std::min(firsts.size() - i, free_ends);
    if (chosen.size() + room <= best.size()) return;
    for (std::size_t p : by_first[i]) {
      if (masks[p] & used) continue;
      chosen.push_back(p);
      rec(i + 1, used | masks[p]);
      chosen.pop_back();
      if (static_cast<int>(best.size()) == out.upper_bound) return;
    }
    rec(i + 1, used | (std::uint64_t{1} << firsts[i]));
  };
  if (!firsts.empty()) rec(0, 0);

  out.family = {x, y, {}};
  for (std::size_t p : best) out.family.paths.push_back(paths[p]);
  out.count = static_cast<int>(best.size());
  out.upper_bound = out.count;
  return out;
}

struct SeparabilityReport {
  int lambda_star = 0;
  bool has_pair = false;  // false: no nonadjacent pair, separable for every lambda
  bool exact = true;
  int upper_bound = 0;
  Vertex x = -1;
  Vertex y = -1;
  PathFamily witness;

  /// No two nonadjacent vertices joined by `lambda` internally disjoint induced paths.
  [[nodiscard]] bool separable(int lambda) const { return lambda_star < lambda; }
};

/// Maximum over nonadjacent pairs, first maximising pair in lexicographic order.
inline SeparabilityReport separability(const Graph& g, const SeparabilityCaps& caps = {}) {
  SeparabilityReport rep;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (g.adjacent(x, y)) continue;
      if (rep.has_pair && rep.exact && detail::menger_bound(g, x, y) <= rep.lambda_star) continue;
      auto pk = max_internally_disjoint_paths(g, x, y, caps);
      rep.exact = rep.exact && pk.exact;
      rep.upper_bound = std::max(rep.upper_bound, pk.upper_bound);
      if (!rep.has_pair || pk.count > rep.lambda_star) {
        rep.has_pair = true;
        rep.lambda_star = pk.count;
        rep.x = x;
        rep.y = y;
        rep.witness = std::move(pk.family);
      }
    }
  }
  rep.upper_bound = std::max(rep.upper_bound, rep.lambda_star);
  return rep;
}

}  // namespace thetakit
