#pragma once

// Brute-force reference implementations, straight from the definitions.
// Exponential in |V|; meant for graphs with at most ~12 vertices. None of
// these share code with the searches they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit::reference {

using Subset = std::uint32_t;

inline std::vector<Vertex> members(Subset s) {
  std::vector<Vertex> out;
  for (Vertex v = 0; s >> v; ++v)
    if ((s >> v) & 1u) out.push_back(v);
  return out;
}

inline int degree_in(const Graph& g, Vertex v, Subset s) {
  int d = 0;
  for (Vertex u : members(s))
    if (u != v && g.adjacent(u, v)) ++d;
  return d;
}

inline bool connected_in(const Graph& g, Subset s) {
  if (s == 0) return true;
  Subset seen = s & (~s + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v : members(seen)) {
      for (Vertex u : members(s & ~seen)) {
        if (g.adjacent(u, v)) {
          seen |= Subset{1} << u;
          grew = true;
        }
      }
    }
  }
  return seen == s;
}

inline int edges_in(const Graph& g, Subset s) {
  int e = 0;
  auto vs = members(s);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) ++e;
  return e;
}

inline bool is_tree_subset(const Graph& g, Subset s) {
  const auto k = static_cast<int>(members(s).size());
  return k > 0 && edges_in(g, s) == k - 1 && connected_in(g, s);
}

/// G[s] is a subdivision of K_{2,3}.
inline bool is_theta_subset(const Graph& g, Subset s) {
  std::vector<Vertex> branch;
  for (Vertex v : members(s)) {
    const int d = degree_in(g, v, s);
    if (d == 3) {
      branch.push_back(v);
    } else if (d != 2) {
      return false;
    }
  }
  if (branch.size() != 2 || g.adjacent(branch[0], branch[1])) return false;
  const Subset rest = s & ~(Subset{1} << branch[0]) & ~(Subset{1} << branch[1]);
  // Split the rest into components by flood fill.
  int comps = 0;
  Subset left = rest;
  while (left) {
    Subset comp = left & (~left + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex v : members(comp))
        for (Vertex u : members(left & ~comp))
          if (g.adjacent(u, v)) {
            comp |= Subset{1} << u;
            grew = true;
          }
    }
    bool to_x = false, to_y = false;
    for (Vertex v : members(comp)) {
      to_x = to_x || g.adjacent(v, branch[0]);
      to_y = to_y || g.adjacent(v, branch[1]);
    }
    if (!to_x || !to_y) return false;
    ++comps;
    left &= ~comp;
  }
  return comps == 3;
}

inline bool has_theta(const Graph& g) {
  const Subset all = (Subset{1} << g.order()) - 1;
  for (Subset s = 1; s <= all && s != 0; ++s)
    if (__builtin_popcount(s) >= 5 && is_theta_subset(g, s)) return true;
  return false;
}

/// G[s] is the line graph of a theta: two disjoint triangles joined by three rails.
inline bool is_prism_subset(const Graph& g, Subset s) {
  auto vs = members(s);
  std::vector<std::vector<Vertex>> triangles;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (g.adjacent(vs[i], vs[j]) && g.adjacent(vs[j], vs[k]) && g.adjacent(vs[i], vs[k]))
          triangles.push_back({vs[i], vs[j], vs[k]});
  if (triangles.size() != 2) return false;
  Subset t1 = 0, t2 = 0;
  for (Vertex v : triangles[0]) t1 |= Subset{1} << v;
  for (Vertex v : triangles[1]) t2 |= Subset{1} << v;
  if (t1 & t2) return false;
  for (Vertex v : vs) {
    const int want = ((t1 | t2) >> v & 1u) ? 3 : 2;
    if (degree_in(g, v, s) != want) return false;
  }
  // Dropping triangle edges must leave three paths from t1 to t2.
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Vertex a = vs[i], b = vs[j];
      if (!g.adjacent(a, b)) continue;
      const bool tri = ((t1 >> a & 1u) && (t1 >> b & 1u)) || ((t2 >> a & 1u) && (t2 >> b & 1u));
      if (tri) continue;
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
  Subset covered = 0;
  for (Vertex start : triangles[0]) {
    Vertex prev = -1, cur = start;
    covered |= Subset{1} << cur;
    while (!(t2 >> cur & 1u)) {
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      Vertex next = -1;
      for (Vertex u : nb)
        if (u != prev) next = u;
      if (next < 0 || nb.size() > 2) return false;
      prev = cur;
      cur = next;
      covered |= Subset{1} << cur;
    }
  }
  return covered == s;
}

inline bool has_prism(const Graph& g) {
  const Subset all = (Subset{1} << g.order()) - 1;
  for (Subset s = 1; s <= all && s != 0; ++s)
    if (__builtin_popcount(s) >= 6 && is_prism_subset(g, s)) return true;
  return false;
}

inline int clique_number(const Graph& g) {
  int best = 0;
  const Subset all = (Subset{1} << g.order()) - 1;
  for (Subset s = 1; s <= all && s != 0; ++s) {
    const int k = __builtin_popcount(s);
    if (k > best && edges_in(g, s) == k * (k - 1) / 2) best = k;
  }
  return best;
}

/// Lexicographically least injective map of H into G that preserves edges and non-edges.
inline std::optional<std::vector<Vertex>> least_embedding(const Graph& g, const Graph& h) {
  const int k = h.order();
  std::vector<Vertex> map;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(map.size()) == k) {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (h.adjacent(i, j) != g.adjacent(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]))
            return false;
      return true;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      map.push_back(v);
      if (rec()) return true;
      map.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  if (rec()) return map;
  return std::nullopt;
}

/// Some induced tree of G contains at least three vertices of Z.
inline bool has_three_in_a_tree(const Graph& g, const VertexSet& z) {
  Subset zs = 0;
  for (Vertex v : z) zs |= Subset{1} << v;
  const Subset all = (Subset{1} << g.order()) - 1;
  for (Subset s = 1; s <= all && s != 0; ++s)
    if (__builtin_popcount(s & zs) >= 3 && is_tree_subset(g, s)) return true;
  return false;
}

/// Interiors of every induced x-y path, as vertex subsets.
inline std::vector<Subset> induced_path_interiors(const Graph& g, Vertex x, Vertex y) {
  std::vector<Subset> out;
  const Subset all = (Subset{1} << g.order()) - 1;
  const Subset ends = (Subset{1} << x) | (Subset{1} << y);
  const Subset others = all & ~ends;
  // Iterate every subset of `others`, including the empty one.
  Subset p = 0;
  do {
    const Subset s = p | ends;
    bool ok = degree_in(g, x, s) == 1 && degree_in(g, y, s) == 1;
    for (Vertex v : members(p))
      if (ok && degree_in(g, v, s) != 2) ok = false;
    if (ok && is_tree_subset(g, s)) out.push_back(p);
    p = (p - others) & others;
  } while (p != 0);
  return out;
}

/// Largest number of pairwise internally disjoint induced x-y paths.
inline int max_disjoint_induced_paths(const Graph& g, Vertex x, Vertex y) {
  const auto paths = induced_path_interiors(g, x, y);
  int best = 0;
  std::function<void(std::size_t, Subset, int)> rec = [&](std::size_t i, Subset used, int count) {
    best = std::max(best, count);
    if (count + static_cast<int>(paths.size() - i) <= best) return;
    for (std::size_t j = i; j < paths.size(); ++j)
      if ((paths[j] & used) == 0) rec(j + 1, used | paths[j], count + 1);
  };
  rec(0, 0, 0);
  return best;
}

inline int lambda_star(const Graph& g) {
  int best = 0;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (!g.adjacent(x, y)) best = std::max(best, max_disjoint_induced_paths(g, x, y));
  return best;
}

/// Largest stable set size.
inline int stability_number(const Graph& g) {
  int best = 0;
  const Subset all = (Subset{1} << g.order()) - 1;
  for (Subset s = 1; s <= all && s != 0; ++s) {
    const int k = __builtin_popcount(s);
    if (k > best && edges_in(g, s) == 0) best = k;
  }
  return best;
}

/// Digraph stable set of size k among vertices of out-degree at most r, by subsets.
inline bool has_low_outdegree_stable(const Digraph& d, int r, int k) {
  const Graph u = d.underlying();
  const Subset all = (Subset{1} << d.order()) - 1;
  for (Subset s = 1; s <= all && s != 0; ++s) {
    if (__builtin_popcount(s) != k) continue;
    bool ok = edges_in(u, s) == 0;
    for (Vertex v : members(s))
      if (ok && d.out_degree(v) > r) ok = false;
    if (ok) return true;
  }
  return k == 0;
}

/// Induced K_{s,s}: two disjoint stable s-sets with all s^2 edges between them.
inline bool has_induced_biclique(const Graph& g, int s) {
  const Subset all = (Subset{1} << g.order()) - 1;
  for (Subset left = 1; left <= all && left != 0; ++left) {
    if (__builtin_popcount(left) != s || edges_in(g, left) != 0) continue;
    for (Subset right = 1; right <= all && right != 0; ++right) {
      if (right & left || __builtin_popcount(right) != s || edges_in(g, right) != 0) continue;
      if (edges_in(g, left | right) == s * s) return true;
    }
  }
  return false;
}

/// Largest pairwise anticomplete subfamily, by subsets of the family.
inline int max_anticomplete_subfamily(const Graph& g, const std::vector<VertexSet>& xs) {
  const int m = static_cast<int>(xs.size());
  int best = 0;
  for (Subset s = 1; s < (Subset{1} << m); ++s) {
    const int k = __builtin_popcount(s);
    if (k <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j)
        if ((s >> i & 1) && (s >> j & 1)) ok = are_anticomplete(g, xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]);
    if (ok) best = k;
  }
  return best;
}

/// Some s-set of vertices of out-degree >= qr has the fan-out property; brute force
/// over assignments of out-neighbours.
inline bool has_fanout_set(const Digraph& d, int q, int r, int s) {
  const int n = d.order();
  const Subset all = (Subset{1} << n) - 1;
  auto assign = [&](const std::vector<Vertex>& vs, Subset banned) {
    std::function<bool(std::size_t, int, Subset)> rec = [&](std::size_t i, int left, Subset used) -> bool {
      if (i == vs.size()) return true;
      if (left == 0) return rec(i + 1, r, used);
      for (Vertex u = 0; u < n; ++u) {
        const Subset bit = Subset{1} << u;
        if ((banned | used) & bit || !d.has_arc(vs[i], u)) continue;
        if (rec(i, left - 1, used | bit)) return true;
      }
      return false;
    };
    return rec(0, r, 0);
  };
  for (Subset s_set = 0; s_set <= all; ++s_set) {
    if (__builtin_popcount(s_set) != s) continue;
    bool ok = true;
    for (Vertex v : members(s_set))
      if (d.out_degree(v) < q * r) ok = false;
    if (!ok) continue;
    for (Subset sub = s_set;; sub = (sub - 1) & s_set) {
      if (__builtin_popcount(sub) == q && !assign(members(sub), s_set)) {
        ok = false;
        break;
      }
      if (sub == 0) break;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace thetakit::reference
