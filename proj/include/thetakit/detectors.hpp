#pragma once

// Exhaustive desk-scale detectors. Every search walks candidates in
// increasing vertex order, so the first witness reported is the
// lexicographically least one; "none" is only returned after the whole
// space inside the caps has been explored.

#include <array>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "thetakit/flow.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/graph.hpp"

namespace thetakit {

enum class SearchStatus { found, none, cap_exceeded, cancelled };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::cap_exceeded: return "cap_exceeded";
    case SearchStatus::cancelled: return "cancelled";
  }
  return "?";
}

struct SearchCaps {
  int max_vertices = 64;
  int wall_line_vertices = 32;
  std::size_t max_patterns = 20000;
  std::stop_token stop;

  /// Defaults, optionally overridden by THETAKIT_CAPS="max_vertices,wall_line_vertices".
  static SearchCaps from_env() {
    SearchCaps caps;
    if (const char* env = std::getenv("THETAKIT_CAPS")) {
      std::string s(env);
      auto comma = s.find(',');
      try {
        caps.max_vertices = std::stoi(s.substr(0, comma));
        if (comma != std::string::npos) caps.wall_line_vertices = std::stoi(s.substr(comma + 1));
      } catch (const std::exception&) {
        throw InvalidInput("THETAKIT_CAPS must look like \"64,32\"");
      }
    }
    return caps;
  }
};

template <class W>
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<W> witness;

  [[nodiscard]] bool found() const { return status == SearchStatus::found; }
  explicit operator bool() const { return found(); }

  static SearchResult hit(W w) { return {SearchStatus::found, std::move(w)}; }
  static SearchResult miss(SearchStatus s = SearchStatus::none) { return {s, std::nullopt}; }
};

/// Pattern vertex i is sent to host vertex map[i].
struct Embedding {
  std::vector<Vertex> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

inline Validation is_induced_embedding(const Graph& g, const Graph& h, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != h.order()) return Validation::fail("map size differs from pattern order");
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (!g.valid(e.map[i])) return Validation::fail("image out of range");
    for (std::size_t j = i + 1; j < e.map.size(); ++j) {
      if (e.map[i] == e.map[j]) return Validation::fail("map is not injective");
      if (h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) != g.adjacent(e.map[i], e.map[j])) {
        return Validation::fail("pair (" + std::to_string(i) + "," + std::to_string(j) + ") not preserved");
      }
    }
  }
  return Validation::pass();
}

struct ThetaWitness {
  Vertex x = 0;
  Vertex y = 0;
  std::array<std::vector<Vertex>, 3> paths;

  friend bool operator==(const ThetaWitness&, const ThetaWitness&) = default;
};

inline Validation is_theta_witness(const Graph& g, const ThetaWitness& w) {
  if (!g.valid(w.x) || !g.valid(w.y) || w.x == w.y) return Validation::fail("bad branch vertices");
  if (g.adjacent(w.x, w.y)) return Validation::fail("branch vertices adjacent");
  for (std::size_t i = 0; i < 3; ++i) {
    if (w.paths[i].size() < 3) return Validation::fail("path " + std::to_string(i) + " has length < 2");
    if (!is_induced_path(g, w.paths[i], w.x, w.y)) {
      return Validation::fail("path " + std::to_string(i) + " is not induced");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!are_anticomplete(g, VertexSet(interior(w.paths[i])), VertexSet(interior(w.paths[j])))) {
        return Validation::fail("interiors " + std::to_string(i) + "," + std::to_string(j) + " touch");
      }
    }
  }
  return Validation::pass();
}

namespace detail {

inline Bits singleton(int n, Vertex v) {
  Bits b(static_cast<std::size_t>(n));
  b.set(static_cast<std::size_t>(v));
  return b;
}

inline Bits closed_nbhd(const Graph& g, Vertex v) {
  Bits b = g.neighbors(v);
  b.set(static_cast<std::size_t>(v));
  return b;
}

/// Enumerate induced paths that start with `first` (already chosen) and
/// then extend through `allowed`. `on_path` is called for every prefix
/// (including the single vertex) and returns: 0 continue, 1 stop extending
/// this prefix, 2 abort everything.
class PathWalker {
 public:
  using Visitor = std::function<int(const std::vector<Vertex>&)>;

  PathWalker(const Graph& g, const std::stop_token& stop) : g_(g), stop_(stop) {}

  /// Reentrant: visitors may start nested walks on the same walker.
  bool walk(Vertex first, const Bits& allowed, const Visitor& on_path) {
    std::vector<Vertex> path{first};
    Bits blocked = g_.empty_set();
    return extend(path, blocked, allowed, on_path);
  }

  [[nodiscard]] bool cancelled() const { return cancelled_; }

 private:
  // blocked = closed neighbourhoods of every path vertex except the last.
  bool extend(std::vector<Vertex>& path, const Bits& blocked, const Bits& allowed, const Visitor& on_path) {
    if (stop_.stop_requested()) {
      cancelled_ = true;
      return false;
    }
    const int verdict = on_path(path);
    if (verdict == 2) return false;
    if (verdict == 1) return true;
    const Vertex end = path.back();
    Bits next = g_.neighbors(end) & allowed;
    next -= blocked;
    for (Vertex v : path) next.reset(static_cast<std::size_t>(v));
    Bits blocked2 = blocked | closed_nbhd(g_, end);
    for (auto i = next.find_first(); i != Bits::npos; i = next.find_next(i)) {
      path.push_back(static_cast<Vertex>(i));
      const bool go = extend(path, blocked2, allowed, on_path);
      path.pop_back();
      if (!go) return false;
    }
    return true;
  }

  const Graph& g_;
  const std::stop_token& stop_;
  bool cancelled_ = false;
};

/// First set bit strictly above `floor` (floor may be -1).
inline std::size_t first_above(const Bits& b, Vertex floor) {
  return floor < 0 ? b.find_first() : b.find_next(static_cast<std::size_t>(floor));
}

/// Does N(v) contain three pairwise nonadjacent vertices?
inline bool has_stable_triple(const Graph& g, const Bits& within) {
  for (auto a = within.find_first(); a != Bits::npos; a = within.find_next(a)) {
    Bits rest = within - g.neighbors(static_cast<Vertex>(a));
    for (auto b = rest.find_next(a); b != Bits::npos; b = rest.find_next(b)) {
      Bits third = rest - g.neighbors(static_cast<Vertex>(b));
      if (third.find_next(b) != Bits::npos) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Lexicographically least induced embedding of `h` into `g`.
inline SearchResult<Embedding> find_induced(const Graph& g, const Graph& h, const SearchCaps& caps = {}) {
  const int k = h.order();
  const int n = g.order();
  if (n > caps.max_vertices) return SearchResult<Embedding>::miss(SearchStatus::cap_exceeded);
  if (k > n) return SearchResult<Embedding>::miss();
  if (k == 0) return SearchResult<Embedding>::hit({});

  std::vector<Vertex> map(static_cast<std::size_t>(k), -1);
  Bits used = g.empty_set();
  bool cancelled = false;

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == k) return true;
    if (caps.stop.stop_requested()) {
      cancelled = true;
      return false;
    }
    Bits cand = g.full_set() - used;
    for (int j = 0; j < i; ++j) {
      const Vertex fj = map[static_cast<std::size_t>(j)];
      if (h.adjacent(i, j)) {
        cand &= g.neighbors(fj);
      } else {
        cand -= g.neighbors(fj);
      }
    }
    const int need = h.degree(i);
    for (auto c = cand.find_first(); c != Bits::npos; c = cand.find_next(c)) {
      const auto v = static_cast<Vertex>(c);
      if (g.degree(v) < need) continue;
      map[static_cast<std::size_t>(i)] = v;
      used.set(c);
      if (place(i + 1)) return true;
      used.reset(c);
      if (cancelled) return false;
    }
    return false;
  };

  if (place(0)) return SearchResult<Embedding>::hit({map});
  return SearchResult<Embedding>::miss(cancelled ? SearchStatus::cancelled : SearchStatus::none);
}

/// Least theta by (x, y, first interior vertices of the three paths).
inline SearchResult<ThetaWitness> find_theta(const Graph& g, const SearchCaps& caps = {}) {
  using R = SearchResult<ThetaWitness>;
  const int n = g.order();
  if (n > caps.max_vertices) return R::miss(SearchStatus::cap_exceeded);

  detail::PathWalker walker(g, caps.stop);
  std::vector<char> branchy(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) branchy[static_cast<std::size_t>(v)] = detail::has_stable_triple(g, g.neighbors(v));

  for (Vertex x = 0; x < n; ++x) {
    if (!branchy[static_cast<std::size_t>(x)]) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (!branchy[static_cast<std::size_t>(y)] || g.adjacent(x, y)) continue;
      ThetaWitness w{x, y, {}};
      const Bits& ny = g.neighbors(y);

      // Choose path `idx` with first interior vertex above `floor`, inside `allowed`.
      std::function<bool(int, Vertex, const Bits&)> choose = [&](int idx, Vertex floor, const Bits& allowed) -> bool {
        if (idx == 3) return true;
        Bits starts = g.neighbors(x) & allowed;
        for (auto s = detail::first_above(starts, floor); s != Bits::npos; s = starts.find_next(s)) {
          bool done = false;
          Bits walk_allowed = allowed;
          walk_allowed -= g.neighbors(x);
          const bool ok = walker.walk(static_cast<Vertex>(s), walk_allowed, [&](const std::vector<Vertex>& p) {
            if (!ny.test(static_cast<std::size_t>(p.back()))) return 0;
            // Induced: once the end touches y the path must close there.
            Bits inner = g.empty_set();
            for (Vertex v : p) inner |= detail::closed_nbhd(g, v);
            Bits rest = allowed - inner;
            w.paths[static_cast<std::size_t>(idx)].assign(1, x);
            w.paths[static_cast<std::size_t>(idx)].insert(w.paths[static_cast<std::size_t>(idx)].end(), p.begin(), p.end());
            w.paths[static_cast<std::size_t>(idx)].push_back(y);
            if (choose(idx + 1, static_cast<Vertex>(s), rest)) {
              done = true;
              return 2;
            }
            return walker.cancelled() ? 2 : 1;
          });
          if (done) return true;
          if (!ok && walker.cancelled()) return false;
        }
        return false;
      };

      Bits allowed = g.full_set();
      allowed.reset(static_cast<std::size_t>(x));
      allowed.reset(static_cast<std::size_t>(y));
      if (choose(0, -1, allowed)) return R::hit(w);
      if (walker.cancelled()) return R::miss(SearchStatus::cancelled);
    }
  }
  return R::miss();
}

struct PrismMatch {
  int l1 = 0;
  int l2 = 0;
  int l3 = 0;
  Embedding embedding;  // into prism(l1, l2, l3)
};

/// Least prism by triangle (a1<a2<a3), then the three rails in order.
inline SearchResult<PrismMatch> find_prism(const Graph& g, const SearchCaps& caps = {}) {
  using R = SearchResult<PrismMatch>;
  const int n = g.order();
  if (n > caps.max_vertices) return R::miss(SearchStatus::cap_exceeded);
  detail::PathWalker w1(g, caps.stop), w2(g, caps.stop), w3(g, caps.stop);
  std::array<std::vector<Vertex>, 3> rails;

  for (Vertex a1 = 0; a1 < n; ++a1) {
    Bits n1 = g.neighbors(a1);
    for (auto a2i = n1.find_next(static_cast<std::size_t>(a1)); a2i != Bits::npos; a2i = n1.find_next(a2i)) {
      const auto a2 = static_cast<Vertex>(a2i);
      Bits n12 = n1 & g.neighbors(a2);
      for (auto a3i = n12.find_next(a2i); a3i != Bits::npos; a3i = n12.find_next(a3i)) {
        const auto a3 = static_cast<Vertex>(a3i);
        bool found = false;

        // Rail 1: vertices after a1 avoid N[a2] and N[a3].
        Bits allow1 = g.full_set() - (detail::closed_nbhd(g, a2) | detail::closed_nbhd(g, a3));
        w1.walk(a1, allow1, [&](const std::vector<Vertex>& p1) {
          if (p1.size() == 1) return 0;
          const Vertex b1 = p1.back();
          Bits p1set = g.empty_set();
          for (Vertex v : p1) p1set.set(static_cast<std::size_t>(v));
          // Rail 2 from a2: interior vertices avoid N[a1], N[a3] and N[rail1 minus a1];
          // its last vertex must see b1 and nothing else of rail 1 past a1.
          Bits allow2 = g.full_set() - (detail::closed_nbhd(g, a1) | detail::closed_nbhd(g, a3) | p1set);
          w2.walk(a2, allow2, [&](const std::vector<Vertex>& p2) {
            const Vertex b2 = p2.back();
            if (p2.size() == 1) return 0;
            Bits seen1 = g.neighbors(b2) & (p1set - detail::singleton(n, a1));
            const bool end_ok = seen1.count() == 1 && seen1.test(static_cast<std::size_t>(b1));
            const bool clean = seen1.none();
            if (end_ok) {
              rails[0] = p1;
              rails[1] = p2;
              Bits p2set = g.empty_set();
              for (Vertex v : p2) p2set.set(static_cast<std::size_t>(v));
              Bits allow3 = g.full_set() - (detail::closed_nbhd(g, a1) | detail::closed_nbhd(g, a2) | p1set | p2set);
              w3.walk(a3, allow3, [&](const std::vector<Vertex>& p3) {
                if (p3.size() == 1) return 0;
                const Vertex b3 = p3.back();
                Bits s1 = g.neighbors(b3) & (p1set - detail::singleton(n, a1));
                Bits s2 = g.neighbors(b3) & (p2set - detail::singleton(n, a2));
                const bool e_ok = s1.count() == 1 && s1.test(static_cast<std::size_t>(b1)) && s2.count() == 1 &&
                                  s2.test(static_cast<std::size_t>(b2));
                if (e_ok) {
                  rails[2] = p3;
                  found = true;
                  return 2;
                }
                return (s1.none() && s2.none()) ? 0 : 1;
              });
              if (found) return 2;
            }
            return clean ? 0 : 1;
          });
          return found ? 2 : 0;
        });
        if (found) {
          PrismMatch m;
          m.l1 = static_cast<int>(rails[0].size());
          m.l2 = static_cast<int>(rails[1].size());
          m.l3 = static_cast<int>(rails[2].size());
          const Graph th = theta_graph(m.l1, m.l2, m.l3);
          const auto edges = th.edges();
          auto index_of = [&](Vertex u, Vertex v) {
            const Edge e = normalized({u, v});
            return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
          };
          m.embedding.map.assign(edges.size(), -1);
          // theta_graph numbers branch vertices 0,1 then the interiors of path 1, 2, 3 in order.
          Vertex next = 2;
          for (std::size_t r = 0; r < 3; ++r) {
            std::vector<Vertex> tv{0};
            for (std::size_t i = 1; i < rails[r].size(); ++i) tv.push_back(next++);
            tv.push_back(1);
            for (std::size_t i = 0; i + 1 < tv.size(); ++i) m.embedding.map[index_of(tv[i], tv[i + 1])] = rails[r][i];
          }
          return R::hit(m);
        }
        if (w1.cancelled() || w2.cancelled() || w3.cancelled()) return R::miss(SearchStatus::cancelled);
      }
    }
  }
  return R::miss();
}

struct CliqueResult {
  int size = 0;
  VertexSet witness;
};

/// Exact clique number by greedy-colouring branch and bound.
inline CliqueResult clique_number(const Graph& g) {
  CliqueResult best;
  std::vector<Vertex> current;

  std::function<void(Bits)> expand = [&](Bits cand) {
    // Greedy colouring of the candidates gives an upper bound per vertex.
    std::vector<Vertex> order;
    std::vector<int> colour;
    Bits uncoloured = cand;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits avail = uncoloured;
      while (avail.any()) {
        const auto v = static_cast<Vertex>(avail.find_first());
        avail.reset(static_cast<std::size_t>(v));
        avail -= g.neighbors(v);
        uncoloured.reset(static_cast<std::size_t>(v));
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (static_cast<int>(current.size()) + colour[i] <= best.size) return;
      const Vertex v = order[i];
      current.push_back(v);
      Bits next = cand & g.neighbors(v);
      if (next.none()) {
        if (static_cast<int>(current.size()) > best.size) {
          best.size = static_cast<int>(current.size());
          best.witness = VertexSet(current);
        }
      } else {
        expand(next);
      }
      current.pop_back();
      cand.reset(static_cast<std::size_t>(v));
    }
  };
  if (g.order() > 0) expand(g.full_set());
  return best;
}

inline CliqueResult maximum_stable_set(const Graph& g) { return clique_number(complement(g)); }

inline SearchResult<Embedding> find_biclique(const Graph& g, int s, const SearchCaps& caps = {}) {
  if (s < 1) throw InvalidInput("biclique side must be positive");
  return find_induced(g, biclique(s, s), caps);
}

struct ConstellationWitness {
  VertexSet centers;
  std::vector<std::vector<Vertex>> paths;
};

inline Validation validate_constellation_witness(const Graph& g, const ConstellationWitness& w, int s, int l) {
  Bits mask = w.centers.to_bits(g.order());
  for (const auto& p : w.paths) {
    for (Vertex v : p) {
      if (!g.valid(v)) return Validation::fail("path vertex out of range");
      if (mask.test(static_cast<std::size_t>(v))) return Validation::fail("vertex repeated");
      mask.set(static_cast<std::size_t>(v));
    }
  }
  return is_constellation(g, mask, w.centers, s, l);
}

/// Least induced (s,l)-constellation: stable centres first, then paths by least end.
inline SearchResult<ConstellationWitness> find_constellation(const Graph& g, int s, int l,
                                                             const SearchCaps& caps = {}) {
  using R = SearchResult<ConstellationWitness>;
  if (s < 1 || l < 1) throw InvalidInput("constellation parameters must be positive");
  const int n = g.order();
  if (n > caps.max_vertices) return R::miss(SearchStatus::cap_exceeded);
  detail::PathWalker walker(g, caps.stop);
  std::vector<Vertex> centers;
  std::vector<std::vector<Vertex>> paths;
  Bits reach = g.empty_set();

  // Pick paths one at a time with increasing least end vertex.
  std::function<bool(const Bits&, Vertex)> pick_paths = [&](const Bits& allowed, Vertex floor) -> bool {
    if (static_cast<int>(paths.size()) == l) return true;
    Bits starts = allowed & reach;
    for (auto st = detail::first_above(starts, floor); st != Bits::npos; st = starts.find_next(st)) {
      const auto start = static_cast<Vertex>(st);
      bool done = false;
      // Inner vertices may lie below `start`; only the far end must not.
      walker.walk(start, allowed, [&](const std::vector<Vertex>& p) {
        const Vertex end = p.back();
        if (!reach.test(static_cast<std::size_t>(end)) || (p.size() > 1 && end < start)) return 0;
        Bits pset = g.empty_set();
        for (Vertex v : p) pset.set(static_cast<std::size_t>(v));
        for (Vertex c : centers)
          if ((g.neighbors(c) & pset).none()) return 0;
        Bits blocked = g.empty_set();
        for (Vertex v : p) blocked |= detail::closed_nbhd(g, v);
        paths.push_back(p);
        if (pick_paths(allowed - blocked, start)) {
          done = true;
          return 2;
        }
        paths.pop_back();
        return walker.cancelled() ? 2 : 0;
      });
      if (done) return true;
      if (walker.cancelled()) return false;
    }
    return false;
  };

  std::function<bool(const Bits&, Vertex)> pick_centers = [&](const Bits& cand, Vertex floor) -> bool {
    if (static_cast<int>(centers.size()) == s) {
      reach = g.empty_set();
      Bits cset = g.empty_set();
      for (Vertex c : centers) {
        reach |= g.neighbors(c);
        cset.set(static_cast<std::size_t>(c));
      }
      return pick_paths(g.full_set() - cset, -1);
    }
    for (auto c = detail::first_above(cand, floor); c != Bits::npos; c = cand.find_next(c)) {
      centers.push_back(static_cast<Vertex>(c));
      Bits next = cand - detail::closed_nbhd(g, static_cast<Vertex>(c));
      if (pick_centers(next, static_cast<Vertex>(c))) return true;
      centers.pop_back();
      if (walker.cancelled()) return false;
    }
    return false;
  };

  if (pick_centers(g.full_set(), -1)) return R::hit({VertexSet(centers), paths});
  return R::miss(walker.cancelled() ? SearchStatus::cancelled : SearchStatus::none);
}

struct TreeWitness {
  VertexSet vertices;
  std::array<Vertex, 3> terminals{};
};

inline Validation is_tree_witness(const Graph& g, const VertexSet& z, const TreeWitness& w) {
  check_range(g, w.vertices);
  for (Vertex t : w.terminals) {
    if (!w.vertices.contains(t)) return Validation::fail("terminal not in tree");
    if (!z.contains(t)) return Validation::fail("terminal not in Z");
  }
  if (w.terminals[0] == w.terminals[1] || w.terminals[1] == w.terminals[2] || w.terminals[0] == w.terminals[2]) {
    return Validation::fail("terminals not distinct");
  }
  if (!induces_tree(g, w.vertices.to_bits(g.order()))) return Validation::fail("vertex set does not induce a tree");
  return Validation::pass();
}

/// Least induced tree through three vertices of the stable set Z.
inline SearchResult<TreeWitness> three_in_a_tree(const Graph& g, const VertexSet& z, const SearchCaps& caps = {}) {
  using R = SearchResult<TreeWitness>;
  check_range(g, z);
  if (z.size() < 3) throw InvalidInput("three_in_a_tree needs |Z| >= 3");
  if (!is_stable_set(g, z)) throw InvalidInput("three_in_a_tree needs Z stable");
  const int n = g.order();
  if (n > caps.max_vertices) return R::miss(SearchStatus::cap_exceeded);
  detail::PathWalker walker(g, caps.stop);

  // Leg from centre c to target t; legs beyond the centre stay pairwise anticomplete.
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      for (std::size_t k = j + 1; k < z.size(); ++k) {
        const std::array<Vertex, 3> t{z[i], z[j], z[k]};
        for (Vertex c = 0; c < n; ++c) {
          std::array<std::vector<Vertex>, 3> legs;
          std::function<bool(std::size_t, const Bits&)> leg = [&](std::size_t idx, const Bits& allowed) -> bool {
            if (idx == 3) return true;
            if (t[idx] == c) {
              legs[idx] = {c};
              return leg(idx + 1, allowed);
            }
            bool done = false;
            Bits starts = g.neighbors(c) & allowed;
            Bits walk_allowed = allowed - g.neighbors(c);
            for (auto s = starts.find_first(); s != Bits::npos && !done; s = starts.find_next(s)) {
              walker.walk(static_cast<Vertex>(s), walk_allowed, [&](const std::vector<Vertex>& p) {
                if (p.back() != t[idx]) return 0;
                Bits blocked = g.empty_set();
                for (Vertex v : p) blocked |= detail::closed_nbhd(g, v);
                legs[idx] = {c};
                legs[idx].insert(legs[idx].end(), p.begin(), p.end());
                if (leg(idx + 1, allowed - blocked)) {
                  done = true;
                  return 2;
                }
                return walker.cancelled() ? 2 : 1;
              });
              if (walker.cancelled()) return false;
            }
            return done;
          };
          Bits allowed = g.full_set();
          allowed.reset(static_cast<std::size_t>(c));
          if (leg(0, allowed)) {
            std::vector<Vertex> all;
            for (const auto& l : legs) all.insert(all.end(), l.begin(), l.end());
            return R::hit({VertexSet(all), t});
          }
          if (walker.cancelled()) return R::miss(SearchStatus::cancelled);
        }
      }
    }
  }
  return R::miss();
}

/// Z is constricted when no induced tree meets three of its vertices.
inline bool is_constricted(const Graph& g, const VertexSet& z, const SearchCaps& caps = {}) {
  auto r = three_in_a_tree(g, z, caps);
  if (r.status == SearchStatus::cap_exceeded || r.status == SearchStatus::cancelled) {
    throw InvalidInput(std::string("constriction undecided: ") + to_string(r.status));
  }
  return !r.found();
}

struct WallLineResult {
  bool excluded = true;
  bool partial = false;
  int vertex_budget = 0;
  std::size_t patterns_checked = 0;
  std::optional<SubdivisionPlan> plan;
  std::optional<Embedding> witness;
};

/// Checks line graphs of subdivisions of wall(r) with at most `vertex_budget`
/// vertices, smallest first. `excluded` is scoped by the budget; `partial`
/// is set when the budget is below |V(G)| or the pattern limit was hit.
inline WallLineResult excludes_wall_line_graphs(const Graph& g, int r, const SearchCaps& caps = {}) {
  if (r < 1) throw InvalidInput("wall size must be positive");
  WallLineResult out;
  const Graph base = wall(r);
  const auto edges = base.edges();
  const int m = static_cast<int>(edges.size());
  out.vertex_budget = std::min(g.order(), caps.wall_line_vertices);
  out.partial = g.order() > caps.wall_line_vertices;

  // Subdivision keeps the clique number of the line graph (walls are triangle free).
  const int omega_pattern = clique_number(line_graph(base).graph).size;
  if (omega_pattern > clique_number(g).size) {
    out.partial = false;
    return out;
  }

  SearchCaps inner = caps;
  inner.max_vertices = std::max(caps.max_vertices, out.vertex_budget);
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  for (int extra = 0; m + extra <= out.vertex_budget; ++extra) {
    // Compositions of `extra` into m parts, lexicographically.
    std::function<bool(int, int)> rec = [&](int idx, int left) -> bool {
      if (idx == m - 1) {
        counts[static_cast<std::size_t>(idx)] = left;
        if (out.patterns_checked >= caps.max_patterns) {
          out.partial = true;
          return true;
        }
        SubdivisionPlan plan;
        for (int e = 0; e < m; ++e) plan[edges[static_cast<std::size_t>(e)]] = counts[static_cast<std::size_t>(e)];
        const Graph pattern = line_graph(subdivide(base, plan)).graph;
        ++out.patterns_checked;
        if (pattern.size() > g.size()) return false;
        auto hit = find_induced(g, pattern, inner);
        if (hit.status == SearchStatus::cancelled) {
          out.partial = true;
          return true;
        }
        if (hit.found()) {
          out.excluded = false;
          out.plan = plan;
          out.witness = hit.witness;
          return true;
        }
        return false;
      }
      for (int take = left; take >= 0; --take) {
        counts[static_cast<std::size_t>(idx)] = take;
        if (rec(idx + 1, left - take)) return true;
      }
      return false;
    };
    if (m == 0) break;
    if (rec(0, extra)) return out;
  }
  return out;
}

/// Maximum number of paths from y to distinct vertices of Z, pairwise
/// disjoint apart from y (vertex-split unit-capacity flow).
inline int max_path_fan(const Graph& g, Vertex y, const VertexSet& z) {
  check_range(g, z);
  if (!g.valid(y)) throw InvalidInput("y out of range");
  if (z.contains(y)) throw InvalidInput("max_path_fan needs y outside Z");
  const int n = g.order();
  const int sink = 2 * n;
  detail::FlowNetwork net(2 * n + 1);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, v == y ? n : 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  for (Vertex t : z) net.add_arc(2 * t + 1, sink, 1);
  return net.max_flow(2 * y, sink);
}

}  // namespace thetakit
