#pragma once

// Constructive versions of the tree-growing argument and the Ramsey-type
// statements it relies on.
//
// Every step that the argument justifies by "otherwise G contains a theta /
// K_t / K_{s,s}" returns that structure instead. Numeric thresholds are named
// and overridable; by default they take their (tower-sized) proof values.
// Thresholds steer branch selection and are recorded as gates in the trace,
// while the sets themselves are the largest ones exact search can find, so
// small instances still run to completion. A run that fails without finding a
// witness reports the first unmet gate.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "thetakit/detectors.hpp"
#include "thetakit/flow.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/tower.hpp"

namespace thetakit {

/// A search needed by an extraction step exceeded its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StableSet {
  VertexSet vertices;
  friend bool operator==(const StableSet&, const StableSet&) = default;
};

struct Clique {
  VertexSet vertices;
  friend bool operator==(const Clique&, const Clique&) = default;
};

/// Induced K_{s,s}: both sides stable, complete to each other.
struct Biclique {
  VertexSet left;
  VertexSet right;
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

struct ThresholdUnmet {
  std::string which;
  TowerInt required;
  long long available = 0;
};

template <class Cert>
using Outcome = std::variant<Cert, ThetaWitness, Clique, Biclique, ThresholdUnmet>;

template <class Cert>
const char* outcome_kind(const Outcome<Cert>& o) {
  switch (o.index()) {
    case 0: return "success";
    case 1: return "theta";
    case 2: return "clique";
    case 3: return "biclique";
    default: return "threshold_unmet";
  }
}

inline Validation is_induced_biclique(const Graph& g, const Biclique& b, int s) {
  check_range(g, b.left);
  check_range(g, b.right);
  if (static_cast<int>(b.left.size()) != s || static_cast<int>(b.right.size()) != s) {
    return Validation::fail("sides must have " + std::to_string(s) + " vertices");
  }
  if (!is_stable_set(g, b.left) || !is_stable_set(g, b.right)) return Validation::fail("a side is not stable");
  for (Vertex u : b.left)
    for (Vertex v : b.right)
      if (u == v || !g.adjacent(u, v)) return Validation::fail("missing edge " + std::to_string(u) + "-" + std::to_string(v));
  return Validation::pass();
}

/// Checks a witness branch against the graph; `cert_check` handles success.
/// Bicliques must have sides of size s and cliques exactly t vertices.
template <class Cert, class F>
Validation validate_outcome(const Graph& g, const Outcome<Cert>& o, int s, int t, F&& cert_check) {
  if (const auto* c = std::get_if<Cert>(&o)) return cert_check(*c);
  if (const auto* w = std::get_if<ThetaWitness>(&o)) return is_theta_witness(g, *w);
  if (const auto* c = std::get_if<Clique>(&o)) {
    check_range(g, c->vertices);
    if (static_cast<int>(c->vertices.size()) != t || !is_clique(g, c->vertices)) return Validation::fail("bad clique");
    return Validation::pass();
  }
  if (const auto* b = std::get_if<Biclique>(&o)) return is_induced_biclique(g, *b, s);
  return Validation::pass();
}

/// Ordered log of proof steps; equal inputs give equal traces.
struct ExtractionTrace {
  std::vector<std::string> steps;

  void note(std::string s) { steps.push_back(std::move(s)); }
  friend bool operator==(const ExtractionTrace&, const ExtractionTrace&) = default;
};

/// Named thresholds with proof-value defaults.
class Thresholds {
 public:
  static Thresholds paper() { return {}; }

  /// Every threshold set to `v`, except explicit per-name overrides.
  static Thresholds fixed(unsigned long v) {
    Thresholds t;
    t.all_ = TowerInt(v);
    return t;
  }

  Thresholds& set(const std::string& name, const TowerInt& v) {
    if (std::find(names().begin(), names().end(), name) == names().end()) {
      throw InvalidInput("unknown threshold '" + name + "'");
    }
    overrides_.insert_or_assign(name, v);
    return *this;
  }

  [[nodiscard]] TowerInt get(const std::string& name, const std::function<TowerInt()>& paper_value) const {
    if (auto it = overrides_.find(name); it != overrides_.end()) return it->second;
    if (all_) return *all_;
    return paper_value();
  }

  [[nodiscard]] bool is_paper() const { return !all_ && overrides_.empty(); }

  static const std::vector<std::string>& names() {
    static const std::vector<std::string> n{
        "ramsey", "eh",           "digraph_stable", "digraph_fanout", "anticomplete", "anticomplete_minus",
        "zeta0",  "zeta1",        "zeta2",          "gamma_stable",   "xi0",          "xi1",
        "xi2",    "paths",        "stable_tips",    "long_paths",     "q",            "r_paths",
        "low_stable"};
    return n;
  }

 private:
  std::optional<TowerInt> all_;
  std::map<std::string, TowerInt> overrides_;
};

namespace detail {

inline TowerInt binomial(int n, int k) {
  if (k < 0 || n < k) return TowerInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return TowerInt(r);
}

inline bool reaches(long long available, const TowerInt& required) {
  return tower_compare(TowerInt(static_cast<unsigned long>(std::max(0LL, available))), required) !=
         std::strong_ordering::less;
}

/// min(required, available), at least `floor`.
inline long long effective(const TowerInt& required, long long available, long long floor) {
  long long v = available;
  if (reaches(available, required)) v = required.exact(30)->get_si();
  return std::max(floor, v);
}

/// Gate bookkeeping shared by one extraction run.
struct Gates {
  ExtractionTrace& trace;
  std::optional<ThresholdUnmet> first_unmet;

  bool check(const std::string& name, const TowerInt& required, long long available) {
    const bool ok = reaches(available, required);
    trace.note("gate " + name + ": " + std::to_string(available) + (ok ? " >= " : " < ") + shorten(required.str()));
    if (!ok && !first_unmet) first_unmet = ThresholdUnmet{name, required, available};
    return ok;
  }

  ThresholdUnmet unmet(const std::string& name, const TowerInt& required, long long available) const {
    if (first_unmet) return *first_unmet;
    return {name, required, available};
  }

  static std::string shorten(std::string s) {
    if (s.size() > 60) s = s.substr(0, 57) + "...";
    return s;
  }
};

inline std::string show(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

inline VertexSet to_host(const InducedSubgraph& sub, const VertexSet& local) {
  std::vector<Vertex> out;
  for (Vertex v : local) out.push_back(sub.to_host[static_cast<std::size_t>(v)]);
  return VertexSet(out);
}

inline VertexSet first_k(const VertexSet& s, std::size_t k) {
  return VertexSet(std::vector<Vertex>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(std::min(k, s.size()))));
}

/// Clique of size t or induced K_{s,s} in G[within]; exhaustive.
inline std::optional<std::variant<Clique, Biclique>> witness_search(const Graph& g, const VertexSet& within, int s,
                                                                    int t, const SearchCaps& caps) {
  if (static_cast<int>(within.size()) > caps.max_vertices) return std::nullopt;
  auto sub = induced_subgraph(g, within);
  auto om = clique_number(sub.graph);
  if (om.size >= t) return Clique{to_host(sub, first_k(om.witness, static_cast<std::size_t>(t)))};
  auto bi = find_biclique(sub.graph, s, caps);
  if (bi.found()) {
    std::vector<Vertex> l, r;
    for (int i = 0; i < 2 * s; ++i) (i < s ? l : r).push_back(sub.to_host[static_cast<std::size_t>(bi.witness->map[static_cast<std::size_t>(i)])]);
    return Biclique{VertexSet(l), VertexSet(r)};
  }
  return std::nullopt;
}

/// Lexicographically least stable k-set of g, if any.
inline std::optional<VertexSet> least_stable_set(const Graph& g, int k) {
  std::vector<Vertex> chosen;
  Bits open = g.full_set();
  auto room = [&](const Bits& within) {
    return static_cast<int>(maximum_stable_set(induced_subgraph(g, VertexSet::from_bits(within)).graph).size);
  };
  if (k <= 0) return VertexSet{};
  if (room(open) < k) return std::nullopt;
  for (Vertex v = 0; v < g.order() && static_cast<int>(chosen.size()) < k; ++v) {
    if (!open.test(static_cast<std::size_t>(v))) continue;
    Bits rest = open - g.neighbors(v);
    rest.reset(static_cast<std::size_t>(v));
    for (Vertex u = 0; u <= v; ++u) rest.reset(static_cast<std::size_t>(u));
    if (room(rest) >= k - static_cast<int>(chosen.size()) - 1) {
      chosen.push_back(v);
      open = rest;
    }
  }
  return VertexSet(chosen);
}

template <class Cert, class V>
Outcome<Cert> lift(V&& w) {
  return std::visit([](auto&& x) -> Outcome<Cert> { return x; }, std::forward<V>(w));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ramsey and Erdos-Hajnal extraction.

using RamseyOutcome = std::variant<Clique, StableSet, ThresholdUnmet>;

/// Clique of size t or stable set of size alpha; guaranteed from binom(t+alpha-2, t-1) vertices.
inline RamseyOutcome ramsey_extract(const Graph& g, int t, int alpha, const Thresholds& thr = {},
                                    ExtractionTrace* trace = nullptr) {
  if (t < 1 || alpha < 1) throw InvalidInput("ramsey_extract needs t, alpha >= 1");
  ExtractionTrace local;
  ExtractionTrace& tr = trace ? *trace : local;
  detail::Gates gates{tr, {}};
  const TowerInt required = thr.get("ramsey", [&] { return detail::binomial(t + alpha - 2, t - 1); });
  gates.check("ramsey", required, g.order());

  // Returns (is_clique, vertices).
  using Found = std::optional<std::pair<bool, std::vector<Vertex>>>;
  std::function<Found(const Bits&, int, int)> rec = [&](const Bits& set, int tt, int aa) -> Found {
    if (set.none()) return std::nullopt;
    const auto v = static_cast<Vertex>(set.find_first());
    if (tt == 1) return std::pair{true, std::vector<Vertex>{v}};
    if (aa == 1) return std::pair{false, std::vector<Vertex>{v}};
    Bits nb = g.neighbors(v) & set;
    Bits non = set - nb;
    non.reset(static_cast<std::size_t>(v));
    auto via_nb = [&]() -> Found {
      auto r = rec(nb, tt - 1, aa);
      if (r && r->first) r->second.push_back(v);
      return r;
    };
    auto via_non = [&]() -> Found {
      auto r = rec(non, tt, aa - 1);
      if (r && !r->first) r->second.push_back(v);
      return r;
    };
    const auto need_nb = detail::binomial(tt + aa - 3, tt - 2);
    if (detail::reaches(static_cast<long long>(nb.count()), need_nb)) {
      if (auto r = via_nb()) return r;
      return via_non();
    }
    if (auto r = via_non()) return r;
    return via_nb();
  };

  if (auto r = rec(g.full_set(), t, alpha)) {
    VertexSet s(r->second);
    tr.note(std::string("ramsey: ") + (r->first ? "clique " : "stable ") + detail::show(s));
    if (r->first) return Clique{s};
    return StableSet{s};
  }
  // Below the bound the recursion can miss; settle it exactly.
  auto om = clique_number(g);
  if (om.size >= t) return Clique{detail::first_k(om.witness, static_cast<std::size_t>(t))};
  auto st = maximum_stable_set(g);
  if (st.size >= alpha) return StableSet{detail::first_k(st.witness, static_cast<std::size_t>(alpha))};
  tr.note("ramsey: neither target exists");
  return gates.unmet("ramsey", required, g.order());
}

using EHOutcome = std::variant<StableSet, Biclique, Clique, ThresholdUnmet>;

/// Stable set of size alpha, else induced K_{s,s}, else clique of size t.
inline EHOutcome eh_extract(const Graph& g, int s, int t, int alpha, const Thresholds& thr = {},
                            ExtractionTrace* trace = nullptr, const SearchCaps& caps = {}) {
  if (s < 1 || t < 1 || alpha < 1) throw InvalidInput("eh_extract needs s, t, alpha >= 1");
  if (g.order() > caps.max_vertices) throw CapExceeded("eh_extract: graph exceeds the vertex cap");
  ExtractionTrace local;
  ExtractionTrace& tr = trace ? *trace : local;
  detail::Gates gates{tr, {}};
  const TowerInt required = thr.get("eh", [&] { return tpow(alpha, s) * tpow(t, s - 1); });
  gates.check("eh", required, g.order());

  auto st = maximum_stable_set(g);
  if (st.size >= alpha) {
    tr.note("eh: stable " + detail::show(detail::first_k(st.witness, static_cast<std::size_t>(alpha))));
    return StableSet{detail::first_k(st.witness, static_cast<std::size_t>(alpha))};
  }
  auto bi = find_biclique(g, s, caps);
  if (bi.status == SearchStatus::cap_exceeded) throw CapExceeded("eh_extract: biclique search capped");
  if (bi.found()) {
    std::vector<Vertex> l(bi.witness->map.begin(), bi.witness->map.begin() + s);
    std::vector<Vertex> r(bi.witness->map.begin() + s, bi.witness->map.end());
    tr.note("eh: biclique");
    return Biclique{VertexSet(l), VertexSet(r)};
  }
  auto om = clique_number(g);
  if (om.size >= t) {
    tr.note("eh: clique");
    return Clique{detail::first_k(om.witness, static_cast<std::size_t>(t))};
  }
  tr.note("eh: nothing found");
  return gates.unmet("eh", required, g.order());
}

// ---------------------------------------------------------------------------
// Digraph statements.

using DigraphStableOutcome = std::variant<StableSet, ThresholdUnmet>;

/// Least stable s-set, in lexicographic order, among the vertices of out-degree at most r.
inline DigraphStableOutcome digraph_stable(const Digraph& d, int r, int s, const Thresholds& thr = {},
                                           ExtractionTrace* trace = nullptr, const SearchCaps& caps = {}) {
  ExtractionTrace local;
  ExtractionTrace& tr = trace ? *trace : local;
  detail::Gates gates{tr, {}};
  std::vector<Vertex> low;
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.out_degree(v) <= r) low.push_back(v);
  if (static_cast<int>(low.size()) > caps.max_vertices) throw CapExceeded("digraph_stable: too many low vertices");
  const TowerInt required = thr.get("digraph_stable", [&] { return TowerInt(2) * TowerInt(std::max(r, 0)) * TowerInt(std::max(s, 0)); });
  gates.check("digraph_stable", required, static_cast<long long>(low.size()));

  const Graph und = d.underlying();
  auto sub = induced_subgraph(und, VertexSet(low));
  if (auto st = detail::least_stable_set(sub.graph, s)) {
    VertexSet out = detail::to_host(sub, *st);
    tr.note("digraph_stable: " + detail::show(out));
    return StableSet{out};
  }
  return gates.unmet("digraph_stable", required, static_cast<long long>(low.size()));
}

/// For each listed q-subset of S, its pairwise disjoint r-sets of out-neighbours outside S.
struct Fanout {
  VertexSet set;
  std::vector<std::pair<VertexSet, std::vector<VertexSet>>> assignments;
};

namespace detail {

inline void for_each_subset(const std::vector<Vertex>& pool, int k, const std::function<bool(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (static_cast<int>(cur.size()) == k) return f(cur);
    for (std::size_t i = from; i + (static_cast<std::size_t>(k) - cur.size()) <= pool.size(); ++i) {
      cur.push_back(pool[i]);
      if (!rec(i + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  if (k >= 0 && static_cast<std::size_t>(k) <= pool.size()) rec(0);
}

/// Disjoint r-subsets R_i of out(v_i) avoiding `banned`, by max-flow.
inline std::optional<std::vector<VertexSet>> disjoint_out_sets(const Digraph& d, const std::vector<Vertex>& vs, int r,
                                                               const Bits& banned) {
  const int n = d.order();
  const int k = static_cast<int>(vs.size());
  FlowNetwork net(k + n + 2);
  const int src = k + n;
  const int sink = src + 1;
  std::vector<std::vector<std::pair<int, Vertex>>> arcs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    net.add_arc(src, i, r);
    for_each_bit(d.out_neighbors(vs[static_cast<std::size_t>(i)]), [&](Vertex u) {
      if (!banned.test(static_cast<std::size_t>(u))) arcs[static_cast<std::size_t>(i)].push_back({net.add_arc(i, k + u, 1), u});
    });
  }
  for (Vertex u = 0; u < n; ++u) net.add_arc(k + u, sink, 1);
  if (net.max_flow(src, sink) < k * r) return std::nullopt;
  std::vector<VertexSet> out;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> got;
    for (auto [arc, u] : arcs[static_cast<std::size_t>(i)])
      if (net.flow(arc) > 0) got.push_back(u);
    out.emplace_back(got);
  }
  return out;
}

}  // namespace detail

inline Validation validate_fanout(const Digraph& d, int q, int r, int s, const Fanout& f) {
  if (static_cast<int>(f.set.size()) != s) return Validation::fail("S has the wrong size");
  for (Vertex v : f.set)
    if (v < 0 || v >= d.order()) return Validation::fail("S out of range");
  std::vector<Vertex> pool(f.set.begin(), f.set.end());
  std::size_t expected = 0;
  detail::for_each_subset(pool, q, [&](const std::vector<Vertex>&) {
    ++expected;
    return true;
  });
  if (f.assignments.size() != expected) return Validation::fail("not every q-subset is covered");
  std::set<VertexSet> seen;
  for (const auto& [sub, rs] : f.assignments) {
    if (static_cast<int>(sub.size()) != q || rs.size() != sub.size()) return Validation::fail("malformed assignment");
    if (!seen.insert(sub).second) return Validation::fail("q-subset listed twice");
    std::set<Vertex> used;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (!f.set.contains(sub[i])) return Validation::fail("q-subset leaves S");
      if (static_cast<int>(rs[i].size()) != r) return Validation::fail("R_i has the wrong size");
      for (Vertex u : rs[i]) {
        if (f.set.contains(u)) return Validation::fail("R_i meets S");
        if (u < 0 || u >= d.order() || !d.has_arc(sub[i], u)) return Validation::fail("R_i holds a non out-neighbour");
        if (!used.insert(u).second) return Validation::fail("R sets overlap");
      }
    }
  }
  return Validation::pass();
}

using FanoutOutcome = std::variant<Fanout, ThresholdUnmet>;

/// s-subset S of vertices of out-degree >= qr in which every q-subset fans out
/// to pairwise disjoint r-sets of out-neighbours outside S. Least S in lexicographic order.
inline FanoutOutcome digraph_fanout(const Digraph& d, int q, int r, int s, const Thresholds& thr = {},
                                    ExtractionTrace* trace = nullptr, const SearchCaps& caps = {}) {
  if (q < 0 || r < 0 || s < 0) throw InvalidInput("digraph_fanout needs q, r, s >= 0");
  ExtractionTrace local;
  ExtractionTrace& tr = trace ? *trace : local;
  detail::Gates gates{tr, {}};
  std::vector<Vertex> high;
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.out_degree(v) >= q * r) high.push_back(v);
  const TowerInt required =
      thr.get("digraph_fanout", [&] { return TowerInt(2) * TowerInt(q) * TowerInt(r) * TowerInt(s); });
  gates.check("digraph_fanout", required, static_cast<long long>(high.size()));

  std::size_t tried = 0;
  std::optional<Fanout> found;
  detail::for_each_subset(high, s, [&](const std::vector<Vertex>& cand) {
    if (++tried > caps.max_patterns) throw CapExceeded("digraph_fanout: too many candidate sets");
    Fanout f{VertexSet(cand), {}};
    const Bits banned = f.set.to_bits(d.order());
    bool ok = true;
    detail::for_each_subset(cand, q, [&](const std::vector<Vertex>& sub) {
      auto rs = detail::disjoint_out_sets(d, sub, r, banned);
      if (!rs) return ok = false;
      f.assignments.push_back({VertexSet(sub), std::move(*rs)});
      return true;
    });
    if (ok) found = std::move(f);
    return !ok;
  });
  if (found) {
    tr.note("digraph_fanout: S = " + detail::show(found->set));
    return *found;
  }
  return gates.unmet("digraph_fanout", required, static_cast<long long>(high.size()));
}

// ---------------------------------------------------------------------------
// Pairwise anticomplete subfamilies.

/// Indices into the input family.
struct AnticompleteFamily {
  std::vector<int> indices;
  friend bool operator==(const AnticompleteFamily&, const AnticompleteFamily&) = default;
};

inline Validation validate_anticomplete_family(const Graph& g, const std::vector<VertexSet>& xs,
                                               const AnticompleteFamily& f, int alpha) {
  if (static_cast<int>(f.indices.size()) != alpha) return Validation::fail("family has the wrong size");
  for (std::size_t i = 0; i < f.indices.size(); ++i) {
    const int a = f.indices[i];
    if (a < 0 || a >= static_cast<int>(xs.size())) return Validation::fail("index out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (f.indices[j] == a) return Validation::fail("repeated index");
      if (!are_anticomplete(g, xs[static_cast<std::size_t>(a)], xs[static_cast<std::size_t>(f.indices[j])])) {
        return Validation::fail("sets " + std::to_string(f.indices[j]) + " and " + std::to_string(a) + " touch");
      }
    }
  }
  return Validation::pass();
}

namespace detail {

class AnticompleteRun {
 public:
  AnticompleteRun(const Graph& g, int alpha, int s, int t, const Thresholds& thr, Gates& gates, const SearchCaps& caps)
      : g_(g), alpha_(alpha), s_(s), t_(t), thr_(thr), gates_(gates), caps_(caps) {}

  // Largest family found (may be short of alpha), or a witness.
  using Result = std::variant<std::vector<int>, Clique, Biclique>;

  Result run(const std::vector<VertexSet>& sets, int r) {
    gates_.trace.note("anticomplete: " + std::to_string(sets.size()) + " sets, r=" + std::to_string(r));
    std::vector<int> all(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) all[i] = static_cast<int>(i);
    if (sets.empty()) return all;
    if (alpha_ <= 1) return std::vector<int>{0};
    if (s_ == 1) return edgeless_base(sets);
    if (r == 1) return singletons(sets);

    std::vector<int> minus, full;
    for (int i : all) (static_cast<int>(sets[static_cast<std::size_t>(i)].size()) <= r - 1 ? minus : full).push_back(i);
    std::vector<int> best;
    bool tried_minus = false;
    auto try_minus = [&]() -> std::optional<Result> {
      tried_minus = true;
      Result sub = run(pick(sets, minus), r - 1);
      if (!std::holds_alternative<std::vector<int>>(sub)) return sub;
      auto fam = remap(std::get<std::vector<int>>(sub), minus);
      if (static_cast<int>(fam.size()) >= alpha_) return fam;
      if (fam.size() > best.size()) best = fam;
      return std::nullopt;
    };
    if (!minus.empty()) {
      const int rm = r - 1;
      if (gates_.check("anticomplete_minus", anticomplete_bound(rm), static_cast<long long>(minus.size()))) {
        if (auto done = try_minus()) return *done;
      }
    }
    Result main = r == 2 ? pairs(pick(sets, full)) : triples(pick(sets, full), r);
    if (!std::holds_alternative<std::vector<int>>(main)) return main;
    auto fam = remap(std::get<std::vector<int>>(main), full);
    if (static_cast<int>(fam.size()) >= alpha_) return fam;
    if (fam.size() > best.size()) best = fam;
    if (!tried_minus && !minus.empty()) {
      if (auto done = try_minus()) return *done;
    }
    std::sort(best.begin(), best.end());
    return best;
  }

  [[nodiscard]] TowerInt anticomplete_bound(int r) const {
    return thr_.get("anticomplete_minus", [&] {
      const TowerInt sg = sigma(s_, std::max(r, 1));
      return tpow(alpha_, sg) * tpow(t_, sg - TowerInt(1));
    });
  }

 private:
  static std::vector<VertexSet> pick(const std::vector<VertexSet>& sets, const std::vector<int>& idx) {
    std::vector<VertexSet> out;
    for (int i : idx) out.push_back(sets[static_cast<std::size_t>(i)]);
    return out;
  }

  static std::vector<int> remap(const std::vector<int>& local, const std::vector<int>& idx) {
    std::vector<int> out;
    for (int i : local) out.push_back(idx[static_cast<std::size_t>(i)]);
    return out;
  }

  /// Maximum subset of `idx` whose chosen vertices form a stable set.
  std::vector<int> stable_indices(const std::vector<Vertex>& vs, const std::vector<int>& idx) {
    if (static_cast<int>(idx.size()) > caps_.max_vertices) throw CapExceeded("anticomplete_family: stable set search capped");
    std::vector<Vertex> chosen;
    for (int i : idx) chosen.push_back(vs[static_cast<std::size_t>(i)]);
    // Positions, not vertex ids: vertices are distinct across disjoint sets.
    GraphBuilder b(static_cast<int>(chosen.size()));
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (g_.adjacent(chosen[i], chosen[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    auto st = maximum_stable_set(b.build());
    std::vector<int> out;
    for (Vertex p : st.witness) out.push_back(idx[static_cast<std::size_t>(p)]);
    return out;
  }

  Result edgeless_base(const std::vector<VertexSet>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j)
        for (Vertex u : sets[i])
          for (Vertex v : sets[j])
            if (g_.adjacent(u, v)) {
              gates_.trace.note("anticomplete: s=1 and edge " + std::to_string(u) + "-" + std::to_string(v));
              return Biclique{VertexSet{u}, VertexSet{v}};
            }
    std::vector<int> all(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) all[i] = static_cast<int>(i);
    return all;
  }

  Result singletons(const std::vector<VertexSet>& sets) {
    std::vector<Vertex> vs;
    std::vector<int> idx;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      vs.push_back(sets[i][0]);
      idx.push_back(static_cast<int>(i));
    }
    gates_.check("eh", thr_.get("eh", [&] { return tpow(alpha_, s_) * tpow(t_, s_ - 1); }),
                 static_cast<long long>(sets.size()));
    auto fam = stable_indices(vs, idx);
    gates_.trace.note("anticomplete: r=1 stable family of " + std::to_string(fam.size()));
    if (static_cast<int>(fam.size()) < alpha_) {
      if (auto w = witness_search(g_, VertexSet(vs), s_, t_, caps_)) {
        return std::visit([](auto&& x) -> Result { return x; }, *w);
      }
    }
    return fam;
  }

  Result pairs(const std::vector<VertexSet>& w) {
    const int s = s_;
    const TowerInt e2 = tpow(2 * s, 2 * s - 1) - TowerInt(1);
    const TowerInt zeta2 = thr_.get("zeta2", [&] { return tpow(alpha_, e2); });
    gates_.check("zeta0", thr_.get("zeta0", [&] { return tpow(alpha_, e2 * TowerInt(s * s)) * tpow(t_, s * s - 1); }),
                 static_cast<long long>(w.size()));
    std::vector<Vertex> xs, ys;
    std::vector<int> all;
    for (std::size_t i = 0; i < w.size(); ++i) {
      xs.push_back(w[i][0]);
      ys.push_back(w[i][1]);
      all.push_back(static_cast<int>(i));
    }
    auto i1 = stable_indices(xs, all);
    gates_.check("zeta1", thr_.get("zeta1", [&] { return tpow(alpha_, e2 * TowerInt(s)) * tpow(t_, s - 1); }),
                 static_cast<long long>(i1.size()));
    auto i2 = stable_indices(ys, i1);
    std::sort(i2.begin(), i2.end());
    gates_.check("zeta2", zeta2, static_cast<long long>(i2.size()));

    // Gamma: ij an edge iff x_i y_j and x_j y_i are both non-edges.
    const int m = static_cast<int>(i2.size());
    GraphBuilder gb(m);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const auto i = static_cast<std::size_t>(i2[static_cast<std::size_t>(a)]);
        const auto j = static_cast<std::size_t>(i2[static_cast<std::size_t>(b)]);
        if (!g_.adjacent(xs[i], ys[j]) && !g_.adjacent(xs[j], ys[i])) gb.add_edge(a, b);
      }
    const Graph gamma = gb.build();
    auto om = clique_number(gamma);
    std::vector<int> fam;
    for (Vertex a : om.witness) fam.push_back(i2[static_cast<std::size_t>(a)]);
    gates_.trace.note("anticomplete: Gamma on " + std::to_string(m) + " pairs, clique " + std::to_string(om.size));
    if (om.size >= alpha_) return fam;

    // No alpha-clique: a large stable set of Gamma forces K_{s,s}.
    auto st = maximum_stable_set(gamma);
    std::vector<int> idx;
    for (Vertex a : st.witness) idx.push_back(i2[static_cast<std::size_t>(a)]);
    gates_.check("gamma_stable", thr_.get("gamma_stable", [&] { return tpow(2 * s, 2 * s - 1); }),
                 static_cast<long long>(idx.size()));
    const int k = static_cast<int>(idx.size());
    GraphBuilder pb(k);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (g_.adjacent(xs[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])],
                        ys[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])]))
          pb.add_edge(a, b);
    auto ram = ramsey_extract(pb.build(), 2 * s, 2 * s, thr_, &gates_.trace);
    if (std::holds_alternative<ThresholdUnmet>(ram)) return fam;
    const bool forward = std::holds_alternative<Clique>(ram);
    const VertexSet& pos = forward ? std::get<Clique>(ram).vertices : std::get<StableSet>(ram).vertices;
    std::vector<Vertex> l, r;
    for (std::size_t c = 0; c < pos.size(); ++c) {
      const auto i = static_cast<std::size_t>(idx[static_cast<std::size_t>(pos[c])]);
      const bool low_half = c < static_cast<std::size_t>(s);
      // Clique in Gamma': x of the lower indices, y of the upper; else the reverse.
      if (low_half == forward) {
        l.push_back(xs[i]);
      } else {
        r.push_back(ys[i]);
      }
    }
    Biclique out{VertexSet(l), VertexSet(r)};
    if (!is_induced_biclique(g_, out, s)) throw std::logic_error("anticomplete_family: Gamma' descent gave no biclique");
    gates_.trace.note("anticomplete: Gamma' descent found K_{s,s}");
    return out;
  }

  Result triples(const std::vector<VertexSet>& w, int r) {
    const TowerInt sg = sigma(s_, r - 1);
    const TowerInt step = sg - TowerInt(1);
    const TowerInt xi2 = thr_.get("xi2", [&] { return tpow(alpha_, sg) * tpow(t_, step); });
    gates_.check("xi0", thr_.get("xi0", [&] {
                   const TowerInt cube = tpow(sg, 3);
                   return tpow(alpha_, cube) * tpow(t_, cube - TowerInt(1));
                 }),
                 static_cast<long long>(w.size()));
    std::vector<int> live(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) live[i] = static_cast<int>(i);
    for (int drop = 0; drop < 3; ++drop) {
      std::vector<VertexSet> parts;
      for (int i : live) {
        std::vector<Vertex> rest;
        const auto& wi = w[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < wi.size(); ++k)
          if (static_cast<int>(k) != drop) rest.push_back(wi[k]);
        parts.emplace_back(rest);
      }
      Result sub = run(parts, r - 1);
      if (!std::holds_alternative<std::vector<int>>(sub)) return sub;
      live = remap(std::get<std::vector<int>>(sub), live);
      std::sort(live.begin(), live.end());
      if (drop == 0) {
        gates_.check("xi1", thr_.get("xi1", [&] { return tpow(xi2, sg) * tpow(t_, step); }),
                     static_cast<long long>(live.size()));
      } else if (drop == 1) {
        gates_.check("xi2", xi2, static_cast<long long>(live.size()));
      }
    }
    return live;
  }

  const Graph& g_;
  int alpha_, s_, t_;
  const Thresholds& thr_;
  Gates& gates_;
  const SearchCaps& caps_;
};

}  // namespace detail

/// alpha pairwise anticomplete members of `xs`, following the induction on the
/// largest set size r.
inline Outcome<AnticompleteFamily> anticomplete_family(const Graph& g, const std::vector<VertexSet>& xs, int alpha,
                                                       int s, int t, const Thresholds& thr = {},
                                                       ExtractionTrace* trace = nullptr,
                                                       const SearchCaps& caps = {}) {
  if (alpha < 1 || s < 1 || t < 1) throw InvalidInput("anticomplete_family needs alpha, s, t >= 1");
  Bits seen = g.empty_set();
  int r = 0;
  for (const auto& x : xs) {
    if (x.empty()) throw InvalidInput("anticomplete_family: empty set in family");
    check_range(g, x);
    for (Vertex v : x) {
      if (seen.test(static_cast<std::size_t>(v))) throw InvalidInput("anticomplete_family: sets overlap at " + std::to_string(v));
      seen.set(static_cast<std::size_t>(v));
    }
    r = std::max(r, static_cast<int>(x.size()));
  }
  ExtractionTrace local;
  ExtractionTrace& tr = trace ? *trace : local;
  detail::Gates gates{tr, {}};
  const TowerInt required = thr.get("anticomplete", [&] {
    const TowerInt sg = sigma(std::max(s, 1), std::max(r, 1));
    return tpow(alpha, sg) * tpow(t, sg - TowerInt(1));
  });
  gates.check("anticomplete", required, static_cast<long long>(xs.size()));

  detail::AnticompleteRun run(g, alpha, s, t, thr, gates, caps);
  auto res = run.run(xs, std::max(r, 1));
  if (std::holds_alternative<Clique>(res)) return std::get<Clique>(res);
  if (std::holds_alternative<Biclique>(res)) return std::get<Biclique>(res);
  auto fam = std::get<std::vector<int>>(res);
  if (static_cast<int>(fam.size()) >= alpha) {
    std::sort(fam.begin(), fam.end());
    fam.resize(static_cast<std::size_t>(alpha));
    tr.note("anticomplete: family of " + std::to_string(alpha));
    return AnticompleteFamily{fam};
  }
  if (auto w = detail::witness_search(g, VertexSet::from_bits(seen), s, t, caps)) {
    tr.note("anticomplete: exhaustive witness");
    return detail::lift<AnticompleteFamily>(*w);
  }
  return gates.unmet("anticomplete", required, static_cast<long long>(xs.size()));
}

// ---------------------------------------------------------------------------
// Growing (a,b)-trees from a bundle of x-y paths.

namespace detail {

class GrowRun {
 public:
  GrowRun(const Graph& g, Vertex y, int a, int t, const Thresholds& thr, ExtractionTrace& tr, const SearchCaps& caps)
      : g_(g), y_(y), a_(a), t_(t), thr_(thr), tr_(tr), caps_(caps) {}

  Outcome<ABTreeCert> grow(Vertex x, const PathFamily& f, int b) {
    Gates gates{tr_, {}};
    tr_.note("grow: x=" + std::to_string(x) + " b=" + std::to_string(b) + " paths=" + std::to_string(f.paths.size()));
    if (b == 1) return ABTreeCert{VertexSet{x}, x, a_, 1, {}};

    const TreeConstants cb = tree_constants(a_, b);
    const TreeConstants cp = tree_constants(a_, b - 1);
    const TowerInt per_branch = cp.mu * tpow(t_, cp.lambda);
    gates.check("paths", thr_.get("paths", [&] { return cb.mu * tpow(t_, cb.lambda); }),
                static_cast<long long>(f.paths.size()));
    if (f.paths.empty()) return gates.unmet("paths", TowerInt(1), 0);

    // Tips x_P, and a maximum stable set of them.
    std::vector<Vertex> tips;
    for (const auto& p : f.paths) tips.push_back(p[1]);
    auto sub = induced_subgraph(g_, VertexSet(tips));
    if (sub.graph.order() > caps_.max_vertices) throw CapExceeded("grow_ab_tree: too many paths");
    auto st = maximum_stable_set(sub.graph);
    std::vector<std::size_t> q_idx;
    for (std::size_t i = 0; i < tips.size(); ++i)
      if (st.witness.contains(static_cast<Vertex>(std::lower_bound(sub.to_host.begin(), sub.to_host.end(), tips[i]) -
                                                  sub.to_host.begin())))
        q_idx.push_back(i);
    gates.check("stable_tips", thr_.get("stable_tips", [&] {
                  return (TowerInt(3) * tpow(a_, TowerInt(2) * cb.theta) + TowerInt(2)) *
                         tpow(t_, TowerInt(2) * (cb.theta - TowerInt(1))) * per_branch;
                }),
                static_cast<long long>(q_idx.size()));

    std::vector<std::size_t> shorts, longs;
    for (std::size_t i : q_idx) (f.paths[i].size() == 3 ? shorts : longs).push_back(i);
    if (shorts.size() >= 3) {
      ThetaWitness w{x, y_, {f.paths[shorts[0]], f.paths[shorts[1]], f.paths[shorts[2]]}};
      tr_.note("grow: three length-2 paths with stable tips form a theta");
      return w;
    }

    const TowerInt q_thr = thr_.get("q", [&] { return tpow(a_, cb.theta) * tpow(t_, cb.theta - TowerInt(1)); });
    const TowerInt r_thr = thr_.get("r_paths", [&] { return per_branch; });
    gates.check("long_paths", thr_.get("long_paths", [&] { return TowerInt(3) * tpow(q_thr, 2) * r_thr; }),
                static_cast<long long>(longs.size()));
    const int n_l = static_cast<int>(longs.size());
    if (n_l == 0) return gates.unmet("long_paths", TowerInt(1), 0);

    // D on the long paths: (P,Q) an arc iff x_P has a neighbour in Q*.
    std::vector<Bits> inner;
    for (std::size_t i : longs) {
      Bits b2 = g_.empty_set();
      for (Vertex v : interior(f.paths[i])) b2.set(static_cast<std::size_t>(v));
      inner.push_back(std::move(b2));
    }
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (int i = 0; i < n_l; ++i)
      for (int j = 0; j < n_l; ++j)
        if (i != j && g_.neighbors(f.paths[longs[static_cast<std::size_t>(i)]][1]).intersects(inner[static_cast<std::size_t>(j)]))
          arcs.push_back({i, j});
    const Digraph d = Digraph::from_arcs(n_l, arcs);
    tr_.note("grow: digraph on " + std::to_string(n_l) + " paths with " + std::to_string(arcs.size()) + " arcs");

    const long long q_eff = effective(q_thr, n_l, a_);
    const long long r_eff = effective(r_thr, n_l - 1, 1);
    long long high = 0;
    for (Vertex v = 0; v < n_l; ++v)
      if (d.out_degree(v) >= q_eff * r_eff) ++high;
    bool low_tried = false;
    auto low_branch = [&]() -> std::optional<ThetaWitness> {
      low_tried = true;
      const long long low_eff = effective(thr_.get("low_stable", [&] { return tpow(t_, 36); }), n_l, 3);
      auto ds = digraph_stable(d, static_cast<int>(q_eff * r_eff), static_cast<int>(low_eff), thr_, &tr_, caps_);
      if (!std::holds_alternative<StableSet>(ds)) return std::nullopt;
      return theta_from_stable(x, f, longs, std::get<StableSet>(ds).vertices);
    };
    if (high < 2 * q_eff * q_eff * r_eff) {
      if (auto w = low_branch()) return *w;
    }

    // Fan-out: q paths whose tips each reach r further paths, disjointly.
    std::optional<Fanout> fan;
    int q_used = 0;
    int r_used = 0;
    for (long long r = r_eff; r >= 1 && !fan; --r)
      for (long long q = std::min<long long>(q_eff, n_l); q >= a_ && !fan; --q) {
        ExtractionTrace quiet;
        auto fo = digraph_fanout(d, static_cast<int>(q), static_cast<int>(r), static_cast<int>(q), thr_, &quiet, caps_);
        if (std::holds_alternative<Fanout>(fo)) {
          fan = std::get<Fanout>(fo);
          q_used = static_cast<int>(q);
          r_used = static_cast<int>(r);
        }
      }
    if (!fan) {
      if (!low_tried) {
        if (auto w = low_branch()) return *w;
      }
      tr_.note("grow: no fan-out");
      return gates.unmet("q", q_thr, high);
    }
    tr_.note("grow: fan-out q=" + std::to_string(q_used) + " r=" + std::to_string(r_used) + " S=" + show(fan->set));

    // One (a,b-1)-tree per fan-out path, grown from x_P towards y.
    const auto& [members, rsets] = fan->assignments.front();
    std::vector<ABTreeCert> trees;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& p = f.paths[longs[static_cast<std::size_t>(members[i])]];
      const Vertex xp = p[1];
      PathFamily sub_f{xp, y_, {}};
      for (Vertex rv : rsets[i]) sub_f.paths.push_back(reroute(xp, f.paths[longs[static_cast<std::size_t>(rv)]]));
      if (!validate_path_family(g_, sub_f)) throw std::logic_error("grow_ab_tree: rerouted family invalid");
      auto child = grow(xp, sub_f, b - 1);
      if (std::holds_alternative<ABTreeCert>(child)) {
        trees.push_back(prune_root(std::get<ABTreeCert>(child)));
      } else if (!std::holds_alternative<ThresholdUnmet>(child)) {
        return child;
      } else {
        tr_.note("grow: branch at " + std::to_string(xp) + " unmet (" + std::get<ThresholdUnmet>(child).which + ")");
      }
    }
    if (static_cast<int>(trees.size()) < a_) return gates.unmet("q", q_thr, static_cast<long long>(trees.size()));

    std::vector<VertexSet> parts;
    for (const auto& tcert : trees) parts.push_back(tcert.vertices);
    auto fam = anticomplete_family(g_, parts, a_, 3, t_, thr_, &tr_, caps_);
    if (!std::holds_alternative<AnticompleteFamily>(fam)) {
      if (std::holds_alternative<ThresholdUnmet>(fam)) {
        return gates.first_unmet ? *gates.first_unmet : std::get<ThresholdUnmet>(fam);
      }
      return std::visit(
          [](auto&& w) -> Outcome<ABTreeCert> {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, AnticompleteFamily>) {
              throw std::logic_error("unreachable");
            } else {
              return w;
            }
          },
          fam);
    }
    ABTreeCert out{{}, x, a_, b, {}};
    std::vector<Vertex> vs{x};
    for (int i : std::get<AnticompleteFamily>(fam).indices) {
      const auto& tc = trees[static_cast<std::size_t>(i)];
      vs.insert(vs.end(), tc.vertices.begin(), tc.vertices.end());
      out.parent.insert(tc.parent.begin(), tc.parent.end());
      out.parent[tc.root] = x;
    }
    out.vertices = VertexSet(vs);
    if (auto v = is_ab_tree(g_, out); !v) throw std::logic_error("grow_ab_tree: assembled tree invalid: " + v.reason);
    tr_.note("grow: (" + std::to_string(a_) + "," + std::to_string(b) + ")-tree at " + std::to_string(x));
    return out;
  }

 private:
  /// x_P's neighbour on R* nearest y, then along R to y.
  std::vector<Vertex> reroute(Vertex xp, const std::vector<Vertex>& r) const {
    for (std::size_t k = r.size() - 2; k >= 1; --k) {
      if (g_.adjacent(xp, r[k])) {
        std::vector<Vertex> out{xp};
        out.insert(out.end(), r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
        return out;
      }
    }
    throw std::logic_error("grow_ab_tree: fan-out arc without a neighbour");
  }

  /// Drop the root's last child subtree so the root has degree a once attached.
  static ABTreeCert prune_root(ABTreeCert c) {
    if (c.b == 1) return c;
    Vertex last = -1;
    for (auto [child, par] : c.parent)
      if (par == c.root) last = std::max(last, child);
    std::set<Vertex> gone{last};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [child, par] : c.parent)
        if (gone.count(par) && gone.insert(child).second) grew = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v : c.vertices)
      if (!gone.count(v)) keep.push_back(v);
    for (Vertex v : gone) c.parent.erase(v);
    c.vertices = VertexSet(keep);
    return c;
  }

  /// Theta through x from a stable set S of D, via three-in-a-tree on the tips.
  std::optional<ThetaWitness> theta_from_stable(Vertex x, const PathFamily& f, const std::vector<std::size_t>& longs,
                                                const VertexSet& s) {
    if (s.size() < 3) return std::nullopt;
    std::vector<Vertex> body, z;
    for (Vertex pi : s) {
      const auto& p = f.paths[longs[static_cast<std::size_t>(pi)]];
      z.push_back(p[1]);
      for (Vertex v : p)
        if (v != x) body.push_back(v);
    }
    auto g1 = induced_subgraph(g_, VertexSet(body));
    std::vector<Vertex> z_local;
    for (Vertex v : z)
      z_local.push_back(static_cast<Vertex>(std::lower_bound(g1.to_host.begin(), g1.to_host.end(), v) - g1.to_host.begin()));
    auto tree = three_in_a_tree(g1.graph, VertexSet(z_local), caps_);
    if (!tree.found()) {
      tr_.note(std::string("grow: tips not in a common tree (") + to_string(tree.status) + ")");
      return std::nullopt;
    }
    // The terminals are leaves of the tree; join them through the branch vertex.
    const Graph& h = g1.graph;
    const Bits in_tree = tree.witness->vertices.to_bits(h.order());
    auto path_in_tree = [&](Vertex from, Vertex to) {
      std::vector<Vertex> prev(static_cast<std::size_t>(h.order()), -1);
      std::vector<Vertex> queue{from};
      prev[static_cast<std::size_t>(from)] = from;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for_each_bit(h.neighbors(queue[i]) & in_tree, [&](Vertex w) {
          if (prev[static_cast<std::size_t>(w)] < 0) {
            prev[static_cast<std::size_t>(w)] = queue[i];
            queue.push_back(w);
          }
        });
      std::vector<Vertex> out{to};
      while (out.back() != from) out.push_back(prev[static_cast<std::size_t>(out.back())]);
      std::reverse(out.begin(), out.end());
      return out;
    };
    const auto& term = tree.witness->terminals;
    auto p01 = path_in_tree(term[0], term[1]);
    auto p02 = path_in_tree(term[0], term[2]);
    std::size_t k = 0;
    while (k + 1 < p01.size() && k + 1 < p02.size() && p01[k + 1] == p02[k + 1]) ++k;
    const Vertex c = p01[k];
    ThetaWitness w{x, g1.to_host[static_cast<std::size_t>(c)], {}};
    for (std::size_t i = 0; i < 3; ++i) {
      auto leg = path_in_tree(term[i], c);
      std::vector<Vertex> full{x};
      for (Vertex v : leg) full.push_back(g1.to_host[static_cast<std::size_t>(v)]);
      w.paths[i] = std::move(full);
    }
    if (auto v = is_theta_witness(g_, w); !v) throw std::logic_error("grow_ab_tree: low branch theta invalid: " + v.reason);
    tr_.note("grow: tips lie in a tree, theta at " + std::to_string(x) + "," + std::to_string(w.y));
    return w;
  }

  const Graph& g_;
  Vertex y_;
  int a_, t_;
  const Thresholds& thr_;
  ExtractionTrace& tr_;
  const SearchCaps& caps_;
};

inline void check_family(const Graph& g, Vertex x, Vertex y, const PathFamily& f) {
  if (f.x != x || f.y != y) throw InvalidInput("path family ends do not match x, y");
  if (auto v = validate_path_family(g, f); !v) throw InvalidInput("malformed path family: " + v.reason);
}

}  // namespace detail

/// Induced (a,b)-tree rooted at x inside the union of the paths minus y, or a
/// theta / K_t / K_{3,3} found on the way, or the first unmet threshold.
inline Outcome<ABTreeCert> grow_ab_tree(const Graph& g, Vertex x, Vertex y, const PathFamily& f, int a, int b, int t,
                                        const Thresholds& thr = {}, ExtractionTrace* trace = nullptr,
                                        const SearchCaps& caps = {}) {
  if (a < 1 || b < 1 || t < 1) throw InvalidInput("grow_ab_tree needs a, b, t >= 1");
  detail::check_family(g, x, y, f);
  ExtractionTrace local;
  detail::GrowRun run(g, y, a, t, thr, trace ? *trace : local, caps);
  return run.grow(x, f, b);
}

/// H plus one new vertex (id |V(H)|) joined to the least vertex of every component.
inline Graph forest_completion(const Graph& h) {
  if (!is_forest(h)) throw InvalidInput("H is not a forest");
  const int n = h.order();
  GraphBuilder b(n + 1);
  for (const Edge& e : h.edges()) b.add_edge(e.u, e.v);
  for (const Bits& comp : components(h, h.full_set())) b.add_edge(static_cast<Vertex>(comp.find_first()), n);
  return b.build();
}

/// Induced copy of forest_completion(H) inside the tree certified by `cert`;
/// returns the embedding of H alone.
inline std::optional<Embedding> embed_forest_in_tree(const Graph& g, const ABTreeCert& cert, const Graph& h) {
  const Graph hp = forest_completion(h);
  // Search in BFS order from the added vertex so every pattern vertex after
  // the first has a placed neighbour.
  std::vector<Vertex> order{h.order()};
  std::vector<int> pos(static_cast<std::size_t>(hp.order()), -1);
  pos[static_cast<std::size_t>(h.order())] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for_each_bit(hp.neighbors(order[i]), [&](Vertex w) {
      if (pos[static_cast<std::size_t>(w)] < 0) {
        pos[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
        order.push_back(w);
      }
    });
  GraphBuilder relabelled(hp.order());
  for (const Edge& e : hp.edges()) relabelled.add_edge(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);

  auto sub = induced_subgraph(g, cert.vertices);
  SearchCaps caps;
  caps.max_vertices = std::max(caps.max_vertices, sub.graph.order());
  auto hit = find_induced(sub.graph, relabelled.build(), caps);
  if (!hit.found()) return std::nullopt;
  Embedding e;
  for (int i = 0; i < h.order(); ++i) {
    const auto local = hit.witness->map[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
    e.map.push_back(sub.to_host[static_cast<std::size_t>(local)]);
  }
  return e;
}

/// Induced copy of the forest H, via an (h+1, h+1)-tree grown from the paths.
inline Outcome<Embedding> embed_forest(const Graph& g, Vertex x, Vertex y, const PathFamily& f, const Graph& h, int t,
                                       const Thresholds& thr = {}, ExtractionTrace* trace = nullptr,
                                       const SearchCaps& caps = {}) {
  if (!is_forest(h)) throw InvalidInput("H is not a forest");
  if (t < 1) throw InvalidInput("embed_forest needs t >= 1");
  detail::check_family(g, x, y, f);
  ExtractionTrace local;
  ExtractionTrace& tr = trace ? *trace : local;
  const int k = h.order() + 1;
  if (h.order() <= 1) {
    tr.note("embed_forest: H has at most one vertex");
    return Embedding{h.order() == 1 ? std::vector<Vertex>{x} : std::vector<Vertex>{}};
  }
  auto grown = grow_ab_tree(g, x, y, f, k, k, t, thr, &tr, caps);
  if (!std::holds_alternative<ABTreeCert>(grown)) {
    return std::visit(
        [](auto&& w) -> Outcome<Embedding> {
          using W = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<W, ABTreeCert>) {
            throw std::logic_error("unreachable");
          } else {
            return w;
          }
        },
        grown);
  }
  auto e = embed_forest_in_tree(g, std::get<ABTreeCert>(grown), h);
  if (!e) throw std::logic_error("embed_forest: (h+1,h+1)-tree without a copy of H+");
  tr.note("embed_forest: embedded H");
  return *e;
}

}  // namespace thetakit
