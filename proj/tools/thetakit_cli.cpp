// thetakit command line: generators, detectors, separability, extraction,
// constants, treewidth and the verification suites.
//
// Exit codes: 0 pass, 1 fail, 2 usage error, 3 cap-exceeded partial.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "thetakit/thetakit.hpp"

namespace {

using namespace thetakit;
using json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kPartial = 3;

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  return parse_graph(text, format == "auto" ? sniff_format(text) : parse_format(format));
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("expected comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

json to_json(const VertexSet& s) { return s.members(); }

json to_json(const PathFamily& f) { return {{"x", f.x}, {"y", f.y}, {"paths", f.paths}}; }

json to_json(const ThetaWitness& w) {
  return {{"x", w.x}, {"y", w.y}, {"paths", {w.paths[0], w.paths[1], w.paths[2]}}};
}

json to_json(const ABTreeCert& c) {
  json parent = json::object();
  for (const auto& [v, p] : c.parent) parent[std::to_string(v)] = p;
  return {{"root", c.root}, {"a", c.a}, {"b", c.b}, {"vertices", to_json(c.vertices)}, {"parent", parent}};
}

json to_json(const Embedding& e) { return e.map; }

template <class Cert>
json outcome_json(const Outcome<Cert>& o) {
  json j;
  j["outcome"] = outcome_kind(o);
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, ThresholdUnmet>) {
          j["threshold"] = v.which;
          j["required"] = v.required.str();
          j["available"] = v.available;
        } else if constexpr (std::is_same_v<V, Clique>) {
          j["witness"] = to_json(v.vertices);
        } else if constexpr (std::is_same_v<V, Biclique>) {
          j["witness"] = {{"left", to_json(v.left)}, {"right", to_json(v.right)}};
        } else {
          j["witness"] = to_json(v);
        }
      },
      o);
  return j;
}

/// "paper", a number (every threshold fixed), or a JSON file {"all": n, "<name>": n, ...}.
Thresholds load_thresholds(const std::string& arg) {
  if (arg == "paper") return Thresholds::paper();
  if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return Thresholds::fixed(std::stoul(arg));
  }
  json j;
  try {
    j = json::parse(slurp(arg));
  } catch (const json::parse_error& e) {
    throw InvalidInput("thresholds file: " + std::string(e.what()));
  }
  if (!j.is_object()) throw InvalidInput("thresholds file must hold an object");
  Thresholds t = j.contains("all") ? Thresholds::fixed(j["all"].get<unsigned long>()) : Thresholds::paper();
  for (const auto& [k, v] : j.items()) {
    if (k == "all") continue;
    if (!v.is_number_unsigned()) throw InvalidInput("threshold '" + k + "' must be a non-negative integer");
    t.set(k, TowerInt(v.get<unsigned long>()));
  }
  return t;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

Graph generate(const std::string& family, const std::vector<std::string>& raw) {
  auto num = [&](std::size_t i) {
    if (i >= raw.size()) throw InvalidInput("family '" + family + "' needs more parameters");
    return std::stod(raw[i]);
  };
  auto whole = [&](std::size_t i) { return static_cast<int>(num(i)); };
  if (family == "random") return random_graph(whole(0), num(1), raw.size() > 2 ? std::stoull(raw[2]) : 1);
  if (family == "ab-tree") return ab_tree_graph(whole(0), whole(1)).graph;
  if (family == "subdivided-wall" || family == "line-wall") {
    std::mt19937_64 rng(raw.size() > 2 ? std::stoull(raw[2]) : 1);
    const Graph w = wall(whole(0));
    Graph s = subdivide(w, random_plan(w, whole(1), rng));
    return family == "line-wall" ? line_graph(s).graph : s;
  }
  if (family == "constellation") {
    std::vector<int> lengths;
    for (std::size_t i = 1; i < raw.size(); ++i) lengths.push_back(whole(i));
    return full_constellation(whole(0), lengths).graph;
  }
  std::vector<int> params;
  for (std::size_t i = 0; i < raw.size(); ++i) params.push_back(whole(i));
  return canonical(family, params);
}

TowerInt constant(const std::string& seq, const std::vector<int>& p) {
  auto need = [&](std::size_t k, const char* names) {
    if (p.size() != k) throw InvalidInput("--seq " + seq + " takes --params " + names);
  };
  if (seq == "sigma") { need(2, "s,r"); return sigma(p[0], p[1]); }
  if (seq == "theta") { need(2, "a,n"); return tree_constants(p[0], p[1]).theta; }
  if (seq == "mu") { need(2, "a,n"); return tree_constants(p[0], p[1]).mu; }
  if (seq == "lambda") { need(2, "a,n"); return tree_constants(p[0], p[1]).lambda; }
  if (seq == "dsep") { need(1, "h"); return sep_constant(p[0]); }
  if (seq == "dmain") {
    need(2, "h,d'");
    return main_constant(sep_constant(p[0]), TowerInt(p[1]));
  }
  throw InvalidInput("unknown sequence '" + seq + "'");
}

int status_code(SearchStatus s) {
  return s == SearchStatus::cap_exceeded || s == SearchStatus::cancelled ? kPartial : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thetakit: theta-free graph toolkit"};
  app.require_subcommand(1);
  std::string input = "-";
  std::string format = "auto";
  int max_vertices = 0;
  app.add_option("--max-vertices", max_vertices, "search vertex cap (default: THETAKIT_CAPS or 64)");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input, "graph file, - for stdin")->capture_default_str();
    sub->add_option("--format,-f", format, "auto, graph6 or edge-json")->capture_default_str();
  };

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated graph");
  std::string family;
  std::vector<std::string> gen_params;
  std::string out_format = "graph6";
  gen->add_option("family", family,
                  "complete, biclique, cycle, path, prism, theta, wall, petersen, random (n p seed), ab-tree (a b), "
                  "subdivided-wall / line-wall (t max seed), constellation (s lengths...)")
      ->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("--format,-f", out_format, "graph6 or edge-json")->capture_default_str();

  // detect
  auto* detect = app.add_subcommand("detect", "search for an induced pattern");
  std::string pattern;
  int s_param = 2, l_param = 3, r_param = 3;
  std::string z_list;
  detect->add_option("--pattern,-p", pattern, "theta, prism, clique, biclique, constellation, constricted, wall-line")
      ->required()
      ->check(CLI::IsMember({"theta", "prism", "clique", "biclique", "constellation", "constricted", "wall-line"}));
  detect->add_option("--s", s_param, "biclique side / constellation centres")->capture_default_str();
  detect->add_option("--l", l_param, "constellation paths")->capture_default_str();
  detect->add_option("--r", r_param, "wall size")->capture_default_str();
  detect->add_option("--z", z_list, "terminal set for constricted, e.g. 0,4,7");
  add_input(detect);

  // sep
  auto* sep = app.add_subcommand("sep", "internally disjoint induced paths");
  std::string pair;
  bool all_pairs = false;
  int lambda = 0;
  int exact_vertices = SeparabilityCaps{}.exact_vertices;
  auto* pair_opt = sep->add_option("--pair", pair, "x,y");
  sep->add_flag("--all", all_pairs, "maximum over all nonadjacent pairs")->excludes(pair_opt);
  sep->add_option("--lambda", lambda, "also report lambda-separability");
  sep->add_option("--exact-vertices", exact_vertices, "exact search cap")->capture_default_str();
  add_input(sep);

  // grow / embed-forest
  int a = 2, b = 2, x = 0, y = 1, t = 3;
  std::string thresholds = "paper";
  bool show_trace = false;
  std::string forest;
  auto* grow = app.add_subcommand("grow", "grow an (a,b)-tree from x along induced x-y paths");
  grow->add_option("--a", a)->capture_default_str();
  grow->add_option("--b", b)->capture_default_str();
  auto* embed = app.add_subcommand("embed-forest", "embed a forest through a grown tree");
  embed->add_option("--forest", forest, "forest graph file")->required();
  for (auto* sub : {grow, embed}) {
    sub->add_option("--x", x)->capture_default_str();
    sub->add_option("--y", y)->capture_default_str();
    sub->add_option("--t", t, "clique bound")->capture_default_str();
    sub->add_option("--thresholds", thresholds, "paper, a number, or a JSON file")->capture_default_str();
    sub->add_flag("--trace", show_trace, "include the step trace");
    add_input(sub);
  }

  // consts
  auto* consts = app.add_subcommand("consts", "evaluate a constant");
  std::string seq, params;
  double max_digits = 1000;
  consts->add_option("--seq", seq, "sigma, theta, mu, lambda, dsep, dmain")
      ->required()
      ->check(CLI::IsMember({"sigma", "theta", "mu", "lambda", "dsep", "dmain"}));
  consts->add_option("--params", params, "comma-separated, e.g. 2,3")->required();
  consts->add_option("--max-digits", max_digits, "print the exact decimal up to this length")->capture_default_str();

  // tw
  auto* tw = app.add_subcommand("tw", "exact treewidth");
  bool bags = false;
  tw->add_flag("--bags", bags, "print the decomposition");
  add_input(tw);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::string report_path;
  bool list = false;
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--report", report_path, "write the JSON report here (- for stdout)");
  verify->add_flag("--list", list, "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    SearchCaps caps = SearchCaps::from_env();
    if (max_vertices > 0) caps.max_vertices = max_vertices;

    if (*gen) {
      std::cout << emit_graph(generate(family, gen_params), parse_format(out_format)) << "\n";
      return kPass;
    }

    if (*detect) {
      const Graph g = load_graph(input, format);
      json j{{"pattern", pattern}, {"order", g.order()}};
      int rc = kPass;
      if (pattern == "theta") {
        auto r = find_theta(g, caps);
        j["status"] = to_string(r.status);
        if (r.found()) j["witness"] = to_json(*r.witness);
        rc = status_code(r.status);
      } else if (pattern == "prism") {
        auto r = find_prism(g, caps);
        j["status"] = to_string(r.status);
        if (r.found()) {
          j["lengths"] = {r.witness->l1, r.witness->l2, r.witness->l3};
          j["witness"] = to_json(r.witness->embedding);
        }
        rc = status_code(r.status);
      } else if (pattern == "clique") {
        auto r = clique_number(g);
        j["status"] = "found";
        j["clique_number"] = r.size;
        j["witness"] = to_json(r.witness);
      } else if (pattern == "biclique") {
        auto r = find_biclique(g, s_param, caps);
        j["s"] = s_param;
        j["status"] = to_string(r.status);
        if (r.found()) j["witness"] = to_json(*r.witness);
        rc = status_code(r.status);
      } else if (pattern == "constellation") {
        auto r = find_constellation(g, s_param, l_param, caps);
        j["s"] = s_param;
        j["l"] = l_param;
        j["status"] = to_string(r.status);
        if (r.found()) j["witness"] = {{"centers", to_json(r.witness->centers)}, {"paths", r.witness->paths}};
        rc = status_code(r.status);
      } else if (pattern == "constricted") {
        const VertexSet z(int_list(z_list));
        auto r = three_in_a_tree(g, z, caps);
        j["z"] = to_json(z);
        j["status"] = to_string(r.status);
        if (r.status == SearchStatus::found || r.status == SearchStatus::none) j["constricted"] = !r.found();
        if (r.found()) j["witness"] = {{"tree", to_json(r.witness->vertices)}, {"terminals", r.witness->terminals}};
        rc = status_code(r.status);
      } else {
        auto r = excludes_wall_line_graphs(g, r_param, caps);
        j["r"] = r_param;
        j["status"] = r.witness ? "found" : "none";
        j["excluded"] = r.excluded;
        j["partial"] = r.partial;
        j["vertex_budget"] = r.vertex_budget;
        j["patterns_checked"] = r.patterns_checked;
        if (r.witness) j["witness"] = to_json(*r.witness);
        if (r.partial) rc = kPartial;
      }
      print(j);
      return rc;
    }

    if (*sep) {
      const Graph g = load_graph(input, format);
      const SeparabilityCaps sc{exact_vertices};
      json j{{"order", g.order()}};
      bool exact = true;
      int count = 0;
      if (!pair.empty()) {
        const auto xy = int_list(pair);
        if (xy.size() != 2) throw InvalidInput("--pair takes x,y");
        auto pk = max_internally_disjoint_paths(g, xy[0], xy[1], sc);
        j["x"] = xy[0];
        j["y"] = xy[1];
        j["count"] = pk.count;
        j["upper_bound"] = pk.upper_bound;
        j["exact"] = pk.exact;
        j["family"] = to_json(pk.family);
        exact = pk.exact;
        count = pk.count;
      } else if (all_pairs) {
        auto rep = separability(g, sc);
        j["has_pair"] = rep.has_pair;
        j["lambda_star"] = rep.lambda_star;
        j["upper_bound"] = rep.upper_bound;
        j["exact"] = rep.exact;
        if (rep.has_pair) j["witness"] = to_json(rep.witness);
        exact = rep.exact;
        count = rep.lambda_star;
      } else {
        throw InvalidInput("sep needs --pair x,y or --all");
      }
      if (lambda > 0) j["separable"] = count < lambda;
      print(j);
      return exact ? kPass : kPartial;
    }

    if (*grow || *embed) {
      const Graph g = load_graph(input, format);
      const Thresholds thr = load_thresholds(thresholds);
      if (!g.valid(x) || !g.valid(y)) throw InvalidInput("x or y out of range");
      const PathFamily f = max_internally_disjoint_paths(g, x, y).family;
      ExtractionTrace trace;
      json j{{"x", x}, {"y", y}, {"paths", f.paths.size()}, {"thresholds", thr.is_paper() ? "paper" : thresholds}};
      try {
        if (*grow) {
          j.update(outcome_json(grow_ab_tree(g, x, y, f, a, b, t, thr, &trace, caps)));
        } else {
          const Graph h = load_graph(forest, "auto");
          j.update(outcome_json(embed_forest(g, x, y, f, h, t, thr, &trace, caps)));
        }
      } catch (const CapExceeded& e) {
        j["outcome"] = "cap_exceeded";
        j["reason"] = e.what();
        print(j);
        return kPartial;
      }
      if (show_trace) j["trace"] = trace.steps;
      print(j);
      return kPass;
    }

    if (*consts) {
      const TowerInt v = constant(seq, int_list(params));
      json j{{"seq", seq}, {"params", params}, {"tower", v.str()}, {"digits", digit_estimate(v)}};
      if (auto d = decimal(v, max_digits)) j["decimal"] = *d;
      print(j);
      return kPass;
    }

    if (*tw) {
      const Graph g = load_graph(input, format);
      auto r = treewidth_exact(g);
      json j{{"order", g.order()}, {"treewidth", r.width}};
      if (bags) {
        json bs = json::array();
        for (const auto& bag : r.decomposition.bags) bs.push_back(to_json(bag));
        j["bags"] = bs;
        json te = json::array();
        for (const Edge& e : r.decomposition.tree.edges()) te.push_back({e.u, e.v});
        j["tree_edges"] = te;
      }
      print(j);
      return kPass;
    }

    if (*verify) {
      if (list) {
        for (const auto& n : suite_names()) std::cout << n << "\n";
        return kPass;
      }
      if (suite.empty()) throw InvalidInput("verify needs --suite (or --list)");
      std::vector<std::string> which = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      json reports = json::array();
      int worst = kPass;
      for (const auto& name : which) {
        const Report rep = run_suite(name, seed, caps);
        std::cerr << name << ": " << rep.status() << " (" << static_cast<long long>(rep.runtime_ms) << " ms)\n"
                  << rep.summary();
        reports.push_back(rep.to_json());
        const int rc = rep.exit_code();
        if (rc == kFail || (rc == kPartial && worst == kPass)) worst = rc;
      }
      if (!report_path.empty()) {
        const json out = which.size() == 1 ? reports[0] : reports;
        if (report_path == "-") {
          print(out);
        } else {
          std::ofstream(report_path) << out.dump(2) << "\n";
        }
      }
      return worst;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
