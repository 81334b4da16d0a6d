#pragma once

// graph6 and edge-json readers and writers.
//
// graph6: N(n) then the upper triangle in column order (x(0,1), x(0,2),
// x(1,2), x(0,3), ...), six bits per byte, each byte offset by 63. An optional
// ">>graph6<<" header and one trailing newline are accepted.
// edge-json: {"n": int, "edges": [[u, v], ...]}, zero-indexed. Emitted with
// "n" first and edges as sorted pairs u < v.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thetakit/graph.hpp"

namespace thetakit {

/// Malformed input; `position` is a byte offset (graph6, json syntax) or an edge index.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)), position_(position) {}

  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class GraphFormat { graph6, edge_json };

inline GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edge-json" || name == "json") return GraphFormat::edge_json;
  throw InvalidInput("unknown graph format '" + std::string(name) + "'");
}

/// edge-json when the first non-blank byte is '{', else graph6.
inline GraphFormat sniff_format(std::string_view input) {
  for (char c : input) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    return c == '{' ? GraphFormat::edge_json : GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline void put_n(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.push_back(126);
  if (groups == 6) out.push_back(126);
  for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  detail::put_n(out, n);
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = acc = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  std::size_t at = 0;
  if (s.substr(0, detail::kGraph6Header.size()) == detail::kGraph6Header) at = detail::kGraph6Header.size();
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);

  auto group = [&](std::size_t pos) -> int {
    if (pos >= s.size()) throw ParseError("graph6 input ends early", pos);
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", pos);
    return c - 63;
  };
  for (std::size_t pos = at; pos < s.size(); ++pos) group(pos);
  std::uint64_t n = 0;
  if (at >= s.size()) throw ParseError("graph6 input is empty", at);
  if (group(at) < 63) {
    n = static_cast<std::uint64_t>(group(at++));
  } else {
    ++at;
    int groups = 3;
    if (at < s.size() && static_cast<unsigned char>(s[at]) == 126) {
      groups = 6;
      ++at;
    }
    for (int k = 0; k < groups; ++k) n = (n << 6) | static_cast<std::uint64_t>(group(at++));
  }
  if (n > 1'000'000) throw ParseError("graph6 order too large", 0);

  const auto order = static_cast<int>(n);
  const std::uint64_t total = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = static_cast<std::size_t>((total + 5) / 6);
  if (s.size() - at < need) throw ParseError("graph6 input ends early", s.size());
  if (s.size() - at > need) throw ParseError("graph6 input has trailing bytes", at + need);

  GraphBuilder b(order);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < order; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t pos = at + static_cast<std::size_t>(k / 6);
      if ((group(pos) >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (need > 0 && total % 6 != 0) {
    const std::size_t pos = at + need - 1;
    const int pad = static_cast<int>(6 - total % 6);
    if (group(pos) & ((1 << pad) - 1)) throw ParseError("graph6 padding bits are not zero", pos);
  }
  return b.build();
}

inline std::string to_edge_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j.dump();
}

inline Graph from_edge_json(std::string_view s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("edge-json syntax error: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("edge-json must be an object", 0);
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("edge-json needs an integer \"n\"", 0);
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 1'000'000) throw ParseError("edge-json \"n\" out of range", 0);
  const auto edges = j.value("edges", nlohmann::json::array());
  if (!edges.is_array()) throw ParseError("edge-json \"edges\" must be an array", 0);
  GraphBuilder b(static_cast<int>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("edge-json edge is not a pair of integers", i);
    }
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge-json endpoint out of range", i);
    if (u == v) throw ParseError("edge-json self-loop", i);
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return b.build();
}

inline Graph parse_graph(std::string_view input, GraphFormat f) {
  return f == GraphFormat::graph6 ? from_graph6(input) : from_edge_json(input);
}

inline std::string emit_graph(const Graph& g, GraphFormat f) {
  return f == GraphFormat::graph6 ? to_graph6(g) : to_edge_json(g);
}

}  // namespace thetakit
