#pragma once

// Small augmenting-path max-flow on integer capacities.

#include <algorithm>
#include <limits>
#include <vector>

namespace thetakit::detail {

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  int add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    return static_cast<int>(arcs_.size()) - 2;
  }

  /// Flow currently on the arc returned by add_arc.
  [[nodiscard]] int flow(int arc) const { return arcs_[static_cast<std::size_t>(arc) ^ 1].cap; }

  int max_flow(int source, int sink, int limit = std::numeric_limits<int>::max()) {
    int total = 0;
    while (total < limit) {
      std::vector<int> via(head_.size(), -1);
      std::vector<int> queue{source};
      std::vector<char> seen(head_.size(), 0);
      seen[static_cast<std::size_t>(source)] = 1;
      for (std::size_t qi = 0; qi < queue.size() && !seen[static_cast<std::size_t>(sink)]; ++qi) {
        const int u = queue[qi];
        for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
          const auto& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
            seen[static_cast<std::size_t>(arc.to)] = 1;
            via[static_cast<std::size_t>(arc.to)] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (!seen[static_cast<std::size_t>(sink)]) break;
      int push = limit - total;
      for (int v = sink; v != source; v = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)]) ^ 1].to) {
        push = std::min(push, arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].cap);
      }
      for (int v = sink; v != source; v = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)]) ^ 1].to) {
        arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].cap -= push;
        arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)]) ^ 1].cap += push;
      }
      total += push;
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace thetakit::detail
