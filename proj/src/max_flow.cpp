#include "clawdec/max_flow.hpp"

#include <algorithm>

namespace clawdec {

int FlowNetwork::add_arc(int u, int v, int cap, int reverse_cap) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({v, head_[u], cap, 0});
  head_[u] = id;
  arcs_.push_back({u, head_[v], reverse_cap, 0});
  head_[v] = id + 1;
  return id;
}

bool FlowNetwork::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::vector<int> queue{source};
  level_[source] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
      const Arc& arc = arcs_[a];
      if (arc.flow < arc.cap && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int FlowNetwork::push(int u, int sink, int amount) {
  if (u == sink) return amount;
  for (int& a = cursor_[u]; a >= 0; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    if (arc.flow < arc.cap && level_[arc.to] == level_[u] + 1) {
      const int pushed = push(arc.to, sink, std::min(amount, arc.cap - arc.flow));
      if (pushed > 0) {
        arc.flow += pushed;
        arcs_[a ^ 1].flow -= pushed;
        return pushed;
      }
    }
  }
  return 0;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int total = 0;
  while (total < limit && build_levels(source, sink)) {
    cursor_ = head_;
    while (total < limit) {
      const int pushed = push(source, sink, limit - total);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
      const Arc& arc = arcs_[a];
      if (arc.flow < arc.cap && !seen[arc.to]) {
        seen[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace clawdec
