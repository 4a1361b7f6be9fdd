#pragma once

#include <limits>
#include <vector>

namespace clawdec {

// Small-capacity max-flow by shortest augmenting paths (Dinic phases).
// Shared by the orientation solver and the connectivity checks; both need
// the residual source side as a cut certificate.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1), level_(nodes), cursor_(nodes) {}

  int node_count() const { return static_cast<int>(head_.size()); }

  // Arc u->v with capacity `cap` and reverse capacity `reverse_cap`.
  // Returns the arc id; its flow is readable through flow().
  int add_arc(int u, int v, int cap, int reverse_cap = 0);

  // Augments until no path remains or the flow value reaches `limit`.
  int max_flow(int source, int sink, int limit = std::numeric_limits<int>::max());

  int flow(int arc) const { return arcs_[arc].flow; }
  int capacity(int arc) const { return arcs_[arc].cap; }

  // Nodes reachable from `source` in the residual network after max_flow.
  std::vector<bool> source_side(int source) const;

 private:
  struct Arc {
    int to;
    int next;
    int cap;
    int flow;
  };

  bool build_levels(int source, int sink);
  int push(int u, int sink, int amount);

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace clawdec
