#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clawdec/graph.hpp"

namespace clawdec {

// A direction for every edge of a graph. tails[e] is the endpoint edge e
// leaves; the other endpoint is its head.
class Orientation {
 public:
  Orientation(const Graph& g, std::vector<int> tails);

  const Graph& graph() const { return graph_; }
  int tail(int e) const { return tails_[e]; }
  int head(int e) const { return graph_.edge(e).other(tails_[e]); }
  const std::vector<int>& tails() const { return tails_; }

  int out_degree(int v) const { return out_[v]; }
  int in_degree(int v) const { return graph_.degree(v) - out_[v]; }

  // One "tail head" line per edge, in edge order.
  std::string to_text() const;

 private:
  Graph graph_;
  std::vector<int> tails_;
  std::vector<int> out_;
};

// Budgets may be negative; such a vertex is its own violating set.
using InDegreeBudget = std::vector<int>;

// Witness that no orientation meets the budget: e_G(S) exceeds sum of p over S.
struct ViolatingSet {
  VertexSet members;
  int excess = 0;
};

int budget_excess(const Graph& g, const VertexSet& s, const InDegreeBudget& p);

// Orientation with in-degree at most p(v) everywhere, or a violating set.
// Runs one max-flow: source -> edge node (cap 1) -> both endpoints (cap 1)
// -> sink (cap p(v)). The violating set is the vertex part of the residual
// source side, recounted before it is returned.
std::variant<Orientation, ViolatingSet> hakimi_orient(const Graph& g, const InDegreeBudget& p);

struct NotFound {
  std::int64_t nodes = 0;
};

struct ModKOptions {
  std::int64_t node_limit = 50'000'000;
};

// Exhaustive search for an orientation with d+(v) = p(v) (mod k). Throws
// ParityMismatch when |E| and sum p disagree mod k, BudgetExceeded past
// the node limit.
std::variant<Orientation, NotFound> mod_k_orientation(const Graph& g, int k,
                                                      const std::vector<int>& p,
                                                      const ModKOptions& options = {});

struct Star {
  int center = 0;
  std::vector<int> edges;  // edge indices, ascending
};

struct StarDecomposition {
  int k = 0;
  std::vector<Star> stars;
};

// Groups every vertex's out-edges into consecutive runs of k by edge index.
// Throws PreconditionViolated naming a vertex whose out-degree is not 0 mod k.
StarDecomposition stars_from_zero_orientation(const Orientation& o, int k);

struct OrientationCheck {
  bool ok = true;
  std::vector<int> violating_vertices;
};

OrientationCheck verify_in_bound(const Orientation& o, const InDegreeBudget& p);
OrientationCheck verify_residue(const Orientation& o, int k, const std::vector<int>& p);

}  // namespace clawdec
