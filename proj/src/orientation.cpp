#include "clawdec/orientation.hpp"

#include <sstream>

#include "clawdec/max_flow.hpp"

namespace clawdec {

Orientation::Orientation(const Graph& g, std::vector<int> tails)
    : graph_(g), tails_(std::move(tails)), out_(g.order(), 0) {
  if (static_cast<int>(tails_.size()) != g.size())
    throw Error(Errc::InvalidArgument, "orientation needs one tail per edge");
  for (int e = 0; e < g.size(); ++e) {
    if (!g.edge(e).touches(tails_[e]))
      throw Error(Errc::InvalidArgument, "tail of edge " + std::to_string(e) + " is not an endpoint", e);
    ++out_[tails_[e]];
  }
}

std::string Orientation::to_text() const {
  std::ostringstream out;
  for (int e = 0; e < graph_.size(); ++e) out << tail(e) << ' ' << head(e) << '\n';
  return out.str();
}

int budget_excess(const Graph& g, const VertexSet& s, const InDegreeBudget& p) {
  int budget = 0;
  for (int v = s.first(); v >= 0; v = s.next(v + 1)) budget += p[v];
  return g.edges_within(s) - budget;
}

std::variant<Orientation, ViolatingSet> hakimi_orient(const Graph& g, const InDegreeBudget& p) {
  if (static_cast<int>(p.size()) != g.order())
    throw Error(Errc::InvalidArgument, "budget must cover every vertex");
  for (int v = 0; v < g.order(); ++v)
    if (p[v] < 0) return ViolatingSet{VertexSet{v}, -p[v]};

  const int m = g.size();
  const int source = 0;
  const int sink = 1;
  auto edge_node = [](int e) { return 2 + e; };
  auto vertex_node = [m](int v) { return 2 + m + v; };

  FlowNetwork net(2 + m + g.order());
  std::vector<int> to_u(m), to_v(m);
  for (int e = 0; e < m; ++e) {
    net.add_arc(source, edge_node(e), 1);
    to_u[e] = net.add_arc(edge_node(e), vertex_node(g.edge(e).u), 1);
    to_v[e] = net.add_arc(edge_node(e), vertex_node(g.edge(e).v), 1);
  }
  for (int v = 0; v < g.order(); ++v) net.add_arc(vertex_node(v), sink, p[v]);

  if (net.max_flow(source, sink) == m) {
    // The endpoint receiving the unit is the head.
    std::vector<int> tails(m);
    for (int e = 0; e < m; ++e) tails[e] = net.flow(to_u[e]) == 1 ? g.edge(e).v : g.edge(e).u;
    return Orientation(g, std::move(tails));
  }

  const auto side = net.source_side(source);
  ViolatingSet witness;
  for (int v = 0; v < g.order(); ++v)
    if (side[vertex_node(v)]) witness.members.insert(v);
  witness.excess = budget_excess(g, witness.members, p);
  if (witness.excess <= 0)
    throw Error(Errc::PreconditionViolated, "min cut did not yield a violating set");
  return witness;
}

namespace {

class ModKSearch {
 public:
  ModKSearch(const Graph& g, int k, const std::vector<int>& p, std::int64_t limit)
      : g_(g), k_(k), limit_(limit), target_(g.order()), out_(g.order(), 0),
        undecided_(g.degrees()), tails_(g.size(), -1) {
    for (int v = 0; v < g.order(); ++v) target_[v] = ((p[v] % k) + k) % k;
  }

  bool run() { return step(); }
  std::int64_t nodes() const { return nodes_; }
  std::vector<int> tails() const { return tails_; }

 private:
  bool feasible(int v) const {
    const int gap = ((target_[v] - out_[v]) % k_ + k_) % k_;
    return gap <= undecided_[v];
  }

  bool step() {
    if (++nodes_ > limit_)
      throw Error(Errc::BudgetExceeded, "mod-k search passed " + std::to_string(limit_) + " nodes",
                  static_cast<long>(limit_));
    // Most constrained vertex: fewest undecided edges, but at least one.
    int pick = -1;
    for (int v = 0; v < g_.order(); ++v)
      if (undecided_[v] > 0 && (pick < 0 || undecided_[v] < undecided_[pick])) pick = v;
    if (pick < 0) return true;
    int edge = -1;
    for (int e : g_.incident_edges(pick))
      if (tails_[e] < 0) {
        edge = e;
        break;
      }
    const Edge& ends = g_.edge(edge);
    for (int tail : {ends.u, ends.v}) {
      tails_[edge] = tail;
      ++out_[tail];
      --undecided_[ends.u];
      --undecided_[ends.v];
      if (feasible(ends.u) && feasible(ends.v) && step()) return true;
      ++undecided_[ends.u];
      ++undecided_[ends.v];
      --out_[tail];
      tails_[edge] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::int64_t limit_;
  std::vector<int> target_;
  std::vector<int> out_;
  std::vector<int> undecided_;
  std::vector<int> tails_;
  std::int64_t nodes_ = 0;
};

}  // namespace

std::variant<Orientation, NotFound> mod_k_orientation(const Graph& g, int k, const std::vector<int>& p,
                                                      const ModKOptions& options) {
  if (k < 1) throw Error(Errc::InvalidArgument, "modulus must be positive", k);
  if (static_cast<int>(p.size()) != g.order())
    throw Error(Errc::InvalidArgument, "residues must cover every vertex");
  long total = 0;
  for (int r : p) total += r;
  if (((g.size() - total) % k + k) % k != 0)
    throw Error(Errc::ParityMismatch,
                "|E| = " + std::to_string(g.size()) + " but sum p = " + std::to_string(total) + " (mod " +
                    std::to_string(k) + ")");
  ModKSearch search(g, k, p, options.node_limit);
  for (int v = 0; v < g.order(); ++v) {
    // Vertices with no edges must already sit on their residue.
    const int gap = ((p[v] % k) + k) % k;
    if (g.degree(v) == 0 && gap != 0) return NotFound{0};
  }
  if (search.run()) return Orientation(g, search.tails());
  return NotFound{search.nodes()};
}

StarDecomposition stars_from_zero_orientation(const Orientation& o, int k) {
  const Graph& g = o.graph();
  std::vector<std::vector<int>> out_edges(g.order());
  for (int e = 0; e < g.size(); ++e) out_edges[o.tail(e)].push_back(e);
  StarDecomposition result{k, {}};
  for (int v = 0; v < g.order(); ++v) {
    if (out_edges[v].size() % k != 0)
      throw Error(Errc::PreconditionViolated,
                  "vertex " + std::to_string(v) + " has out-degree " + std::to_string(out_edges[v].size()),
                  v);
    for (std::size_t i = 0; i < out_edges[v].size(); i += k)
      result.stars.push_back({v, {out_edges[v].begin() + i, out_edges[v].begin() + i + k}});
  }
  return result;
}

OrientationCheck verify_in_bound(const Orientation& o, const InDegreeBudget& p) {
  OrientationCheck check;
  const Graph& g = o.graph();
  std::vector<int> in(g.order(), 0);
  for (int e = 0; e < g.size(); ++e) ++in[o.head(e)];
  for (int v = 0; v < g.order(); ++v)
    if (in[v] > p[v]) check.violating_vertices.push_back(v);
  check.ok = check.violating_vertices.empty();
  return check;
}

OrientationCheck verify_residue(const Orientation& o, int k, const std::vector<int>& p) {
  OrientationCheck check;
  const Graph& g = o.graph();
  std::vector<int> out(g.order(), 0);
  for (int e = 0; e < g.size(); ++e) ++out[o.tail(e)];
  for (int v = 0; v < g.order(); ++v)
    if (((out[v] - p[v]) % k + k) % k != 0) check.violating_vertices.push_back(v);
  check.ok = check.violating_vertices.empty();
  return check;
}

}  // namespace clawdec
