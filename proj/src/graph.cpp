#include "clawdec/graph.hpp"

#include <algorithm>

namespace clawdec {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::LoopRejected: return "LoopRejected";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::MalformedFile: return "MalformedFile";
    case Errc::NotSimple: return "NotSimple";
    case Errc::UniverseExceeded: return "UniverseExceeded";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::SizeNotDivisible: return "SizeNotDivisible";
    case Errc::MaxDegreeTooLarge: return "MaxDegreeTooLarge";
    case Errc::NotFourRegular: return "NotFourRegular";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotTwoConnected: return "NotTwoConnected";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
    case Errc::BlockInvariantViolated: return "BlockInvariantViolated";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::InvalidRotation: return "InvalidRotation";
    case Errc::TranscriptionMissing: return "TranscriptionMissing";
    case Errc::ClaimFailed: return "ClaimFailed";
    case Errc::ParityImpossible: return "ParityImpossible";
    case Errc::NotDivisibleByThree: return "NotDivisibleByThree";
    case Errc::RefusedScale: return "RefusedScale";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
  if (n < 0 || n > kMaxVertices)
    throw Error(Errc::UniverseExceeded,
                "vertex count " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxVertices),
                n);
  Graph g;
  g.n_ = n;
  g.degree_.assign(n, 0);
  g.adjacency_.assign(n, VertexSet{});
  g.multiplicity_.assign(static_cast<std::size_t>(n) * n, 0);
  g.incidence_.assign(n, {});
  g.edges_.reserve(pairs.size());
  for (const Edge& e : pairs) {
    for (int w : {e.u, e.v})
      if (w < 0 || w >= n)
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(w), w);
    if (e.u == e.v) throw Error(Errc::LoopRejected, "loop at vertex " + std::to_string(e.u), e.u);
    const int idx = static_cast<int>(g.edges_.size());
    g.edges_.push_back(e);
    ++g.degree_[e.u];
    ++g.degree_[e.v];
    g.adjacency_[e.u].insert(e.v);
    g.adjacency_[e.v].insert(e.u);
    if (++g.multiplicity_[e.u * n + e.v] > 1) g.simple_ = false;
    ++g.multiplicity_[e.v * n + e.u];
    g.incidence_[e.u].push_back(idx);
    g.incidence_[e.v].push_back(idx);
  }
  return g;
}

int Graph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

int Graph::min_degree() const {
  return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

bool Graph::is_regular(int d) const {
  return std::all_of(degree_.begin(), degree_.end(), [d](int x) { return x == d; });
}

int Graph::edges_within(const VertexSet& a) const {
  int count = 0;
  for (const Edge& e : edges_)
    if (a.contains(e.u) && a.contains(e.v)) ++count;
  return count;
}

int Graph::cut_size(const VertexSet& a) const {
  int count = 0;
  for (const Edge& e : edges_)
    if (a.contains(e.u) != a.contains(e.v)) ++count;
  return count;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* original) const {
  std::vector<int> index(n_, -1);
  std::vector<int> back;
  for (int v = keep.first(); v >= 0 && v < n_; v = keep.next(v + 1)) {
    index[v] = static_cast<int>(back.size());
    back.push_back(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_)
    if (index[e.u] >= 0 && index[e.v] >= 0) kept.push_back({index[e.u], index[e.v]});
  if (original) *original = back;
  return from_edge_list(static_cast<int>(back.size()), kept);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) moved.push_back({perm[e.u], perm[e.v]});
  return from_edge_list(n_, moved);
}

bool Graph::is_connected() const { return connected_components(*this).size() <= 1; }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    const int root = unseen.first();
    VertexSet comp{root};
    VertexSet frontier{root};
    while (!frontier.empty()) {
      VertexSet grown;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v + 1)) grown |= g.neighbors(v);
      frontier = grown - comp;
      comp |= frontier;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

UnicyclicReport unicyclic_components_check(const Graph& g, const VertexSet& s) {
  UnicyclicReport report;
  std::vector<int> original;
  const Graph rest = g.induced(g.vertices() - s, &original);
  for (const VertexSet& comp : connected_components(rest)) {
    ComponentReport c;
    for (int v = comp.first(); v >= 0; v = comp.next(v + 1)) c.vertices.insert(original[v]);
    c.vertex_count = comp.count();
    c.edge_count = rest.edges_within(comp);
    if (c.edge_count != c.vertex_count) report.all_unicyclic = false;
    report.components.push_back(c);
  }
  return report;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v >= 0; v = s.next(v + 1))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) e.push_back({i, j});
  return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edge_list(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edge_list(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::from_edge_list(a + b, e);
}

Graph octahedron() {
  // Antipodal pairs {0,1}, {2,3}, {4,5}.
  std::vector<Edge> e;
  for (int j = 1; j < 6; ++j)
    for (int i = 0; i < j; ++i)
      if (i / 2 != j / 2) e.push_back({i, j});
  return Graph::from_edge_list(6, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edge_list(10, e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (!g.is_simple() || !h.is_simple())
    throw Error(Errc::NotSimple, "cartesian product factors must be simple");
  const long total = static_cast<long>(g.order()) * h.order();
  if (total > kMaxVertices)
    throw Error(Errc::UniverseExceeded, "product has " + std::to_string(total) + " vertices",
                total);
  const int m = h.order();
  std::vector<Edge> e;
  for (int a = 0; a < g.order(); ++a)
    for (const Edge& f : h.edges()) e.push_back({a * m + f.u, a * m + f.v});
  for (const Edge& f : g.edges())
    for (int b = 0; b < m; ++b) e.push_back({f.u * m + b, f.v * m + b});
  return Graph::from_edge_list(static_cast<int>(total), e);
}

}  // namespace clawdec
