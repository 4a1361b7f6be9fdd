#include "clawdec/connectivity.hpp"

#include <bit>
#include <cstdint>

#include "clawdec/max_flow.hpp"

namespace clawdec {

const char* cut_kind_name(CutKind kind) {
  switch (kind) {
    case CutKind::EdgeCut: return "EdgeCut";
    case CutKind::VertexCut: return "VertexCut";
    case CutKind::EssentialEdgeCut: return "EssentialEdgeCut";
  }
  return "Unknown";
}

namespace {

void require_connected(const Graph& g) {
  if (g.order() < 2) throw Error(Errc::InvalidArgument, "need at least two vertices", g.order());
  if (!g.is_connected()) throw Error(Errc::Disconnected, "graph is disconnected");
}

// Undirected edges as arc pairs, one per parallel copy.
FlowNetwork edge_network(const Graph& g, int extra_nodes) {
  FlowNetwork net(g.order() + extra_nodes);
  for (const Edge& e : g.edges()) net.add_arc(e.u, e.v, 1, 1);
  return net;
}

VertexSet vertex_side(const std::vector<bool>& reach, int n) {
  VertexSet side;
  for (int v = 0; v < n; ++v)
    if (reach[v]) side.insert(v);
  return side;
}

CutCertificate edge_cut(const Graph& g, const VertexSet& side, CutKind kind) {
  return {kind, side, g.cut_size(side), cut_shares_common_vertex(g, side)};
}

}  // namespace

bool cut_shares_common_vertex(const Graph& g, const VertexSet& side) {
  const Edge* first = nullptr;
  bool u_ok = true, v_ok = true;
  for (const Edge& e : g.edges()) {
    if (side.contains(e.u) == side.contains(e.v)) continue;
    if (!first) {
      first = &e;
      continue;
    }
    u_ok = u_ok && e.touches(first->u);
    v_ok = v_ok && e.touches(first->v);
  }
  return !first || u_ok || v_ok;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !g.is_connected()) return false;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet keep = g.vertices();
    keep.erase(v);
    if (!g.induced(keep).is_connected()) return false;
  }
  return true;
}

ConnectivityResult edge_connectivity(const Graph& g) {
  require_connected(g);
  int weakest = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(weakest)) weakest = v;
  ConnectivityResult best{g.degree(weakest), edge_cut(g, VertexSet{weakest}, CutKind::EdgeCut)};
  for (int t = 1; t < g.order(); ++t) {
    FlowNetwork net = edge_network(g, 0);
    const int value = net.max_flow(0, t, best.value);
    if (value < best.value) {
      best.value = value;
      best.cut = edge_cut(g, vertex_side(net.source_side(0), g.order()), CutKind::EdgeCut);
    }
  }
  return best;
}

ConnectivityResult vertex_connectivity(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  const int big = n + 1;
  auto in_node = [](int v) { return 2 * v; };
  auto out_node = [](int v) { return 2 * v + 1; };

  ConnectivityResult best;
  best.cut.kind = CutKind::VertexCut;
  best.value = n - 1;
  best.cut.side = g.vertices();
  best.cut.side.erase(n - 1);
  best.cut.size = n - 1;
  // Neighbourhood of a minimum-degree vertex, when that separates anything.
  for (int v = 0; v < n; ++v) {
    const VertexSet nb = g.neighbors(v);
    if (nb.count() < best.value && nb.count() + 1 < n) {
      best.value = nb.count();
      best.cut.side = nb;
      best.cut.size = nb.count();
    }
  }
  // Some vertex among the first best+1 avoids a minimum separator; pairing it
  // with every later vertex finds that separator.
  for (int s = 0; s < n && s <= best.value; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      FlowNetwork net(2 * n);
      for (int v = 0; v < n; ++v) net.add_arc(in_node(v), out_node(v), (v == s || v == t) ? big : 1);
      for (const Edge& e : g.edges()) {
        net.add_arc(out_node(e.u), in_node(e.v), big);
        net.add_arc(out_node(e.v), in_node(e.u), big);
      }
      const int value = net.max_flow(out_node(s), in_node(t), best.value);
      if (value < best.value) {
        const auto reach = net.source_side(out_node(s));
        VertexSet separator;
        for (int v = 0; v < n; ++v)
          if (reach[in_node(v)] && !reach[out_node(v)]) separator.insert(v);
        best.value = value;
        best.cut.side = separator;
        best.cut.size = separator.count();
      }
    }
  }
  return best;
}

std::optional<CutCertificate> essential_edge_connectivity_check(const Graph& g, int lambda) {
  if (!is_two_connected(g)) throw Error(Errc::NotTwoConnected, "essential check needs a 2-connected graph");
  const int n = g.order();
  if (n < 4) return std::nullopt;

  // Independent shores: any two non-adjacent vertices already cut at most
  // as few edges as the whole shore.
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w) || g.degree(u) + g.degree(w) >= lambda) continue;
      CutCertificate cut = edge_cut(g, VertexSet{u, w}, CutKind::EssentialEdgeCut);
      if (!cut.shares_common_vertex) return cut;
    }

  // Shores holding an edge each.
  std::vector<Edge> simple_edges;
  for (int v = 0; v < n; ++v)
    for (int w = g.neighbors(v).next(v + 1); w >= 0; w = g.neighbors(v).next(w + 1))
      simple_edges.push_back({v, w});
  const int source = n, sink = n + 1;
  const int big = 2 * g.size() + 1;
  for (std::size_t i = 0; i < simple_edges.size(); ++i) {
    const Edge& e = simple_edges[i];
    for (std::size_t j = i + 1; j < simple_edges.size(); ++j) {
      const Edge& f = simple_edges[j];
      if (f.touches(e.u) || f.touches(e.v)) continue;
      FlowNetwork net = edge_network(g, 2);
      net.add_arc(source, e.u, big);
      net.add_arc(source, e.v, big);
      net.add_arc(f.u, sink, big);
      net.add_arc(f.v, sink, big);
      if (net.max_flow(source, sink, lambda) >= lambda) continue;
      CutCertificate cut = edge_cut(g, vertex_side(net.source_side(source), n), CutKind::EssentialEdgeCut);
      if (cut.shares_common_vertex)
        throw Error(Errc::PreconditionViolated, "separating cut meets a common vertex in a 2-connected graph");
      return cut;
    }
  }
  return std::nullopt;
}

std::optional<CutCertificate> essential_cut_bruteforce(const Graph& g, int lambda) {
  const int n = g.order();
  if (n > 24) throw Error(Errc::UniverseTooLarge, "brute force limited to 24 vertices", n);
  if (n < 2) return std::nullopt;
  std::vector<std::uint32_t> adj(n);
  for (int v = 0; v < n; ++v)
    for (int w = g.neighbors(v).first(); w >= 0; w = g.neighbors(v).next(w + 1)) adj[v] |= 1U << w;
  const std::uint32_t all = (n == 32) ? ~0U : ((1U << n) - 1);

  // Vertex n-1 always stays outside, so every cut is listed once.
  const std::uint32_t limit = 1U << (n - 1);
  for (std::uint32_t side = 1; side < limit; ++side) {
    const std::uint32_t other = all & ~side;
    int size = 0;
    int boundary_in = 0, boundary_out = 0;
    if (g.is_simple()) {
      for (std::uint32_t rest = side; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int out = std::popcount(adj[v] & other);
        size += out;
        if (out) ++boundary_in;
      }
      if (size >= lambda) continue;
      for (std::uint32_t rest = other; rest; rest &= rest - 1)
        if (adj[std::countr_zero(rest)] & side) ++boundary_out;
    } else {
      std::uint32_t in_touch = 0, out_touch = 0;
      for (const Edge& e : g.edges()) {
        const bool a = (side >> e.u) & 1U, b = (side >> e.v) & 1U;
        if (a == b) continue;
        ++size;
        in_touch |= 1U << (a ? e.u : e.v);
        out_touch |= 1U << (a ? e.v : e.u);
      }
      if (size >= lambda) continue;
      boundary_in = std::popcount(in_touch);
      boundary_out = std::popcount(out_touch);
    }
    // All cut edges meet one vertex iff one shore has at most one vertex
    // carrying cut edges.
    if (boundary_in <= 1 || boundary_out <= 1) continue;
    VertexSet shore;
    for (int v = 0; v < n; ++v)
      if ((side >> v) & 1U) shore.insert(v);
    return CutCertificate{CutKind::EssentialEdgeCut, shore, size, false};
  }
  return std::nullopt;
}

}  // namespace clawdec
