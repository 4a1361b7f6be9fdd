#include "clawdec/canonical.hpp"

#include <set>

#include "clawdec/independent.hpp"
#include "max_code.hpp"

namespace clawdec {

CanonicalForm canonical_form(const Graph& g) {
  if (!g.is_simple()) throw Error(Errc::NotSimple, "canonical form needs a simple graph");
  const int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw Error(Errc::UniverseExceeded, "canonical form limited to 32 vertices", n);
  std::array<detail::Mask, detail::kMaxCodeVertices> adj{};
  for (int v = 0; v < n; ++v)
    for (int w = g.neighbors(v).first(); w >= 0; w = g.neighbors(v).next(w + 1)) adj[v] |= detail::Mask{1} << w;
  detail::MaxCodeFinder finder(n, adj);
  finder.run();

  CanonicalForm form;
  form.labeling.assign(n, 0);
  for (int p = 0; p < n; ++p) form.labeling[finder.best_order()[p]] = p;
  form.bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t byte = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      byte = static_cast<std::uint8_t>((byte << 1) | ((finder.best_rows()[i] >> (n - 1 - j)) & 1U));
      if (++filled == 8) {
        form.bytes.push_back(byte);
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled) form.bytes.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
  return form;
}

Graph canonical_graph(const Graph& g) {
  const CanonicalForm form = canonical_form(g);
  std::vector<Edge> edges;
  const int n = g.order();
  std::vector<int> position(n);
  for (int v = 0; v < n; ++v) position[form.labeling[v]] = v;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(position[i], position[j])) edges.push_back({i, j});
  return Graph::from_edge_list(n, edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<VertexSet> independent_set_orbits(const Graph& g, int size) {
  // Mark S with one extra vertex joined to all of S plus enough pendant
  // leaves that it is the unique vertex of top degree, so every isomorphism
  // of marked graphs fixes the marker and carries S onto S'.
  const int n = g.order();
  const int leaves = g.max_degree() + 2;
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<VertexSet> representatives;
  for_each_independent_set(g, size, [&](const VertexSet& s) {
    std::vector<Edge> edges = g.edges();
    const int marker = n;
    for (int v = s.first(); v >= 0; v = s.next(v + 1)) edges.push_back({marker, v});
    for (int t = 0; t < leaves; ++t) edges.push_back({marker, n + 1 + t});
    const Graph marked = Graph::from_edge_list(n + 1 + leaves, edges);
    if (seen.insert(canonical_form(marked).bytes).second) representatives.push_back(s);
    return true;
  });
  return representatives;
}

}  // namespace clawdec
