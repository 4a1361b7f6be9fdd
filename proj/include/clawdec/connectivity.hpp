#pragma once

#include <optional>

#include "clawdec/graph.hpp"

namespace clawdec {

enum class CutKind { EdgeCut, VertexCut, EssentialEdgeCut };

const char* cut_kind_name(CutKind kind);

// For edge cuts `side` is one shore; for vertex cuts it is the separator.
struct CutCertificate {
  CutKind kind = CutKind::EdgeCut;
  VertexSet side;
  int size = 0;
  bool shares_common_vertex = false;
};

struct ConnectivityResult {
  int value = 0;
  CutCertificate cut;
};

// Global minimum edge cut from n-1 max-flows rooted at vertex 0.
// Throws Disconnected.
ConnectivityResult edge_connectivity(const Graph& g);

// Minimum vertex separator by split-vertex flows over non-adjacent pairs;
// n-1 for complete graphs (empty separator recorded). Throws Disconnected.
ConnectivityResult vertex_connectivity(const Graph& g);

// True iff the edges of the cut delta(side) all meet one vertex.
bool cut_shares_common_vertex(const Graph& g, const VertexSet& side);

bool is_two_connected(const Graph& g);

// Whether every edge cut smaller than lambda consists of edges meeting at a
// single vertex. Returns nullopt on pass, or a violating cut.
//
// Needs G 2-connected (throws NotTwoConnected). In such a graph a cut whose
// shores both have at least two vertices can never have a common vertex
// (that vertex would be a cutvertex), so a violating cut is exactly a cut
// below lambda with two shores of size >= 2. Each shore then either holds
// an edge or is independent. Shores holding edges e and f are found by a
// max-flow between e and f with each contracted to a terminal; an
// independent shore X has |delta(X)| = sum of degrees, which is at least
// d(u)+d(w) for any two of its vertices, so scanning non-adjacent pairs
// finds it.
std::optional<CutCertificate> essential_edge_connectivity_check(const Graph& g, int lambda);

// The definition applied literally to every shore. Throws UniverseTooLarge
// past 24 vertices.
std::optional<CutCertificate> essential_cut_bruteforce(const Graph& g, int lambda);

}  // namespace clawdec
