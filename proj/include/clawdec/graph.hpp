#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clawdec/error.hpp"
#include "clawdec/vertex_set.hpp"

namespace clawdec {

struct Edge {
  int u = 0;
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
  bool touches(int w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected loopless multigraph on vertices 0..n-1. Immutable once built.
// Keeps the edge list (with multiplicity) alongside bit-packed simple-graph
// neighbourhoods, so both the decomposition math and the set algorithms read
// from the same value.
class Graph {
 public:
  Graph() = default;

  // Throws LoopRejected / VertexOutOfRange naming the offending vertex, and
  // UniverseExceeded when n is beyond kMaxVertices.
  static Graph from_edge_list(int n, std::span<const Edge> pairs);
  static Graph from_edge_list(int n, std::initializer_list<Edge> pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  int degree(int v) const { return degree_[v]; }
  const std::vector<int>& degrees() const { return degree_; }
  int max_degree() const;
  int min_degree() const;
  bool is_regular(int d) const;

  const VertexSet& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
  int multiplicity(int u, int v) const { return multiplicity_[u * n_ + v]; }
  bool is_simple() const { return simple_; }

  // Edge indices incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }

  VertexSet vertices() const { return VertexSet::range(n_); }

  // e_G(A): edges with both ends in A, counted with multiplicity.
  int edges_within(const VertexSet& a) const;
  // Edges with exactly one end in A, counted with multiplicity.
  int cut_size(const VertexSet& a) const;

  // Subgraph induced on `keep`, relabelled 0..|keep|-1 in increasing order.
  // If `original` is given it receives the old index of every new vertex.
  Graph induced(const VertexSet& keep, std::vector<int>* original = nullptr) const;

  // Same graph with vertex v renamed perm[v].
  Graph relabeled(std::span<const int> perm) const;

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.multiplicity_ == b.multiplicity_;
  }

 private:
  int n_ = 0;
  bool simple_ = true;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<VertexSet> adjacency_;
  std::vector<std::uint16_t> multiplicity_;
  std::vector<std::vector<int>> incidence_;
};

// Standard constructions used throughout tests and builders.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph octahedron();
Graph petersen_graph();

// Vertex (g,h) of the product is g*|V(H)| + h. Both factors must be simple.
Graph cartesian_product(const Graph& g, const Graph& h);

// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

struct ComponentReport {
  VertexSet vertices;
  int vertex_count = 0;
  int edge_count = 0;
};

struct UnicyclicReport {
  bool all_unicyclic = true;
  std::vector<ComponentReport> components;
};

// True iff every component of G - S has as many edges as vertices.
UnicyclicReport unicyclic_components_check(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace clawdec
