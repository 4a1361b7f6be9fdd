#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clawdec/graph.hpp"

namespace clawdec {

inline constexpr int kMaxCanonicalOrder = 32;

// Canonical labelling of a simple graph: the relabelling that maximises the
// row-major upper-triangle adjacency code. `bytes` starts with n, followed
// by that code packed MSB first. labeling[v] is v's canonical label.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  std::vector<int> labeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes < b.bytes; }
};

// Throws NotSimple, UniverseExceeded (n > 32).
CanonicalForm canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Number of Aut(G)-orbits among independent sets of the given size; each
// orbit is represented by its lexicographically first member.
std::vector<VertexSet> independent_set_orbits(const Graph& g, int size);

}  // namespace clawdec
