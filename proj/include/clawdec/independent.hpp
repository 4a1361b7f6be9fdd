#pragma once

#include <cstdint>
#include <functional>

#include "clawdec/graph.hpp"

namespace clawdec {

// Exact maximum independent set by branch and bound over the simple view.
// Branches on a maximum-degree vertex (exclude it / take it and drop its
// closed neighbourhood); a greedy clique cover of the candidates bounds the
// remaining gain.
VertexSet max_independent_set(const Graph& g);

// Same search restricted to the vertices of `within`.
VertexSet max_independent_set(const Graph& g, const VertexSet& within);

// Calls `visit` on every independent set of exactly `size` vertices, in
// lexicographic order of the sorted member lists. Returning false from
// `visit` stops the stream. Returns the number of sets visited.
std::int64_t for_each_independent_set(const Graph& g, int size,
                                      const std::function<bool(const VertexSet&)>& visit);

// Stops at the first hit.
bool has_independent_set(const Graph& g, int size);

std::int64_t count_independent_sets(const Graph& g, int size);

}  // namespace clawdec
