#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clawdec/graph.hpp"

namespace clawdec {

// Adjacency rows of a graph on at most 32 vertices.
struct CompactGraph {
  int n = 0;
  std::array<std::uint32_t, 32> adj{};

  Graph to_graph() const;
};

// A partially filled adjacency matrix from which an independent part of the
// search continues. `next_row` is the first row not yet decided.
struct SubtreeRoot {
  int next_row = 0;
  CompactGraph partial;

  // Stable text key, used in checkpoint files.
  std::string key() const;
};

// Orderly generation of d-regular simple graphs on n vertices.
//
// Rows of the adjacency matrix are filled in order; row r picks the
// remaining neighbours of vertex r among r+1..n-1. A partial matrix survives
// only if no relabelling beats it on the rows that are already determined
// (see max_code.hpp), so a completed matrix survives iff it is the maximum
// code of its isomorphism class. Each class is therefore produced once, with
// nothing remembered between graphs.
//
// Cheap filters run before that test: columns with identical history take
// their ones left-first; every open vertex must still find enough partners;
// with connected_only, no finished component may stop short of n vertices.
class RegularGenerator {
 public:
  // Throws ParityImpossible when n*d is odd, InvalidArgument when d >= n or
  // n is outside 1..32.
  RegularGenerator(int n, int d, bool connected_only);

  using Visitor = std::function<void(const CompactGraph&)>;

  std::int64_t run(const Visitor& visit) const;

  // All partial matrices reached when row `split_row` is about to be filled
  // (or earlier completions), in generation order.
  std::vector<SubtreeRoot> roots(int split_row) const;

  std::int64_t run_subtree(const SubtreeRoot& root, const Visitor& visit) const;

  int order() const { return n_; }
  int degree() const { return d_; }

 private:
  int n_;
  int d_;
  bool connected_only_;
};

// Convenience for small orders: every graph, materialised.
std::vector<Graph> enumerate_regular(int n, int d, bool connected_only);

}  // namespace clawdec
