#pragma once

// Row-major maximum-code search shared by canonical_form and the orderly
// generator.
//
// The code of a labelled graph on n <= 32 vertices is its upper adjacency
// triangle read row by row: row i lists A[i][i+1..n-1]. Row i is held as an
// integer whose bit (n-1-j) is A[i][j], so integer order is lexicographic
// order. The canonical labelling maximises the code.
//
// The search places one vertex per position. Unplaced vertices sit in an
// ordered partition of contiguous position ranges; placing w at position i
// fixes row i up to the order inside each cell, and only the arrangement with
// w's neighbours first in every cell can beat or tie the best, so each cell
// is split (neighbours, non-neighbours) and row i is known exactly.
//
// Partial graphs: a vertex is "complete" when its full neighbourhood is
// known. A row is determined only when its vertex is complete, so the
// comparison against the identity labelling stops at the first undetermined
// row on either side. Any strict improvement found on determined rows also
// holds for every completion of the partial graph.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace clawdec::detail {

inline constexpr int kMaxCodeVertices = 32;

using Mask = std::uint32_t;

struct CellPartition {
  std::array<Mask, kMaxCodeVertices> cells{};
  int count = 0;
};

// Places w (taken from the first cell) at `position` and refines. Returns
// the determined row value for that position.
inline std::uint32_t place(const CellPartition& in, int n, int position, int w, Mask neighbours,
                           CellPartition& out) {
  out.count = 0;
  std::uint32_t row = 0;
  int start = position + 1;
  for (int c = 0; c < in.count; ++c) {
    Mask cell = in.cells[c];
    if (c == 0) cell &= ~(Mask{1} << w);
    if (!cell) continue;
    const Mask near = cell & neighbours;
    const Mask far = cell & ~neighbours;
    const int ones = std::popcount(near);
    if (ones) {
      row |= ((std::uint32_t{1} << ones) - 1) << (n - start - ones);
      out.cells[out.count++] = near;
    }
    if (far) out.cells[out.count++] = far;
    start += std::popcount(cell);
  }
  return row;
}

// Two vertices of one cell are twins when they have the same neighbourhood
// apart from each other; swapping them is an automorphism that fixes the
// partition, so only one needs exploring.
inline bool twins(const std::array<Mask, kMaxCodeVertices>& adj, int u, int v) {
  const Mask mu = adj[u] & ~(Mask{1} << v);
  const Mask mv = adj[v] & ~(Mask{1} << u);
  return mu == mv;
}

// Is there a labelling whose determined code prefix beats the identity's?
class IdentityBeater {
 public:
  IdentityBeater(int n, const std::array<Mask, kMaxCodeVertices>& adj, Mask complete)
      : n_(n), adj_(adj), complete_(complete) {
    for (int i = 0; i < n; ++i) {
      std::uint32_t row = 0;
      for (int j = i + 1; j < n; ++j)
        if ((adj[i] >> j) & 1U) row |= std::uint32_t{1} << (n - 1 - j);
      identity_rows_[i] = row;
    }
  }

  bool beaten() {
    if (n_ == 0) return false;
    CellPartition root;
    root.cells[0] = (n_ == 32) ? ~Mask{0} : ((Mask{1} << n_) - 1);
    root.count = 1;
    return search(root, 0);
  }

 private:
  bool search(const CellPartition& part, int position) {
    if (position == n_) return false;
    if (!((complete_ >> position) & 1U)) return false;
    const std::uint32_t target = identity_rows_[position];
    Mask tried = 0;
    for (Mask left = part.cells[0] & complete_; left; left &= left - 1) {
      const int w = std::countr_zero(left);
      bool duplicate = false;
      for (Mask t = tried; t; t &= t - 1)
        if (twins(adj_, std::countr_zero(t), w)) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
      tried |= Mask{1} << w;
      CellPartition next;
      const std::uint32_t row = place(part, n_, position, w, adj_[w], next);
      if (row > target) return true;
      if (row == target && search(next, position + 1)) return true;
    }
    return false;
  }

  int n_;
  const std::array<Mask, kMaxCodeVertices>& adj_;
  Mask complete_;
  std::array<std::uint32_t, kMaxCodeVertices> identity_rows_{};
};

// Maximum code over all labellings of a fully known graph.
class MaxCodeFinder {
 public:
  MaxCodeFinder(int n, const std::array<Mask, kMaxCodeVertices>& adj) : n_(n), adj_(adj) {
    for (int v = 0; v < n; ++v) orbit_parent_[v] = v;
  }

  void run() {
    best_valid_ = 0;
    leaf_valid_ = false;
    if (n_ == 0) return;
    CellPartition root;
    root.cells[0] = (n_ == 32) ? ~Mask{0} : ((Mask{1} << n_) - 1);
    root.count = 1;
    search(root, 0);
  }

  // best_order()[p] = vertex placed at position p.
  const std::array<int, kMaxCodeVertices>& best_order() const { return best_order_; }
  const std::array<std::uint32_t, kMaxCodeVertices>& best_rows() const { return best_rows_; }

 private:
  int find(int v) {
    while (orbit_parent_[v] != v) v = orbit_parent_[v] = orbit_parent_[orbit_parent_[v]];
    return v;
  }

  // Every surviving path matches the best code on all rows above `position`:
  // a worse row is pruned, a better row becomes the new best.
  void search(const CellPartition& part, int position) {
    if (position == n_) {
      if (!leaf_valid_) {
        best_order_ = path_;
        leaf_valid_ = true;
      } else {
        // Same code as the best leaf: the two placements differ by an
        // automorphism, whose cycles merge orbits.
        for (int p = 0; p < n_; ++p) {
          const int a = find(best_order_[p]), b = find(path_[p]);
          if (a != b) orbit_parent_[std::max(a, b)] = std::min(a, b);
        }
      }
      return;
    }
    Mask tried = 0;
    for (Mask left = part.cells[0]; left; left &= left - 1) {
      const int w = std::countr_zero(left);
      bool skip = false;
      for (Mask t = tried; t && !skip; t &= t - 1) {
        const int u = std::countr_zero(t);
        if (twins(adj_, u, w) || (position == 0 && find(u) == find(w))) skip = true;
      }
      if (skip) continue;
      tried |= Mask{1} << w;
      CellPartition next;
      const std::uint32_t row = place(part, n_, position, w, adj_[w], next);
      if (position < best_valid_) {
        if (row < best_rows_[position]) continue;
        if (row > best_rows_[position]) {
          best_rows_[position] = row;
          best_valid_ = position + 1;
          leaf_valid_ = false;
        }
      } else {
        best_rows_[position] = row;
        best_valid_ = position + 1;
        leaf_valid_ = false;
      }
      path_[position] = w;
      search(next, position + 1);
    }
  }

  int n_;
  const std::array<Mask, kMaxCodeVertices>& adj_;
  std::array<int, kMaxCodeVertices> path_{};
  std::array<int, kMaxCodeVertices> best_order_{};
  std::array<std::uint32_t, kMaxCodeVertices> best_rows_{};
  std::array<int, kMaxCodeVertices> orbit_parent_{};
  int best_valid_ = 0;
  bool leaf_valid_ = false;
};

}  // namespace clawdec::detail
