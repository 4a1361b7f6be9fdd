#include "clawdec/independent.hpp"

namespace clawdec {
namespace {

class MisSearch {
 public:
  explicit MisSearch(const Graph& g) : g_(g) {}

  VertexSet run(const VertexSet& within) {
    best_ = {};
    best_size_ = 0;
    VertexSet taken;
    branch(within, taken, 0);
    return best_;
  }

 private:
  // Number of cliques in a greedy clique cover of p: an upper bound on the
  // independence number of G[p].
  int clique_cover_bound(VertexSet p) const {
    int cliques = 0;
    while (!p.empty()) {
      const int v = p.first();
      VertexSet grow = g_.neighbors(v) & p;
      p.erase(v);
      while (!grow.empty()) {
        const int w = grow.first();
        grow &= g_.neighbors(w);
        p.erase(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void branch(VertexSet p, VertexSet& taken, int taken_size) {
    // Isolated vertices in G[p] can always be taken.
    int pick = -1, pick_degree = -1;
    for (int v = p.first(); v >= 0; v = p.next(v + 1)) {
      const int d = (g_.neighbors(v) & p).count();
      if (d == 0) {
        taken.insert(v);
        ++taken_size;
        p.erase(v);
      } else if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (pick < 0) {
      if (taken_size > best_size_) {
        best_size_ = taken_size;
        best_ = taken;
      }
      return;
    }
    if (taken_size + clique_cover_bound(p) > best_size_) {
      VertexSet with = taken;
      with.insert(pick);
      VertexSet rest = p - g_.neighbors(pick);
      rest.erase(pick);
      branch(rest, with, taken_size + 1);
      VertexSet without = p;
      without.erase(pick);
      VertexSet copy = taken;
      branch(without, copy, taken_size);
    } else if (taken_size > best_size_) {
      best_size_ = taken_size;
      best_ = taken;
    }
  }

  const Graph& g_;
  VertexSet best_;
  int best_size_ = 0;
};

struct SetStream {
  const Graph& g;
  int size;
  const std::function<bool(const VertexSet&)>& visit;
  std::int64_t visited = 0;
  bool stopped = false;

  void extend(const VertexSet& chosen, int chosen_size, const VertexSet& candidates) {
    if (chosen_size == size) {
      ++visited;
      if (!visit(chosen)) stopped = true;
      return;
    }
    if (candidates.count() < size - chosen_size) return;
    for (int v = candidates.first(); v >= 0 && !stopped; v = candidates.next(v + 1)) {
      VertexSet later = candidates - VertexSet::range(v + 1) - g.neighbors(v);
      if (later.count() < size - chosen_size - 1) continue;
      VertexSet next = chosen;
      next.insert(v);
      extend(next, chosen_size + 1, later);
    }
  }
};

}  // namespace

VertexSet max_independent_set(const Graph& g) { return max_independent_set(g, g.vertices()); }

VertexSet max_independent_set(const Graph& g, const VertexSet& within) {
  return MisSearch(g).run(within & g.vertices());
}

std::int64_t for_each_independent_set(const Graph& g, int size,
                                      const std::function<bool(const VertexSet&)>& visit) {
  if (size < 0 || size > g.order()) return 0;
  SetStream stream{g, size, visit};
  stream.extend({}, 0, g.vertices());
  return stream.visited;
}

bool has_independent_set(const Graph& g, int size) {
  bool found = false;
  for_each_independent_set(g, size, [&](const VertexSet&) {
    found = true;
    return false;
  });
  return found;
}

std::int64_t count_independent_sets(const Graph& g, int size) {
  return for_each_independent_set(g, size, [](const VertexSet&) { return true; });
}

}  // namespace clawdec
