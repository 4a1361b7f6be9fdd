#include "clawdec/regular_generator.hpp"

#include <bit>
#include <cstdio>

#include "max_code.hpp"

namespace clawdec {

using detail::Mask;

Graph CompactGraph::to_graph() const {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (Mask rest = adj[i] >> (i + 1); rest; rest &= rest - 1) edges.push_back({i, i + 1 + std::countr_zero(rest)});
  return Graph::from_edge_list(n, edges);
}

std::string SubtreeRoot::key() const {
  std::string out = std::to_string(partial.n) + ":" + std::to_string(next_row);
  char buf[16];
  for (int i = 0; i < partial.n; ++i) {
    std::snprintf(buf, sizeof buf, "%c%x", i == 0 ? ':' : '.', partial.adj[i]);
    out += buf;
  }
  return out;
}

namespace {

class Search {
 public:
  Search(int n, int d, bool connected, const RegularGenerator::Visitor* visit,
         std::vector<SubtreeRoot>* roots, int split_row)
      : n_(n), d_(d), connected_(connected), visit_(visit), roots_(roots), split_row_(split_row) {
    all_ = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  }

  void start_from(const CompactGraph& g, int row) {
    graph_ = g;
    for (int v = 0; v < n_; ++v) degree_[v] = std::popcount(graph_.adj[v]);
    fill(row);
  }

  std::int64_t emitted() const { return emitted_; }

 private:
  Mask complete_mask() const {
    Mask m = 0;
    for (int v = 0; v < n_; ++v)
      if (degree_[v] == d_) m |= Mask{1} << v;
    return m;
  }

  void fill(int row) {
    while (row < n_ && degree_[row] == d_) ++row;
    if (roots_ && (row >= split_row_ || row == n_)) {
      roots_->push_back({row, graph_});
      return;
    }
    if (row == n_) {
      // Only reachable without accept() when d = 0.
      if (connected_ && !components_ok(all_)) return;
      ++emitted_;
      if (visit_) (*visit_)(graph_);
      return;
    }
    // Open columns grouped by identical history (their rows-so-far
    // adjacency); inside a group ones must come first.
    groups_at_[row].clear();
    for (int j = row + 1; j < n_; ++j) {
      if (degree_[j] == d_) continue;
      bool placed = false;
      for (auto& grp : groups_at_[row])
        if (graph_.adj[grp.front()] == graph_.adj[j]) {
          grp.push_back(j);
          placed = true;
          break;
        }
      if (!placed) groups_at_[row].push_back({j});
    }
    choose(row, 0, d_ - degree_[row]);
  }

  void choose(int row, std::size_t group, int need) {
    const auto& groups = groups_at_[row];
    if (need == 0) {
      if (accept(row)) fill(row + 1);
      return;
    }
    if (group == groups.size()) return;
    int capacity = 0;
    for (std::size_t g = group; g < groups.size(); ++g) capacity += static_cast<int>(groups[g].size());
    if (capacity < need) return;
    const auto& members = groups[group];
    const int most = std::min<int>(need, static_cast<int>(members.size()));
    for (int take = most; take >= 0; --take) {
      for (int t = 0; t < take; ++t) link(row, members[t]);
      choose(row, group + 1, need - take);
      for (int t = 0; t < take; ++t) unlink(row, members[t]);
    }
  }

  void link(int u, int v) {
    graph_.adj[u] |= Mask{1} << v;
    graph_.adj[v] |= Mask{1} << u;
    ++degree_[u];
    ++degree_[v];
  }
  void unlink(int u, int v) {
    graph_.adj[u] &= ~(Mask{1} << v);
    graph_.adj[v] &= ~(Mask{1} << u);
    --degree_[u];
    --degree_[v];
  }

  bool accept(int row) const {
    Mask open = 0;
    for (int v = row + 1; v < n_; ++v)
      if (degree_[v] < d_) open |= Mask{1} << v;
    for (Mask rest = open; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask partners = open & ~graph_.adj[v] & ~(Mask{1} << v);
      if (std::popcount(partners) < d_ - degree_[v]) return false;
    }
    const Mask complete = complete_mask();
    if (connected_ && !components_ok(complete)) return false;
    return !detail::IdentityBeater(n_, graph_.adj, complete).beaten();
  }

  // No component made only of finished vertices may miss part of the graph.
  bool components_ok(Mask complete) const {
    Mask unseen = all_;
    while (unseen) {
      Mask comp = unseen & (~unseen + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask grown = 0;
        for (Mask f = frontier; f; f &= f - 1) grown |= graph_.adj[std::countr_zero(f)];
        frontier = grown & ~comp;
        comp |= frontier;
      }
      if ((comp & complete) == comp && comp != all_) return false;
      unseen &= ~comp;
    }
    return true;
  }

  int n_;
  int d_;
  bool connected_;
  const RegularGenerator::Visitor* visit_;
  std::vector<SubtreeRoot>* roots_;
  int split_row_;
  Mask all_ = 0;
  CompactGraph graph_;
  std::array<int, 32> degree_{};
  std::array<std::vector<std::vector<int>>, 32> groups_at_;
  std::int64_t emitted_ = 0;
};

}  // namespace

RegularGenerator::RegularGenerator(int n, int d, bool connected_only)
    : n_(n), d_(d), connected_only_(connected_only) {
  if (n < 1 || n > 32) throw Error(Errc::InvalidArgument, "order must be within 1..32", n);
  if (d < 0 || d >= n) throw Error(Errc::InvalidArgument, "degree must be within 0..n-1", d);
  if ((n * d) % 2 != 0)
    throw Error(Errc::ParityImpossible, "n*d = " + std::to_string(n * d) + " is odd", n * d);
}

std::int64_t RegularGenerator::run(const Visitor& visit) const {
  Search search(n_, d_, connected_only_, &visit, nullptr, 0);
  CompactGraph empty;
  empty.n = n_;
  search.start_from(empty, 0);
  return search.emitted();
}

std::vector<SubtreeRoot> RegularGenerator::roots(int split_row) const {
  std::vector<SubtreeRoot> out;
  Search search(n_, d_, connected_only_, nullptr, &out, split_row);
  CompactGraph empty;
  empty.n = n_;
  search.start_from(empty, 0);
  return out;
}

std::int64_t RegularGenerator::run_subtree(const SubtreeRoot& root, const Visitor& visit) const {
  Search search(n_, d_, connected_only_, &visit, nullptr, 0);
  search.start_from(root.partial, root.next_row);
  return search.emitted();
}

std::vector<Graph> enumerate_regular(int n, int d, bool connected_only) {
  std::vector<Graph> out;
  RegularGenerator(n, d, connected_only).run([&](const CompactGraph& g) { out.push_back(g.to_graph()); });
  return out;
}

}  // namespace clawdec
