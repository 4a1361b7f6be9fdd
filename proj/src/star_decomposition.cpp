#include "clawdec/star_decomposition.hpp"

#include <algorithm>
#include <optional>

#include "clawdec/independent.hpp"

namespace clawdec {

const char* certificate_kind_name(CertificateKind kind) {
  return kind == CertificateKind::IndependenceBound ? "IndependenceBound" : "CriterionExhausted";
}

namespace {

void check_divisible(const Graph& g, int k) {
  if (k < 3) throw Error(Errc::InvalidArgument, "star size must be at least 3", k);
  if (g.size() % k != 0)
    throw Error(Errc::SizeNotDivisible,
                "|E| = " + std::to_string(g.size()) + " is not divisible by k = " + std::to_string(k), k);
}

// Orientation of G in which S-edges point into S and G - S is oriented by
// `inner_tail` (indexed by the edges of G - S in G's edge order).
Orientation assemble(const Graph& g, const VertexSet& s, const std::vector<int>& original,
                     const Orientation& inner) {
  std::vector<int> tails(g.size());
  int inner_edge = 0;
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ends = g.edge(e);
    if (s.contains(ends.u)) {
      tails[e] = ends.v;
    } else if (s.contains(ends.v)) {
      tails[e] = ends.u;
    } else {
      tails[e] = original[inner.tail(inner_edge++)];
    }
  }
  return Orientation(g, std::move(tails));
}

// Orientation of G - S with in-degree d(v)-k at every vertex, if one exists.
std::optional<Orientation> criterion_orientation(const Graph& g, int k, const VertexSet& s) {
  std::vector<int> original;
  const Graph rest = g.induced(g.vertices() - s, &original);
  InDegreeBudget p(rest.order());
  long budget_total = 0;
  for (int v = 0; v < rest.order(); ++v) {
    p[v] = g.degree(original[v]) - k;
    if (p[v] < 0) return std::nullopt;
    budget_total += p[v];
  }
  if (rest.size() != budget_total) return std::nullopt;
  auto outcome = hakimi_orient(rest, p);
  if (auto* inner = std::get_if<Orientation>(&outcome)) return assemble(g, s, original, *inner);
  return std::nullopt;
}

// Unicyclic components oriented so every vertex has in-degree exactly one:
// peel pendant vertices (parent -> leaf), then run each remaining cycle
// around in one direction.
std::optional<Orientation> unicyclic_orientation(const Graph& g, const VertexSet& s) {
  if (!unicyclic_components_check(g, s).all_unicyclic) return std::nullopt;
  std::vector<int> original;
  const Graph rest = g.induced(g.vertices() - s, &original);
  const int n = rest.order();
  std::vector<int> tails(rest.size(), -1);
  std::vector<int> live_degree = rest.degrees();
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (live_degree[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    const int leaf = leaves.back();
    leaves.pop_back();
    for (int e : rest.incident_edges(leaf)) {
      if (tails[e] >= 0) continue;
      const int parent = rest.edge(e).other(leaf);
      tails[e] = parent;
      --live_degree[leaf];
      if (--live_degree[parent] == 1) leaves.push_back(parent);
    }
  }
  for (int start = 0; start < n; ++start) {
    if (live_degree[start] == 0) continue;
    int at = start;
    while (true) {
      int step = -1;
      for (int e : rest.incident_edges(at))
        if (tails[e] < 0) {
          step = e;
          break;
        }
      if (step < 0) break;
      tails[step] = at;
      --live_degree[at];
      at = rest.edge(step).other(at);
      --live_degree[at];
    }
  }
  return assemble(g, s, original, Orientation(rest, std::move(tails)));
}

template <typename Test>
Decision run_criterion(const Graph& g, int k, Test&& test) {
  const int required = g.order() - g.size() / k;
  NonDecomposabilityCertificate cert;
  cert.k = k;
  cert.required = required;
  std::optional<Orientation> found;
  const std::int64_t examined = for_each_independent_set(g, required, [&](const VertexSet& s) {
    if ((found = test(s))) return false;
    if (cert.failing_examples.size() < kKeptFailingSets) cert.failing_examples.push_back(s);
    return true;
  });
  if (found) return stars_from_zero_orientation(*found, k);
  if (examined == 0) {
    cert.kind = CertificateKind::IndependenceBound;
    cert.witness = max_independent_set(g);
  } else {
    cert.kind = CertificateKind::CriterionExhausted;
    cert.candidates_examined = examined;
  }
  return cert;
}

class ExactCover {
 public:
  ExactCover(const Graph& g, int k, std::int64_t limit)
      : g_(g), k_(k), limit_(limit), covered_(g.size(), false) {}

  bool run() { return cover(); }
  std::int64_t nodes() const { return nodes_; }
  StarDecomposition result() const { return {k_, chosen_}; }

 private:
  bool cover() {
    if (++nodes_ > limit_)
      throw Error(Errc::BudgetExceeded, "exact cover passed " + std::to_string(limit_) + " nodes",
                  static_cast<long>(limit_));
    int first = 0;
    while (first < g_.size() && covered_[first]) ++first;
    if (first == g_.size()) return true;
    const Edge& ends = g_.edge(first);
    for (int center : {ends.u, ends.v}) {
      std::vector<int> others;
      for (int e : g_.incident_edges(center))
        if (e != first && !covered_[e]) others.push_back(e);
      if (static_cast<int>(others.size()) < k_ - 1) continue;
      std::vector<int> pick;
      if (choose(center, first, others, 0, pick)) return true;
    }
    return false;
  }

  bool choose(int center, int first, const std::vector<int>& others, std::size_t from,
              std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == k_ - 1) {
      std::vector<int> star = pick;
      star.push_back(first);
      std::sort(star.begin(), star.end());
      for (int e : star) covered_[e] = true;
      chosen_.push_back({center, star});
      if (cover()) return true;
      chosen_.pop_back();
      for (int e : star) covered_[e] = false;
      return false;
    }
    for (std::size_t i = from; i < others.size(); ++i) {
      pick.push_back(others[i]);
      if (choose(center, first, others, i + 1, pick)) return true;
      pick.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::int64_t limit_;
  std::vector<bool> covered_;
  std::vector<Star> chosen_;
  std::int64_t nodes_ = 0;
};

}  // namespace

Decision decide_star_decomposition(const Graph& g, int k) {
  check_divisible(g, k);
  if (g.max_degree() > 2 * k - 1)
    throw Error(Errc::MaxDegreeTooLarge,
                "max degree " + std::to_string(g.max_degree()) + " exceeds 2k-1 = " + std::to_string(2 * k - 1),
                g.max_degree());
  return run_criterion(g, k, [&](const VertexSet& s) { return criterion_orientation(g, k, s); });
}

Decision decide_claw_4regular(const Graph& g) {
  if (!g.is_simple() || !g.is_regular(4))
    throw Error(Errc::NotFourRegular, "claw specialisation needs a simple 4-regular graph");
  check_divisible(g, 3);
  return run_criterion(g, 3, [&](const VertexSet& s) { return unicyclic_orientation(g, s); });
}

std::variant<StarDecomposition, NotFound> exact_cover_oracle(const Graph& g, int k,
                                                             const ExactCoverOptions& options) {
  if (k < 1) throw Error(Errc::InvalidArgument, "star size must be positive", k);
  if (g.size() % k != 0)
    throw Error(Errc::SizeNotDivisible,
                "|E| = " + std::to_string(g.size()) + " is not divisible by k = " + std::to_string(k), k);
  ExactCover search(g, k, options.node_limit);
  if (search.run()) return search.result();
  return NotFound{search.nodes()};
}

DecompositionCheck verify_decomposition(const Graph& g, const StarDecomposition& d) {
  DecompositionCheck check;
  auto fail = [&](std::string why) {
    check.ok = false;
    check.violations.push_back(std::move(why));
  };
  std::vector<int> uses(g.size(), 0);
  std::vector<int> centred(g.order(), 0);
  bool indices_ok = true;
  for (std::size_t i = 0; i < d.stars.size(); ++i) {
    const Star& star = d.stars[i];
    const std::string tag = "star " + std::to_string(i);
    if (star.center < 0 || star.center >= g.order()) {
      fail("incidence: " + tag + " has invalid centre " + std::to_string(star.center));
      indices_ok = false;
      continue;
    }
    ++centred[star.center];
    if (static_cast<int>(star.edges.size()) != d.k)
      fail("size: " + tag + " has " + std::to_string(star.edges.size()) + " edges, expected " +
           std::to_string(d.k));
    for (int e : star.edges) {
      if (e < 0 || e >= g.size()) {
        fail("partition: " + tag + " lists invalid edge " + std::to_string(e));
        indices_ok = false;
        continue;
      }
      ++uses[e];
      if (!g.edge(e).touches(star.center))
        fail("incidence: edge " + std::to_string(e) + " in " + tag + " misses centre " +
             std::to_string(star.center));
    }
  }
  for (int e = 0; e < g.size(); ++e)
    if (uses[e] != 1)
      fail("partition: edge " + std::to_string(e) + " covered " + std::to_string(uses[e]) + " times");
  const int cap = d.k > 0 ? g.max_degree() / d.k : 0;
  for (int v = 0; v < g.order(); ++v)
    if (centred[v] > cap)
      fail("centres: vertex " + std::to_string(v) + " centres " + std::to_string(centred[v]) + " stars");
  if (indices_ok && d.k > 0 && g.max_degree() <= 2 * d.k - 1) {
    VertexSet non_centres;
    for (int v = 0; v < g.order(); ++v)
      if (centred[v] == 0) non_centres.insert(v);
    for (const Edge& e : g.edges())
      if (non_centres.contains(e.u) && non_centres.contains(e.v)) {
        fail("independence: non-centres " + std::to_string(e.u) + " and " + std::to_string(e.v) +
             " are adjacent");
        break;
      }
  }
  return check;
}

bool verify_certificate(const Graph& g, const NonDecomposabilityCertificate& c) {
  if (c.k <= 0 || c.required != g.order() - g.size() / c.k) return false;
  if (c.kind == CertificateKind::IndependenceBound) {
    return is_independent(g, c.witness) && c.witness.subset_of(g.vertices()) &&
           c.witness.count() < c.required && max_independent_set(g).count() == c.witness.count();
  }
  if (count_independent_sets(g, c.required) != c.candidates_examined) return false;
  for (const VertexSet& s : c.failing_examples)
    if (!is_independent(g, s) || s.count() != c.required || criterion_orientation(g, c.k, s)) return false;
  return true;
}

}  // namespace clawdec
