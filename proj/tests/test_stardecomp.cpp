#include <doctest.h>

#include "clawdec/independent.hpp"
#include "clawdec/regular_generator.hpp"
#include "clawdec/star_decomposition.hpp"
#include "oracles.hpp"

using namespace clawdec;

namespace {

bool oracle_says_yes(const Graph& g, int k) { return std::holds_alternative<StarDecomposition>(exact_cover_oracle(g, k)); }

// Random graph with max degree <= cap and a multiple of k edges.
Graph bounded_graph(int n, int cap, int k, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs)
    if (deg[u] < cap && deg[v] < cap && rng() % 3 != 0) {
      edges.push_back({u, v});
      ++deg[u];
      ++deg[v];
    }
  while (edges.size() % k != 0) edges.pop_back();
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("octahedron splits into four claws") {
  const Graph oct = octahedron();
  const Decision d = decide_star_decomposition(oct, 3);
  REQUIRE(decomposable(d));
  const auto& dec = std::get<StarDecomposition>(d);
  CHECK(dec.stars.size() == 4);
  CHECK(verify_decomposition(oct, dec).ok);

  const Decision claw = decide_claw_4regular(oct);
  REQUIRE(decomposable(claw));
  CHECK(verify_decomposition(oct, std::get<StarDecomposition>(claw)).ok);
  // The first candidate is the antipodal pair {0, 1}; it must be the non-centre set.
  VertexSet centres;
  for (const Star& s : std::get<StarDecomposition>(claw).stars) centres.insert(s.center);
  CHECK(centres == (VertexSet::range(6) - VertexSet{0, 1}));
  CHECK(oracle_says_yes(oct, 3));
}

TEST_CASE("K4 has no claw decomposition") {
  const Graph k4 = complete_graph(4);
  const Decision d = decide_star_decomposition(k4, 3);
  REQUIRE_FALSE(decomposable(d));
  const auto& cert = std::get<NonDecomposabilityCertificate>(d);
  CHECK(cert.kind == CertificateKind::IndependenceBound);
  CHECK(cert.required == 2);
  CHECK(cert.witness.count() == 1);
  CHECK(verify_certificate(k4, cert));
  CHECK_FALSE(oracle_says_yes(k4, 3));
}

TEST_CASE("exact cover oracle examples") {
  const auto claw = exact_cover_oracle(star_graph(3), 3);
  REQUIRE(std::holds_alternative<StarDecomposition>(claw));
  CHECK(std::get<StarDecomposition>(claw).stars.size() == 1);
  CHECK(std::holds_alternative<NotFound>(exact_cover_oracle(complete_graph(4), 3)));
  CHECK(std::holds_alternative<StarDecomposition>(exact_cover_oracle(octahedron(), 3)));

  ExactCoverOptions tiny;
  tiny.node_limit = 2;
  try {
    exact_cover_oracle(cartesian_product(cycle_graph(4), complete_graph(3)), 3, tiny);
    FAIL("node limit ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("hypotheses are enforced") {
  try {
    decide_star_decomposition(cycle_graph(4), 3);
    FAIL("size not divisible accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeNotDivisible);
  }
  try {
    decide_star_decomposition(complete_graph(7), 3);  // 21 edges, degree 6 > 5
    FAIL("degree 6 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MaxDegreeTooLarge);
  }
  try {
    decide_claw_4regular(petersen_graph());
    FAIL("cubic graph accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFourRegular);
  }
  try {
    decide_claw_4regular(cartesian_product(cycle_graph(4), complete_graph(2)));
    FAIL("3-regular accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFourRegular);
  }
}

TEST_CASE("C4 x K3 agrees with the exact cover") {
  const Graph g = cartesian_product(cycle_graph(4), complete_graph(3));
  CHECK(g.is_regular(4));
  CHECK(g.size() == 24);
  const Decision d = decide_claw_4regular(g);
  CHECK(decomposable(d) == oracle_says_yes(g, 3));
  CHECK(decomposable(decide_star_decomposition(g, 3)) == decomposable(d));
  if (decomposable(d)) CHECK(verify_decomposition(g, std::get<StarDecomposition>(d)).ok);
}

TEST_CASE("verify_decomposition names the broken clause") {
  const Graph oct = octahedron();
  auto dec = std::get<StarDecomposition>(decide_star_decomposition(oct, 3));
  REQUIRE(dec.stars.size() == 4);

  auto moved = dec;
  moved.stars[1].edges.push_back(moved.stars[0].edges.back());
  moved.stars[0].edges.pop_back();
  auto check = verify_decomposition(oct, moved);
  CHECK_FALSE(check.ok);
  bool names_partition_or_size = false;
  for (const auto& v : check.violations)
    names_partition_or_size = names_partition_or_size || v.find("size") != std::string::npos ||
                              v.find("partition") != std::string::npos || v.find("incident") != std::string::npos;
  CHECK(names_partition_or_size);

  auto dup = dec;
  dup.stars[0].edges[0] = dup.stars[1].edges[0];
  CHECK_FALSE(verify_decomposition(oct, dup).ok);
}

TEST_CASE("adjacent non-centres fail the independence clause") {
  // Circulant C_9(1,2) with stars chosen so that 0 and 1 centre nothing.
  std::vector<Edge> edges;
  for (int i = 0; i < 9; ++i) {
    edges.push_back({i, (i + 1) % 9});
    edges.push_back({i, (i + 2) % 9});
  }
  const Graph g = Graph::from_edge_list(9, edges);
  REQUIRE(g.is_regular(4));
  std::vector<std::vector<int>> owned(9);
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    int c = ed.u;
    if (c == 0 || c == 1) c = ed.v;
    owned[c].push_back(e);
  }
  StarDecomposition dec;
  dec.k = 3;
  for (int v = 0; v < 9; ++v)
    for (std::size_t i = 0; i + 3 <= owned[v].size(); i += 3)
      dec.stars.push_back({v, {owned[v][i], owned[v][i + 1], owned[v][i + 2]}});
  const auto check = verify_decomposition(g, dec);
  CHECK_FALSE(check.ok);
  bool mentions_independence = false;
  for (const auto& v : check.violations) mentions_independence |= v.find("independence") != std::string::npos;
  CHECK(mentions_independence);
}

TEST_CASE("criterion agrees with exact cover on random bounded graphs") {
  std::mt19937_64 rng(404);
  int yes = 0, no = 0;
  for (int round = 0; round < 300; ++round) {
    const int k = 3 + round % 2;
    const int n = 5 + round % 5;
    const Graph g = bounded_graph(n, 2 * k - 1, k, rng);
    if (g.size() == 0) continue;
    const Decision d = decide_star_decomposition(g, k);
    const bool truth = oracle_says_yes(g, k);
    CHECK(decomposable(d) == truth);
    if (decomposable(d)) {
      ++yes;
      CHECK(verify_decomposition(g, std::get<StarDecomposition>(d)).ok);
    } else {
      ++no;
      CHECK(verify_certificate(g, std::get<NonDecomposabilityCertificate>(d)));
    }
    std::vector<int> zero(n, 0);
    CHECK(std::holds_alternative<Orientation>(mod_k_orientation(g, k, zero)) == truth);
  }
  CHECK(yes > 20);
  CHECK(no > 20);
}

TEST_CASE("multigraph stars") {
  // Doubled triangle: degree 4 everywhere, 6 edges.
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
  const Decision d = decide_star_decomposition(g, 3);
  CHECK(decomposable(d) == oracle_says_yes(g, 3));
  if (decomposable(d)) CHECK(verify_decomposition(g, std::get<StarDecomposition>(d)).ok);
}

TEST_CASE("three deciders agree on all connected 4-regular graphs of orders 6 and 9") {
  for (int n : {6, 9}) {
    const auto graphs = enumerate_regular(n, 4, true);
    CHECK(graphs.size() == (n == 6 ? 1U : 16U));
    for (const Graph& g : graphs) {
      const bool crit = decomposable(decide_claw_4regular(g));
      CHECK(crit == oracle_says_yes(g, 3));
      CHECK(crit == std::holds_alternative<Orientation>(mod_k_orientation(g, 3, std::vector<int>(n, 0))));
      CHECK(crit == decomposable(decide_star_decomposition(g, 3)));
    }
  }
}

TEST_CASE("counting identity for 4-regular graphs") {
  for (const Graph& g : enumerate_regular(9, 4, true))
    for_each_independent_set(g, 3, [&](const VertexSet& s) {
      CHECK(g.edges_within(VertexSet::range(9) - s) == 6);
      return true;
    });
}

TEST_CASE("certificates survive a recount") {
  const Graph k4 = complete_graph(4);
  auto cert = std::get<NonDecomposabilityCertificate>(decide_star_decomposition(k4, 3));
  CHECK(verify_certificate(k4, cert));
  cert.required = 1;  // a bound that no longer excludes anything
  CHECK_FALSE(verify_certificate(k4, cert));
}
