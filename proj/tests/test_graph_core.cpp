#include <doctest.h>

#include "clawdec/graph.hpp"
#include "clawdec/graph_io.hpp"
#include "clawdec/independent.hpp"
#include "oracles.hpp"

using namespace clawdec;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("vertex sets span both words") {
  VertexSet s{0, 63, 64, 127};
  CHECK(s.count() == 4);
  CHECK(s.first() == 0);
  CHECK(s.next(1) == 63);
  CHECK(s.next(64) == 64);
  CHECK(s.next(65) == 127);
  CHECK(s.next(128) == -1);
  CHECK(s.members() == std::vector<int>{0, 63, 64, 127});
  VertexSet t = VertexSet::range(65);
  CHECK(t.count() == 65);
  CHECK((s & t).members() == std::vector<int>{0, 63, 64});
  CHECK((t - s).count() == 62);
  CHECK(s.intersects(t));
  CHECK(VertexSet{1, 2}.subset_of(t));
  CHECK(lexicographic_less(VertexSet{0, 2}, VertexSet{0, 3}));
  CHECK(lexicographic_less(VertexSet{0}, VertexSet{0, 1}));
}

TEST_CASE("from_edge_list builds claws and multigraphs") {
  const Graph claw = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(claw.degrees() == std::vector<int>{3, 1, 1, 1});
  CHECK(claw.is_simple());

  const Graph multi = Graph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(multi.degree(0) == 2);
  CHECK(multi.degree(1) == 3);
  CHECK(multi.degree(2) == 1);
  CHECK(multi.multiplicity(0, 1) == 2);
  CHECK_FALSE(multi.is_simple());
  CHECK(multi.neighbors(1).count() == 2);
}

TEST_CASE("from_edge_list rejects loops and bad vertices with the index") {
  try {
    Graph::from_edge_list(2, {{0, 0}});
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LoopRejected);
    CHECK(e.index() == 0);
  }
  try {
    Graph::from_edge_list(3, {{0, 1}, {1, 5}});
    FAIL("out of range accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VertexOutOfRange);
    CHECK(e.index() == 5);
  }
  CHECK(code_of([] { Graph::from_edge_list(kMaxVertices + 1, std::span<const Edge>{}); }) ==
        Errc::UniverseExceeded);
}

TEST_CASE("handshake holds on random multigraphs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 9);
  for (int round = 0; round < 50; ++round) {
    std::vector<Edge> edges;
    for (int i = 0; i < 30; ++i) {
      int u = pick(rng), v = pick(rng);
      if (u != v) edges.push_back({u, v});
    }
    const Graph g = Graph::from_edge_list(10, edges);
    int sum = 0;
    for (int v = 0; v < 10; ++v) {
      sum += g.degree(v);
      int from_adj = 0;
      for (int w = 0; w < 10; ++w) from_adj += g.multiplicity(v, w);
      CHECK(from_adj == g.degree(v));
      CHECK(static_cast<int>(g.incident_edges(v).size()) == g.degree(v));
    }
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("standard constructions") {
  CHECK(complete_graph(5).size() == 10);
  CHECK(cycle_graph(6).is_regular(2));
  CHECK(path_graph(4).size() == 3);
  CHECK(star_graph(3).degree(0) == 3);
  CHECK(complete_bipartite(3, 3).is_regular(3));
  const Graph oct = octahedron();
  CHECK(oct.order() == 6);
  CHECK(oct.is_regular(4));
  CHECK_FALSE(oct.adjacent(0, 1));
  CHECK_FALSE(oct.adjacent(2, 3));
  CHECK_FALSE(oct.adjacent(4, 5));
  const Graph pet = petersen_graph();
  CHECK(pet.is_regular(3));
  CHECK(pet.size() == 15);
}

TEST_CASE("cartesian product") {
  CHECK(cartesian_product(cycle_graph(4), complete_graph(1)) == cycle_graph(4));
  const Graph k2k2 = cartesian_product(complete_graph(2), complete_graph(2));
  CHECK(k2k2.is_regular(2));
  CHECK(k2k2.is_connected());
  CHECK(k2k2.size() == 4);

  const Graph prod = cartesian_product(cycle_graph(4), complete_graph(5));
  CHECK(prod.order() == 20);
  CHECK(prod.is_regular(6));
  CHECK(prod.size() == 60);

  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    const Graph a = oracle::random_graph(5, 0.5, rng), b = oracle::random_graph(4, 0.5, rng);
    const Graph p = cartesian_product(a, b);
    for (int g = 0; g < 5; ++g)
      for (int h = 0; h < 4; ++h) {
        CHECK(p.degree(g * 4 + h) == a.degree(g) + b.degree(h));
        for (int g2 = 0; g2 < 5; ++g2)
          for (int h2 = 0; h2 < 4; ++h2) {
            const bool want = (g == g2 && b.adjacent(h, h2)) || (h == h2 && a.adjacent(g, g2));
            CHECK(p.adjacent(g * 4 + h, g2 * 4 + h2) == want);
          }
      }
  }
  CHECK(code_of([] { cartesian_product(complete_graph(12), complete_graph(11)); }) == Errc::UniverseExceeded);
  CHECK(code_of([] { cartesian_product(Graph::from_edge_list(2, {{0, 1}, {0, 1}}), complete_graph(2)); }) ==
        Errc::NotSimple);
}

TEST_CASE("connected components") {
  auto comps = connected_components(star_graph(3));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].count() == 4);

  comps = connected_components(Graph::from_edge_list(6, {{3, 4}, {4, 5}, {3, 5}, {0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].members() == std::vector<int>{0, 1, 2});
  CHECK(comps[1].members() == std::vector<int>{3, 4, 5});

  comps = connected_components(Graph::from_edge_list(3, std::span<const Edge>{}));
  REQUIRE(comps.size() == 3);
  for (int v = 0; v < 3; ++v) CHECK(comps[v].members() == std::vector<int>{v});
}

TEST_CASE("induced subgraphs and relabelling") {
  const Graph pet = petersen_graph();
  std::vector<int> original;
  const Graph outer = pet.induced(VertexSet{0, 1, 2, 3, 4}, &original);
  CHECK(original == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(outer.size() == pet.edges_within(VertexSet{0, 1, 2, 3, 4}));
  std::mt19937_64 rng(3);
  const auto perm = oracle::random_permutation(10, rng);
  const Graph moved = pet.relabeled(perm);
  for (const Edge& e : pet.edges()) CHECK(moved.adjacent(perm[e.u], perm[e.v]));
  CHECK(pet.cut_size(VertexSet{0}) == 3);
}

TEST_CASE("max independent set matches brute force") {
  CHECK(max_independent_set(complete_graph(5)).count() == 1);
  CHECK(max_independent_set(octahedron()).count() == 2);
  const Graph prod = cartesian_product(cycle_graph(4), complete_graph(5));
  const VertexSet mis = max_independent_set(prod);
  CHECK(mis.count() == 4);
  CHECK(is_independent(prod, mis));
  CHECK(oracle::alpha(prod) == 4);

  std::mt19937_64 rng(21);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + round % 16;
    const Graph g = oracle::random_graph(n, 0.15 + 0.5 * (round % 7) / 7.0, rng);
    const VertexSet s = max_independent_set(g);
    CHECK(is_independent(g, s));
    CHECK(s.count() == oracle::alpha(g));
  }
}

TEST_CASE("restricted max independent set") {
  const Graph c6 = cycle_graph(6);
  CHECK(max_independent_set(c6, VertexSet{0, 1, 2}).count() == 2);
  CHECK(max_independent_set(c6, VertexSet{}).count() == 0);
}

TEST_CASE("independent sets of a given size") {
  auto collect = [](const Graph& g, int t) {
    std::vector<std::vector<int>> out;
    for_each_independent_set(g, t, [&](const VertexSet& s) {
      out.push_back(s.members());
      return true;
    });
    return out;
  };
  CHECK(collect(cycle_graph(6), 3) == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
  CHECK(collect(complete_graph(4), 2).empty());
  CHECK(collect(octahedron(), 2) == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(collect(cycle_graph(5), 0) == std::vector<std::vector<int>>{{}});

  std::mt19937_64 rng(8);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + round % 11;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    for (int t = 0; t <= n; ++t) {
      const auto got = collect(g, t);
      CHECK(got == oracle::independent_sets(g, t));  // also pins lexicographic order
      CHECK(count_independent_sets(g, t) == static_cast<std::int64_t>(got.size()));
      CHECK(has_independent_set(g, t) == !got.empty());
    }
  }

  int seen = 0;
  const auto visited = for_each_independent_set(cycle_graph(10), 2, [&](const VertexSet&) { return ++seen < 3; });
  CHECK(visited == 3);
}

TEST_CASE("unicyclic component check") {
  auto report = unicyclic_components_check(octahedron(), VertexSet{0, 1});
  CHECK(report.all_unicyclic);
  REQUIRE(report.components.size() == 1);
  CHECK(report.components[0].vertex_count == 4);
  CHECK(report.components[0].edge_count == 4);

  report = unicyclic_components_check(star_graph(3), VertexSet{1, 2, 3});
  CHECK_FALSE(report.all_unicyclic);
  CHECK(report.components[0].edge_count == 0);

  // Two triangles sharing a vertex: a component with two cycles.
  const Graph bowtie = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {5, 0}});
  report = unicyclic_components_check(bowtie, VertexSet{5});
  CHECK_FALSE(report.all_unicyclic);
  CHECK(report.components[0].edge_count == 6);
}

TEST_CASE("graph6 hand encodings") {
  CHECK(write_graph6(complete_graph(4)) == "C~");
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(k4.is_regular(3));
  CHECK(write_graph6(petersen_graph().relabeled(std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9})) ==
        write_graph6(petersen_graph()));
  CHECK(write_graph6(Graph::from_edge_list(0, std::span<const Edge>{})) == "?");
  CHECK(write_graph6(Graph::from_edge_list(1, std::span<const Edge>{})) == "@");
  CHECK(parse_graph6(">>graph6<<C~") == k4);
  // Path 0-1-2: column-major bits 1,0,1 -> 101000 -> 40 + 63.
  CHECK(write_graph6(path_graph(3)) == std::string("Bg"));
}

TEST_CASE("graph6 long header") {
  const Graph big = cycle_graph(70);
  const std::string text = write_graph6(big);
  CHECK(text.substr(0, 4) == std::string("~?@E"));  // 70 = 000000 000001 000110
  CHECK(parse_graph6(text) == big);
}

TEST_CASE("graph6 errors") {
  try {
    parse_graph6("C}x");
    FAIL("trailing byte accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MalformedGraph6);
    CHECK(e.index() == 2);
  }
  try {
    parse_graph6("C ");
    FAIL("bad byte accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MalformedGraph6);
    CHECK(e.index() == 1);
  }
  CHECK(code_of([] { parse_graph6("D~"); }) == Errc::MalformedGraph6);  // truncated
  CHECK(code_of([] { parse_graph6("Bx"); }) == Errc::MalformedGraph6);  // padding bits set
  CHECK(code_of([] { write_graph6(Graph::from_edge_list(2, {{0, 1}, {0, 1}})); }) == Errc::NotSimple);
}

TEST_CASE("edge list and format detection") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {1, 2}});
  const std::string text = write_edge_list(g);
  CHECK(text == "4 3\n0 1\n1 2\n1 2\n");
  CHECK(parse_edge_list(text) == g);
  CHECK(detect_format(text) == GraphFormat::EdgeList);
  CHECK(detect_format("C~\n") == GraphFormat::Graph6);
  CHECK(detect_format("name\n4 3\n0 1\n") == GraphFormat::Named);
  CHECK(code_of([] { parse_edge_list("3 2\n0 1\n"); }) == Errc::MalformedFile);
  CHECK(code_of([] { parse_edge_list("3 1\n0 x\n"); }) == Errc::MalformedFile);
  CHECK(code_of([] { parse_edge_list("3 1\n1 1\n"); }) == Errc::LoopRejected);
  const std::string dot = write_dot(path_graph(2), "P");
  CHECK(dot.find("graph \"P\"") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("round trips on random simple graphs") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + round % 20;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
    CHECK(parse_edge_list(write_edge_list(g)) == g);
  }
}
