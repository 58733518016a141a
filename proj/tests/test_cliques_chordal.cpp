#include <doctest.h>

#include "edgeideal/chordal.hpp"
#include "edgeideal/cliques.hpp"
#include "edgeideal/connectivity.hpp"
#include "edgeideal/generators.hpp"
#include "oracles.hpp"
#include "fixture_graphs.hpp"

using namespace edgeideal;

TEST_CASE("maximal independent sets") {
  Graph g = complement(barbell(4));
  auto mis = maximal_independent_sets(g);
  REQUIRE(mis.size() == 3);
  // Two K_4 vertex sets and the bridge pair {x1,x2}.
  VertexSet copy_a = bit(0) | bit(2) | bit(3) | bit(4);
  VertexSet copy_b = bit(1) | bit(5) | bit(6) | bit(7);
  CHECK(std::count(mis.begin(), mis.end(), copy_a) == 1);
  CHECK(std::count(mis.begin(), mis.end(), copy_b) == 1);
  CHECK(std::count(mis.begin(), mis.end(), bit(0) | bit(1)) == 1);

  auto singletons = maximal_independent_sets(complete_graph(5));
  CHECK(singletons.size() == 5);

  auto c4 = maximal_independent_sets(cycle_graph(4));
  REQUIRE(c4.size() == 2);
  CHECK(c4[0] == (bit(0) | bit(2)));
  CHECK(c4[1] == (bit(1) | bit(3)));
}

TEST_CASE("maximal independent sets agree with subset brute force") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : graphs_up_to_iso(n)) {
      auto fast = maximal_independent_sets(g);
      auto slow = oracles::brute_maximal_independent_sets(g);
      std::sort(slow.begin(), slow.end());
      std::vector<VertexSet> fast_sorted = fast;
      std::sort(fast_sorted.begin(), fast_sorted.end());
      CHECK(fast_sorted == slow);
      for (VertexSet s : fast) CHECK(is_maximal_independent(g, s));
    }
}

TEST_CASE("bight") {
  CHECK(bight(complement(barbell(4))) == 6);
  CHECK(bight(complete_graph(6)) == 5);
  CHECK(bight(fixtures::example_graph7()) ==
        oracles::brute_bight(fixtures::example_graph7()));
  for (const Graph& g : graphs_up_to_iso(5))
    CHECK(bight(g) == oracles::brute_bight(g));
}

TEST_CASE("maximal independent sets complement to minimal vertex covers") {
  auto is_cover = [](const Graph& g, VertexSet c) {
    for (auto [u, v] : g.edges())
      if (!contains(c, u) && !contains(c, v)) return false;
    return true;
  };
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : graphs_up_to_iso(n)) {
      int smallest = g.n;
      for (VertexSet s : maximal_independent_sets(g)) {
        smallest = std::min(smallest, popcount(s));
        VertexSet c = g.vertices() & ~s;
        CHECK(is_cover(g, c));
        bool minimal = true;
        for_each_vertex(c, [&](int v) {
          if (is_cover(g, c & ~bit(v))) minimal = false;
        });
        CHECK(minimal);
      }
      CHECK(bight(g) + smallest == g.n);
    }
}

TEST_CASE("chordality certificates") {
  CHECK(is_chordal(barbell(4)).chordal);
  auto c4 = is_chordal(cycle_graph(4));
  CHECK(!c4.chordal);
  CHECK(c4.induced_cycle.size() == 4);
  CHECK(cycle_is_chordless(cycle_graph(4), c4.induced_cycle));
  CHECK(is_chordal(fixtures::bowtie()).chordal);
  CHECK(is_chordal(fixtures::two_triangles_path()).chordal);

  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_iso(n)) {
      auto cert = is_chordal(g);
      CHECK(cert.chordal == oracles::brute_chordal(g));
      if (cert.chordal)
        CHECK(verify_elimination_order(g, cert.elimination_order));
      else
        CHECK(cycle_is_chordless(g, cert.induced_cycle));
    }
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(fixtures::tree_32()).value == 1);
  CHECK(edge_connectivity(fixtures::tree_33()).value == 2);
  CHECK(edge_connectivity(path_graph(3)).value == 1);
  CHECK(edge_connectivity(complete_graph(5)).value == 4);
  auto dis = edge_connectivity(fixtures::component_plus_isolated());
  CHECK(!dis.connected);
  CHECK(dis.value == 0);

  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      int lambda = edge_connectivity(g).value;
      CHECK(lambda == oracles::brute_edge_connectivity(g));
      CHECK(lambda <= g.degree(lowest_vertex(max_degree(g).attaining)));
      int mindeg = g.n;
      for (int v = 0; v < g.n; ++v) mindeg = std::min(mindeg, g.degree(v));
      CHECK(lambda <= mindeg);
    }
}
