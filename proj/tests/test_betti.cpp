#include <doctest.h>

#include "edgeideal/betti.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/io.hpp"
#include "oracles.hpp"
#include "fixture_graphs.hpp"

using namespace edgeideal;

TEST_CASE("single edge") {
  Graph k2 = complete_graph(2);
  BettiTable t = betti_table(k2);
  REQUIRE(t.entries.size() == 1);
  CHECK(t.beta(1, 2) == 1);
  CHECK(t.pdim() == 1);
  CHECK(t.regularity() == 1);
  CHECK(t.depth() == 1);
}

TEST_CASE("component plus isolated vertex, by hand") {
  // K_4 minus an edge: β_{1,2}=5, β_{2,3}=6, β_{3,4}=2 (restrictions counted
  // by hand); adding an isolated vertex cones every subset containing it,
  // so the table is unchanged and pdim stays 3.
  Graph comp(4, {{0, 2}, {1, 2}, {1, 3}, {0, 3}, {2, 3}});
  BettiTable t = betti_table(comp);
  CHECK(t.beta(1, 2) == 5);
  CHECK(t.beta(2, 3) == 6);
  CHECK(t.beta(3, 4) == 2);
  CHECK(t.entries.size() == 3);
  CHECK(t.pdim() == 3);

  Graph with_iso = fixtures::component_plus_isolated();
  BettiTable t2 = betti_table(with_iso);
  CHECK(t2.beta(1, 2) == 5);
  CHECK(t2.beta(2, 3) == 6);
  CHECK(t2.beta(3, 4) == 2);
  CHECK(t2.entries.size() == 3);
  CHECK(t2.pdim() == 3);
  CHECK(t2.depth() == 2);
}

TEST_CASE("hochster matches the Taylor-complex oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : graphs_up_to_iso(n)) {
      for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        BettiTable t = betti_table(g, field);
        auto oracle = oracles::taylor_betti(g, field);
        std::map<std::pair<int, int>, long long> mine;
        for (const auto& [ij, r] : t.entries) mine[ij] = r;
        CHECK(mine == oracle);
      }
    }
}

TEST_CASE("betti invariants across the small corpus") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      BettiTable t = betti_table(g);
      CHECK(t.beta(1, 2) == g.edge_count());
      CHECK(t.pdim() + t.depth() == g.n);
      CHECK(t.pdim() >= bight(g));
      CHECK(bight(g) >= max_degree(g).value);
    }
}

TEST_CASE("barbell complement table") {
  Graph g = complement(barbell(4));
  BettiTable t = betti_table(g);
  CHECK(t.pdim() == 6);
  CHECK(t.depth() == 2);
}

TEST_CASE("complete graphs and wheels") {
  for (int n = 2; n <= 8; ++n) CHECK(pdim(complete_graph(n)) == n - 1);
  for (int n = 4; n <= 8; ++n) CHECK(pdim(wheel(n)) == n - 1);
}

TEST_CASE("example values for pdim and depth") {
  Graph g1 = fixtures::tree_32();  // complement is a (2,2,1)-tree
  BettiTable t1 = betti_table(g1);
  CHECK(t1.depth() == 1);
  CHECK(t1.pdim() == 3);

  Graph g2 = fixtures::example2_g2();  // complement is a (4,3,3,3,3)-tree
  BettiTable t2 = betti_table(g2);
  CHECK(t2.depth() == 3);
  CHECK(t2.pdim() == 5);
}

TEST_CASE("eq1 residual") {
  CHECK(check_eq1(complement(barbell(4))) == 0);
  CHECK(check_eq1(complete_graph(2)) == 0);

  // W_6 is not co-chordal; value frozen from the full Betti computation.
  Graph w6 = wheel(6);
  std::int64_t residual = check_eq1(w6);
  CHECK(residual >= 0);
  BettiTable t = betti_table(w6);
  HilbertData hd = hilbert_data(w6);
  CHECK(residual == (hd.krull_dim - t.depth()) - (hd.h_degree - t.regularity()));

  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      std::int64_t res = check_eq1(g);
      CHECK(res >= 0);
      if (is_co_chordal(g)) CHECK(res == 0);
    }
}

TEST_CASE("2-linear resolutions") {
  CHECK(has_2linear_resolution(complement(barbell(4))));
  CHECK(has_2linear_resolution(complete_graph(2)));
  CHECK(!has_2linear_resolution(cycle_graph(5)));
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n))
      CHECK(has_2linear_resolution(g) == is_co_chordal(g));
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(betti_table(Graph(17)), size_error);
  CHECK_NOTHROW(betti_table(Graph(10)));
}

TEST_CASE("parallel scan is deterministic") {
  Graph g = fixtures::example2_g2();
  BettiTable serial = betti_table(g, {}, 16, 1);
  BettiTable parallel = betti_table(g, {}, 16, 4);
  CHECK(serial.entries == parallel.entries);
}

TEST_CASE("characteristic comparison on the corpus") {
  // Reported, not asserted: collect any char-0 vs char-2 differences.
  std::vector<std::string> differ;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      BettiTable a = betti_table(g, FieldSpec::rationals());
      BettiTable b = betti_table(g, FieldSpec::prime(2));
      if (a.entries != b.entries) differ.push_back(to_graph6(g));
    }
  if (!differ.empty()) {
    MESSAGE("characteristic-dependent tables on corpus: " << differ.size());
    for (const auto& s : differ) MESSAGE("  " << s);
  }
  CHECK(true);  // informational
}
