#include <doctest.h>

#include "edgeideal/generators.hpp"
#include "edgeideal/recognition.hpp"
#include "fixture_graphs.hpp"

using namespace edgeideal;

TEST_CASE("max-process traces") {
  Graph g = fixtures::example_graph7();

  SUBCASE("forced first choice x3 reproduces the worked example") {
    MaxProcessTrace t = max_process(g, TieBreak::first_choice(2));
    CHECK(t.order == std::vector<int>{2, 0, 5});
    CHECK(t.maximal);
    CHECK(t.degrees == std::vector<int>{4, 0, 0});
    CHECK(t.residuals[0] == (bit(0) | bit(5)));
    CHECK(t.residuals[2] == 0);
    CHECK(is_maximal_independent(g, set_of(t.order)));
  }

  SUBCASE("complete graphs stop after one pick") {
    MaxProcessTrace t = max_process(complete_graph(6));
    CHECK(t.order == std::vector<int>{0});
    CHECK(t.maximal);
  }

  SUBCASE("every branch yields a maximal independent set") {
    auto traces = max_process_all_branches(g);
    CHECK(traces.size() > 1);
    for (const auto& t : traces) {
      CHECK(t.maximal);
      CHECK(is_maximal_independent(g, set_of(t.order)));
      // First pick always has the global maximum degree.
      CHECK(t.degrees[0] == max_degree(g).value);
    }
  }

  SUBCASE("forcing a non-maximum first choice is rejected") {
    CHECK_THROWS_AS(max_process(g, TieBreak::first_choice(0)),
                    std::invalid_argument);
  }
}

TEST_CASE("full vertices") {
  CHECK(has_full_vertex(wheel(5)) == 0);
  CHECK(!has_full_vertex(cycle_graph(4)));
  CHECK(has_full_vertex(star_complete({2, 2})) == 0);  // bowtie hub
  CHECK(has_full_vertex(complete_graph(3)) == 0);
}

TEST_CASE("necessary screens") {
  // Complement of the two-triangle chain: its max-degree vertex (the chain
  // middle) is not free in the independence complex.
  Graph g = complement(fixtures::two_triangles_path());
  ScreenReport rep = necessary_screens(g);
  CHECK(rep.applicable);
  CHECK(!rep.free_and_shedding_ok);
  CHECK(std::find(rep.not_free.begin(), rep.not_free.end(), 3) !=
        rep.not_free.end());

  // C_4 has two non-adjacent maximum-degree vertices.
  ScreenReport c4 = necessary_screens(cycle_graph(4));
  CHECK(c4.applicable);
  CHECK(!c4.max_degree_adjacent_ok);

  // The example graph has non-adjacent maximum-degree vertices x2, x4.
  ScreenReport ex = necessary_screens(fixtures::example_graph7());
  CHECK(!ex.max_degree_adjacent_ok);
  bool has_24 = false;
  for (auto [a, b] : ex.non_adjacent_pairs)
    if ((a == 1 && b == 3) || (a == 3 && b == 1)) has_24 = true;
  CHECK(has_24);

  // Edgeless graphs: screens are vacuous.
  CHECK(!necessary_screens(Graph(3)).applicable);
  CHECK(necessary_screens(Graph(3)).pass());
}

TEST_CASE("dq-tree recognition accepts the fixture trees") {
  TreeCertificate a = recognize_dq_tree(fixtures::tree_33());
  REQUIRE(a.accepted);
  CHECK(a.sizes == std::vector<int>{3, 3});
  CHECK(replay_certificate(fixtures::tree_33(), a));

  TreeCertificate b = recognize_dq_tree(fixtures::tree_32());
  REQUIRE(b.accepted);
  CHECK(b.sizes == std::vector<int>{3, 2});
  CHECK(replay_certificate(fixtures::tree_32(), b));

  TreeCertificate c = recognize_dq_tree(fixtures::bowtie());
  CHECK(!c.accepted);

  TreeCertificate k1 = recognize_dq_tree(complete_graph(1));
  CHECK(k1.accepted);
  CHECK(k1.sizes == std::vector<int>{1});

  TreeCertificate edgeless = recognize_dq_tree(Graph(4));
  CHECK(edgeless.accepted);
  CHECK(edgeless.sizes == std::vector<int>{1, 1, 1, 1});

  // Complement of the G_{m,r} family: (mr, (m-1)r+1 repeated m times).
  for (int m = 1; m <= 3; ++m)
    for (int r = 1; r <= 3; ++r) {
      if (m * (r + 1) > 12) continue;
      TreeCertificate t = recognize_dq_tree(complement(gmr(m, r)));
      REQUIRE(t.accepted);
      std::vector<int> expected{m * r};
      for (int i = 0; i < m; ++i) expected.push_back((m - 1) * r + 1);
      std::sort(expected.begin(), expected.end(), std::greater<int>());
      CHECK(t.sizes == expected);
    }
}

TEST_CASE("rejections carry the screen-failure reason") {
  // The three counterexample complements are chordal, so the screens are
  // what rejects them.
  TreeCertificate chain = recognize_dq_tree(fixtures::two_triangles_path());
  CHECK(!chain.accepted);
  CHECK(chain.reason == TreeCertificate::Reason::necessary_condition_failure);

  TreeCertificate c4bar = recognize_dq_tree(complement(cycle_graph(4)));
  CHECK(!c4bar.accepted);
  CHECK(c4bar.reason == TreeCertificate::Reason::necessary_condition_failure);

  TreeCertificate ex3 = recognize_dq_tree(complement(fixtures::example_graph7()));
  CHECK(!ex3.accepted);
  CHECK(ex3.reason == TreeCertificate::Reason::necessary_condition_failure);

  TreeCertificate c5 = recognize_dq_tree(cycle_graph(5));
  CHECK(!c5.accepted);
  CHECK(c5.reason == TreeCertificate::Reason::not_chordal);
  CHECK(c5.cycle_witness.size() == 5);
}

TEST_CASE("certificate build order is a shelling and leaf order") {
  for (const Graph& tree :
       {fixtures::tree_33(), fixtures::tree_32(),
        complement(fixtures::example2_g2()), complement(fixtures::tree_32())}) {
    TreeCertificate cert = recognize_dq_tree(tree);
    if (!cert.accepted) continue;
    CHECK(is_shelling_order(cert.facets));
    CHECK(is_leaf_order(cert.facets));
  }
}

TEST_CASE("fast pdim dispatch") {
  FastPdim w5 = pdim_fast(wheel(5));
  CHECK(w5.value == 4);
  CHECK(w5.method == "full-vertex");

  // The pendant-triangle graph has a full vertex, so rule (1) wins; its
  // value agrees with the tree rule.
  FastPdim g1 = pdim_fast(fixtures::tree_32());
  CHECK(g1.value == 3);
  CHECK(g1.method == "full-vertex");

  FastPdim g2 = pdim_fast(fixtures::example2_g2());
  CHECK(g2.value == 5);
  CHECK(g2.method == "dq-tree");

  FastPdim disc = pdim_fast(fixtures::component_plus_isolated());
  CHECK(disc.method == "dq-tree-component");
  CHECK(disc.value == 3);  // isolated vertices leave pdim unchanged

  FastPdim barb = pdim_fast(complement(barbell(4)));
  CHECK(barb.method == "hochster");
  CHECK(barb.value == 6);

  // Cross-check every fast answer against the exact table.
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_iso(n))
      CHECK(pdim_fast(g).value == betti_table(g).pdim());
}

TEST_CASE("fast depth") {
  CHECK(depth_fast(fixtures::tree_32()) == 1);       // (2,2,1)-tree
  CHECK(depth_fast(fixtures::example2_g2()) == 3);   // (4,3,3,3,3)-tree
  CHECK(depth_fast(complete_graph(5)) == 1);
  CHECK(!depth_fast(complement(barbell(4))).has_value());
  CHECK(!depth_fast(cycle_graph(5)).has_value());
}
