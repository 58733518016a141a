#include <doctest.h>

#include "edgeideal/complex.hpp"
#include "edgeideal/generators.hpp"
#include "fixture_graphs.hpp"

using namespace edgeideal;

TEST_CASE("independence and clique complexes") {
  Graph g = complement(barbell(4));
  SimplicialComplex d = independence_complex(g);
  REQUIRE(d.facets.size() == 3);
  CHECK(d.is_facet(bit(0) | bit(2) | bit(3) | bit(4)));
  CHECK(d.is_facet(bit(1) | bit(5) | bit(6) | bit(7)));
  CHECK(d.is_facet(bit(0) | bit(1)));

  SimplicialComplex full = independence_complex(Graph(5));
  CHECK(full.facets == std::vector<VertexSet>{full_set(5)});

  SimplicialComplex c4 = independence_complex(cycle_graph(4));
  CHECK(c4.facets == std::vector<VertexSet>{bit(0) | bit(2), bit(1) | bit(3)});

  CHECK(clique_complex(complete_graph(4)).facets ==
        std::vector<VertexSet>{full_set(4)});
  SimplicialComplex t32 = clique_complex(fixtures::tree_32());
  REQUIRE(t32.facets.size() == 2);
  CHECK(t32.is_facet(bit(0) | bit(1) | bit(2)));
  CHECK(t32.is_facet(bit(2) | bit(3)));
}

TEST_CASE("independence complex equals clique complex of the complement") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_iso(n))
      CHECK(independence_complex(g).facets == clique_complex(complement(g)).facets);
}

TEST_CASE("link and deletion") {
  // Link of a free vertex of a simplex is the simplex minus the vertex.
  SimplicialComplex simplex(4, {full_set(4)});
  CHECK(link(simplex, bit(2)).facets ==
        std::vector<VertexSet>{full_set(4) & ~bit(2)});
  CHECK(deletion(simplex, VertexSet{0}) == simplex);
  CHECK_THROWS_AS(link(SimplicialComplex(3, {bit(0) | bit(1)}), bit(2)),
                  std::invalid_argument);

  // del(x) = Δ_{G\x} and link(x) = Δ_{G\N[x]} for every vertex, compared as
  // facet sets in original labels.
  Graph g = fixtures::example_graph7();
  SimplicialComplex dg = independence_complex(g);
  for (int v = 0; v < g.n; ++v) {
    SimplicialComplex del = deletion(dg, bit(v));
    SimplicialComplex ind_minus = independence_complex(remove_vertices(g, bit(v)));
    std::vector<VertexSet> expected;
    std::vector<int> keep = members(g.vertices() & ~bit(v));
    for (VertexSet f : ind_minus.facets) {
      VertexSet back = 0;
      for_each_vertex(f, [&](int i) { back |= bit(keep[i]); });
      expected.push_back(back);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(del.facets == expected);

    SimplicialComplex lk = link(dg, bit(v));
    VertexSet rest = g.vertices() & ~closed_neighborhood(g, bit(v));
    SimplicialComplex ind_link = independence_complex(induced_subgraph(g, rest));
    std::vector<VertexSet> expected_link;
    std::vector<int> keep_link = members(rest);
    for (VertexSet f : ind_link.facets) {
      VertexSet back = 0;
      for_each_vertex(f, [&](int i) { back |= bit(keep_link[i]); });
      expected_link.push_back(back);
    }
    std::sort(expected_link.begin(), expected_link.end());
    CHECK(lk.facets == expected_link);
  }
}

TEST_CASE("link and deletion identities across the corpus") {
  // del(x) = Δ_{G\x} and link(x) = Δ_{G\N[x]} as facet sets, for every
  // vertex of every small graph.
  auto lifted_facets = [](const Graph& sub, VertexSet keep_mask) {
    std::vector<int> keep = members(keep_mask);
    std::vector<VertexSet> out;
    for (VertexSet f : independence_complex(sub).facets) {
      VertexSet back = 0;
      for_each_vertex(f, [&](int i) { back |= bit(keep[i]); });
      out.push_back(back);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : graphs_up_to_iso(n)) {
      SimplicialComplex dg = independence_complex(g);
      for (int v = 0; v < g.n; ++v) {
        VertexSet rest = g.vertices() & ~bit(v);
        CHECK(deletion(dg, bit(v)).facets ==
              lifted_facets(induced_subgraph(g, rest), rest));
        VertexSet far = g.vertices() & ~closed_neighborhood(g, bit(v));
        CHECK(link(dg, bit(v)).facets ==
              lifted_facets(induced_subgraph(g, far), far));
      }
    }
}

TEST_CASE("free vertices") {
  SimplicialComplex d(4, {bit(0) | bit(1) | bit(2), bit(2) | bit(3)});
  auto fv = free_vertices(d);
  CHECK(fv == std::vector<int>{0, 1, 3});

  SimplicialComplex simplex(3, {full_set(3)});
  CHECK(free_vertices(simplex).size() == 3);

  // x (index 3) lies in two facets of the clique complex of the two-triangle
  // graph, so it is not free in the complement's independence complex.
  Graph g = complement(fixtures::two_triangles_path());
  SimplicialComplex dg = independence_complex(g);
  auto frees = free_vertices(dg);
  CHECK(std::find(frees.begin(), frees.end(), 3) == frees.end());
}

TEST_CASE("pure complexes and unmixed graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_iso(n)) {
      auto mis = maximal_independent_sets(g);
      bool well_covered = true;
      for (VertexSet s : mis)
        if (popcount(s) != popcount(mis.front())) well_covered = false;
      CHECK(independence_complex(g).is_pure() == well_covered);
    }
}

TEST_CASE("void and empty complexes") {
  SimplicialComplex void_complex(3);
  CHECK(void_complex.is_void());
  SimplicialComplex empty_complex(3, {VertexSet{0}});
  CHECK(!empty_complex.is_void());
  CHECK(empty_complex.dim() == -1);
  CHECK(empty_complex.faces_by_size().size() == 1);
}
