#include <doctest.h>

#include <random>

#include "edgeideal/generators.hpp"
#include "edgeideal/homology.hpp"

using namespace edgeideal;

TEST_CASE("homology conventions") {
  FieldSpec q = FieldSpec::rationals();

  SimplicialComplex void_complex(3);
  CHECK(reduced_homology_ranks(void_complex, q).all_zero());

  SimplicialComplex empty_complex(3, {VertexSet{0}});
  HomologyRanks r = reduced_homology_ranks(empty_complex, q);
  CHECK(r.rank(-1) == 1);
  CHECK(r.total() == 1);

  SimplicialComplex two_edges(4, {bit(0) | bit(2), bit(1) | bit(3)});
  HomologyRanks r2 = reduced_homology_ranks(two_edges, q);
  CHECK(r2.rank(0) == 1);
  CHECK(r2.rank(1) == 0);
  CHECK(r2.rank(-1) == 0);

  // Boundary matrix by hand: rank d_1 = 1, rank d_2 = 2, so H~_1 has rank
  // 3 - 2 - 0 = 1 and H~_0 has rank 3 - 1 - 2 = 0.
  SimplicialComplex hollow(3, {bit(0) | bit(1), bit(1) | bit(2), bit(0) | bit(2)});
  HomologyRanks r3 = reduced_homology_ranks(hollow, q);
  CHECK(r3.rank(1) == 1);
  CHECK(r3.rank(0) == 0);

  SimplicialComplex simplex(4, {full_set(4)});
  CHECK(reduced_homology_ranks(simplex, q).all_zero());
}

TEST_CASE("homology over prime fields matches char 0 on small complexes") {
  FieldSpec q = FieldSpec::rationals();
  FieldSpec f2 = FieldSpec::prime(2);
  FieldSpec f3 = FieldSpec::prime(3);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::vector<VertexSet> facets;
    for (int i = 0, c = 1 + static_cast<int>(rng() % 5); i < c; ++i)
      facets.push_back(rng() & full_set(n));
    SimplicialComplex d(n, facets);
    if (d.is_void()) continue;
    HomologyRanks a = reduced_homology_ranks(d, q);
    HomologyRanks b = reduced_homology_ranks(d, f2);
    HomologyRanks c = reduced_homology_ranks(d, f3);
    // Euler characteristic is field-independent.
    int ea = 0, eb = 0, ec = 0;
    for (int k = -1; k <= d.dim(); ++k) {
      ea += (k % 2 ? -1 : 1) * a.rank(k);
      eb += (k % 2 ? -1 : 1) * b.rank(k);
      ec += (k % 2 ? -1 : 1) * c.rank(k);
    }
    CHECK(ea == eb);
    CHECK(ea == ec);
    // Char 0 ranks are minimal (universal coefficients).
    for (int k = -1; k <= d.dim(); ++k) {
      CHECK(a.rank(k) <= b.rank(k));
      CHECK(a.rank(k) <= c.rank(k));
    }
  }
}

TEST_CASE("restriction homology matches the generic path") {
  FieldSpec q = FieldSpec::rationals();
  FieldSpec f2 = FieldSpec::prime(2);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : graphs_up_to_iso(n)) {
      SimplicialComplex dg = independence_complex(g);
      for (VertexSet w = 0; w < (VertexSet{1} << n); ++w) {
        SimplicialComplex restricted = restriction(dg, w);
        if (w == 0) {
          // restriction facets collapse to {∅}
          CHECK(restricted.facets == std::vector<VertexSet>{0});
        }
        for (FieldSpec field : {q, f2}) {
          HomologyRanks generic = reduced_homology_ranks(restricted, field);
          HomologyRanks fast = independence_restriction_homology(g, w, field);
          for (int k = -1; k <= n; ++k) CHECK(generic.rank(k) == fast.rank(k));
        }
      }
    }
}

TEST_CASE("real projective plane has characteristic-dependent homology") {
  // Standard 6-vertex triangulation; tells the exact rank kernels apart.
  std::vector<VertexSet> tri;
  int rp2[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                    {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  for (auto& f : rp2) tri.push_back(bit(f[0] - 1) | bit(f[1] - 1) | bit(f[2] - 1));
  SimplicialComplex d(6, tri);
  HomologyRanks over_q = reduced_homology_ranks(d, FieldSpec::rationals());
  HomologyRanks over_f2 = reduced_homology_ranks(d, FieldSpec::prime(2));
  CHECK(over_q.rank(1) == 0);
  CHECK(over_q.rank(2) == 0);
  CHECK(over_f2.rank(1) == 1);
  CHECK(over_f2.rank(2) == 1);
}
