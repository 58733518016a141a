#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "edgeideal/cliques.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

// Simplicial complex as an inclusion-maximal facet list over an ambient
// vertex set 0..n-1. Ambient vertices outside every facet are "ghosts":
// they carry labels but contribute no faces (restrictions and deletions
// produce them). Conventions:
//   facets = {}   : the void complex (no faces at all)
//   facets = {0}  : the empty complex {∅}
struct SimplicialComplex {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<VertexSet> facets;

  SimplicialComplex() = default;

  explicit SimplicialComplex(int n_) : n(n_) {
    labels.reserve(n_);
    for (int i = 0; i < n_; ++i) labels.push_back("x" + std::to_string(i + 1));
  }

  SimplicialComplex(int n_, std::vector<VertexSet> raw_facets)
      : SimplicialComplex(n_) {
    set_facets(std::move(raw_facets));
  }

  // Keeps only inclusion-maximal sets, sorted and deduplicated.
  void set_facets(std::vector<VertexSet> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    facets.clear();
    for (VertexSet f : raw) {
      bool maximal = true;
      for (VertexSet g : raw)
        if (f != g && subset_of(f, g)) {
          maximal = false;
          break;
        }
      if (maximal) facets.push_back(f);
    }
  }

  bool is_void() const { return facets.empty(); }
  bool is_simplex() const { return facets.size() <= 1; }

  VertexSet vertex_set() const {
    VertexSet v = 0;
    for (VertexSet f : facets) v |= f;
    return v;
  }

  // dim = (largest facet cardinality) - 1; the empty complex has dim -1.
  int dim() const {
    int d = -2;
    for (VertexSet f : facets) d = std::max(d, popcount(f) - 1);
    return d;
  }

  bool is_pure() const {
    for (VertexSet f : facets)
      if (popcount(f) != popcount(facets.front())) return false;
    return true;
  }

  bool has_face(VertexSet f) const {
    for (VertexSet g : facets)
      if (subset_of(f, g)) return true;
    return false;
  }

  bool is_facet(VertexSet f) const {
    return std::find(facets.begin(), facets.end(), f) != facets.end();
  }

  // Faces grouped by cardinality (index k = k-element faces); includes the
  // empty face when the complex is not void.
  std::vector<std::vector<VertexSet>> faces_by_size() const {
    std::vector<std::vector<VertexSet>> out;
    if (is_void()) return out;
    std::unordered_set<VertexSet> seen;
    out.resize(dim() + 2);
    for (VertexSet f : facets)
      for_each_subset(f, [&](VertexSet s) {
        if (seen.insert(s).second) out[popcount(s)].push_back(s);
      });
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
  }

  bool operator==(const SimplicialComplex& o) const {
    return n == o.n && facets == o.facets;
  }
};

// Facets are the maximal independent sets of G.
inline SimplicialComplex independence_complex(const Graph& g) {
  SimplicialComplex d(g.n);
  d.labels = g.labels;
  d.set_facets(maximal_independent_sets(g));
  return d;
}

// Facets are the maximal cliques of G.
inline SimplicialComplex clique_complex(const Graph& g) {
  SimplicialComplex d(g.n);
  d.labels = g.labels;
  d.set_facets(maximal_cliques(g));
  return d;
}

// link(F) = { E : E ∩ F = ∅, E ∪ F ∈ Δ }; requires F ∈ Δ.
inline SimplicialComplex link(const SimplicialComplex& d, VertexSet f) {
  if (!d.has_face(f)) throw std::invalid_argument("link of a non-face");
  SimplicialComplex out(d.n);
  out.labels = d.labels;
  std::vector<VertexSet> raw;
  for (VertexSet m : d.facets)
    if (subset_of(f, m)) raw.push_back(m & ~f);
  out.set_facets(std::move(raw));
  return out;
}

// del(F) = { E : E ∩ F = ∅ }.
inline SimplicialComplex deletion(const SimplicialComplex& d, VertexSet f) {
  SimplicialComplex out(d.n);
  out.labels = d.labels;
  std::vector<VertexSet> raw;
  for (VertexSet m : d.facets) raw.push_back(m & ~f);
  out.set_facets(std::move(raw));
  return out;
}

// Restriction Δ|_W = { E ∈ Δ : E ⊆ W }.
inline SimplicialComplex restriction(const SimplicialComplex& d, VertexSet w) {
  SimplicialComplex out(d.n);
  out.labels = d.labels;
  std::vector<VertexSet> raw;
  for (VertexSet m : d.facets) raw.push_back(m & w);
  out.set_facets(std::move(raw));
  return out;
}

// Vertices belonging to exactly one facet.
inline std::vector<int> free_vertices(const SimplicialComplex& d) {
  std::vector<int> out;
  for_each_vertex(d.vertex_set(), [&](int v) {
    int count = 0;
    for (VertexSet f : d.facets)
      if (contains(f, v)) ++count;
    if (count == 1) out.push_back(v);
  });
  return out;
}

// A cone point: a vertex lying in every facet (makes all reduced homology
// vanish).
inline bool is_cone(const SimplicialComplex& d) {
  if (d.is_void() || d.facets == std::vector<VertexSet>{0}) return false;
  VertexSet common = ~VertexSet{0};
  for (VertexSet f : d.facets) common &= f;
  return common != 0;
}

}  // namespace edgeideal
