#pragma once

#include <unordered_map>
#include <vector>

#include "edgeideal/complex.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/rank.hpp"

namespace edgeideal {

// Reduced homology ranks indexed from dimension -1 upward:
// by_dim[k+1] = rank of H~_k. All-zero tail entries are trimmed.
struct HomologyRanks {
  std::vector<int> by_dim;

  int rank(int k) const {
    int i = k + 1;
    if (i < 0 || i >= static_cast<int>(by_dim.size())) return 0;
    return by_dim[i];
  }
  bool all_zero() const {
    for (int r : by_dim)
      if (r) return false;
    return true;
  }
  int total() const {
    int t = 0;
    for (int r : by_dim) t += r;
    return t;
  }
};

namespace detail {

// Ranks from explicit face lists (faces grouped by cardinality, including
// the empty face at index 0). Uses the augmented chain complex, so the
// result is reduced homology.
inline HomologyRanks homology_from_faces(
    const std::vector<std::vector<VertexSet>>& levels, FieldSpec field) {
  HomologyRanks out;
  int top = static_cast<int>(levels.size());  // levels[c] = c-element faces
  if (top == 0) return out;                   // void complex
  out.by_dim.assign(top, 0);
  std::vector<int> boundary_rank(top + 1, 0);  // rank of д_c : C_c -> C_{c-1}
  for (int c = 1; c < top; ++c) {
    const auto& rows = levels[c - 1];
    const auto& cols = levels[c];
    if (rows.empty() || cols.empty()) continue;
    std::unordered_map<VertexSet, int> row_index;
    row_index.reserve(rows.size() * 2);
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      VertexSet f = cols[j];
      int sign = 1;
      for_each_vertex(f, [&](int v) {
        m.at(row_index.at(f & ~bit(v)), static_cast<int>(j)) = sign;
        sign = -sign;
      });
    }
    boundary_rank[c] = rank_over(m, field);
  }
  for (int c = 0; c < top; ++c) {
    int dim_c = static_cast<int>(levels[c].size());
    out.by_dim[c] = dim_c - boundary_rank[c] - boundary_rank[c + 1];
  }
  return out;
}

}  // namespace detail

inline HomologyRanks reduced_homology_ranks(const SimplicialComplex& d,
                                            FieldSpec field) {
  if (d.is_void()) return {};
  if (is_cone(d)) {
    HomologyRanks out;
    out.by_dim.assign(d.dim() + 2, 0);
    return out;
  }
  return detail::homology_from_faces(d.faces_by_size(), field);
}

// Reduced homology of the restriction Δ_G|_W = Δ_{G[W]}, i.e. of the clique
// complex of the complement of G[W]. `cadj` is the complement adjacency of
// the ambient graph.
//
// Two shortcuts before any matrix work:
//  - a vertex of W isolated in G[W] lies in every facet: cone, all zero;
//  - removing a simplicial non-isolated vertex of the complement side does
//    not change homology (its closed star is a simplex meeting the rest in
//    a smaller simplex), so strip such vertices until none remain. If the
//    complement side becomes edgeless with k vertices the complex is k
//    disjoint simplices: rank k-1 in dimension 0.
inline HomologyRanks independence_restriction_homology(
    const std::vector<VertexSet>& cadj, VertexSet w, FieldSpec field) {
  HomologyRanks out;
  if (w == 0) {  // the empty complex {∅}
    out.by_dim = {1};
    return out;
  }
  VertexSet live = w;
  bool changed = true;
  while (changed) {
    changed = false;
    bool edgeless = true;
    VertexSet lv = live;
    while (lv) {
      int v = lowest_vertex(lv);
      lv &= lv - 1;
      VertexSet nb = cadj[v] & live;
      if (nb == 0) continue;
      edgeless = false;
      if (nb == (live & ~bit(v))) return {{}};  // cone point: all zero
      bool simplicial = true;
      for_each_vertex(nb, [&](int u) {
        if ((nb & ~bit(u) & ~cadj[u]) != 0) simplicial = false;
      });
      if (simplicial) {
        live &= ~bit(v);
        changed = true;
        break;
      }
    }
    if (edgeless) {
      out.by_dim = {0, popcount(live) - 1};
      return out;
    }
  }
  // Residual complement side still has non-simplicial structure: enumerate
  // its cliques and fall back to boundary ranks.
  std::vector<int> idx = members(live);
  Graph h(static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (contains(cadj[idx[i]], idx[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return detail::homology_from_faces(cliques_by_size(h), field);
}

inline HomologyRanks independence_restriction_homology(const Graph& g,
                                                       VertexSet w,
                                                       FieldSpec field) {
  return independence_restriction_homology(complement(g).adj, w, field);
}

}  // namespace edgeideal
