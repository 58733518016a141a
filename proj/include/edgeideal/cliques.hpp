#pragma once

#include <algorithm>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

namespace detail {

// Bron-Kerbosch with pivoting over bitset adjacency.
template <typename Out>
inline void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet r,
                          VertexSet p, VertexSet x, Out& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of p|x with most neighbors in p.
  int pivot = -1, best = -1;
  for_each_vertex(p | x, [&](int u) {
    int c = popcount(adj[u] & p);
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexSet cand = p & ~adj[pivot];
  for_each_vertex(cand, [&](int v) {
    bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  });
}

}  // namespace detail

// All maximal cliques, in lexicographic order of sorted member lists.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.n == 0) return {0};  // the empty clique is the unique maximal one
  detail::bron_kerbosch(g.adj, 0, g.vertices(), 0, out);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    // Lexicographic on sorted members = numeric on bit-reversed masks;
    // comparing lowest set bits first does the same without reversal.
    while (a && b) {
      int la = lowest_vertex(a), lb = lowest_vertex(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
  return out;
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  return maximal_cliques(complement(g));
}

// All cliques (including the empty one) grouped by cardinality; index k
// holds the k-cliques. Used for face enumeration of flag complexes.
inline std::vector<std::vector<VertexSet>> cliques_by_size(const Graph& g) {
  std::vector<std::vector<VertexSet>> by_size(1, {VertexSet{0}});
  // Extend each clique only by common neighbors above its maximum vertex,
  // so every clique is produced exactly once.
  struct Item {
    VertexSet clique;
    VertexSet ext;
  };
  std::vector<Item> stack{{0, g.vertices()}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    for_each_vertex(it.ext, [&](int v) {
      VertexSet c = it.clique | bit(v);
      int k = popcount(c);
      if (static_cast<int>(by_size.size()) <= k) by_size.resize(k + 1);
      by_size[k].push_back(c);
      VertexSet later = it.ext & g.adj[v];
      later &= ~((bit(v) << 1) - 1);
      if (later) stack.push_back({c, later});
    });
  }
  for (auto& level : by_size) std::sort(level.begin(), level.end());
  return by_size;
}

// Maximum cardinality of minimal vertex covers: n minus the smallest
// maximal independent set (computed exhaustively, never by greedy).
inline int bight(const Graph& g) {
  int smallest = g.n;
  for (VertexSet s : maximal_independent_sets(g))
    smallest = std::min(smallest, popcount(s));
  return g.n - smallest;
}

}  // namespace edgeideal
