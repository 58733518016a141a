#pragma once

#include <algorithm>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

struct EdgeConnectivity {
  int value = 0;
  bool connected = true;  // false => value is 0 and meaningless
};

namespace detail {

// Max-flow with unit edge capacities (each undirected edge becomes two
// opposite arcs of capacity 1); BFS augmentation. Fine at n <= 64.
inline int unit_max_flow(const Graph& g, int s, int t) {
  std::vector<std::vector<int>> cap(g.n, std::vector<int>(g.n, 0));
  for (auto [u, v] : g.edges()) cap[u][v] = cap[v][u] = 1;
  int flow = 0;
  for (;;) {
    std::vector<int> parent(g.n, -1);
    parent[s] = s;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size() && parent[t] == -1; ++qi) {
      int u = queue[qi];
      for (int v = 0; v < g.n; ++v)
        if (cap[u][v] > 0 && parent[v] == -1) {
          parent[v] = u;
          queue.push_back(v);
        }
    }
    if (parent[t] == -1) return flow;
    for (int v = t; v != s; v = parent[v]) {
      --cap[parent[v]][v];
      ++cap[v][parent[v]];
    }
    ++flow;
  }
}

}  // namespace detail

// Global minimum edge cut. Complete graphs get n-1 by convention (no
// separating edge set exists in the strict sense); disconnected inputs are
// flagged and report 0.
inline EdgeConnectivity edge_connectivity(const Graph& g) {
  if (!is_connected(g)) return {0, false};
  if (g.n <= 1) return {std::max(0, g.n - 1), true};
  if (is_complete(g)) return {g.n - 1, true};
  int best = g.n;
  for (int t = 1; t < g.n; ++t)
    best = std::min(best, detail::unit_max_flow(g, 0, t));
  return {best, true};
}

}  // namespace edgeideal
