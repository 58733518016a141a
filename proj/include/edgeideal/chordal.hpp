#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

// Chordality with a checkable certificate either way: a perfect elimination
// ordering when chordal, an induced cycle of length >= 4 when not.
struct ChordalityCertificate {
  bool chordal = false;
  std::vector<int> elimination_order;  // perfect elimination order when chordal
  std::vector<int> induced_cycle;      // chordless cycle (length >= 4) when not
};

// Maximum cardinality search; returns vertices in elimination order
// (reverse of the visit order).
inline std::vector<int> mcs_elimination_order(const Graph& g) {
  std::vector<int> weight(g.n, 0);
  std::vector<int> visit;
  VertexSet unvisited = g.vertices();
  while (unvisited) {
    int best = -1, bw = -1;
    for_each_vertex(unvisited, [&](int v) {
      if (weight[v] > bw) {
        bw = weight[v];
        best = v;
      }
    });
    visit.push_back(best);
    unvisited &= ~bit(best);
    for_each_vertex(g.adj[best] & unvisited, [&](int u) { ++weight[u]; });
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

// Every vertex's later neighborhood must be a clique.
inline bool verify_elimination_order(const Graph& g,
                                     const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n) return false;
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  for (int i = 0; i < g.n; ++i) {
    VertexSet later = 0;
    for_each_vertex(g.adj[order[i]], [&](int u) {
      if (pos[u] > i) later |= bit(u);
    });
    if (later == 0) continue;
    // later \ {earliest} must lie in N(earliest).
    int earliest = -1, ep = g.n + 1;
    for_each_vertex(later, [&](int w) {
      if (pos[w] < ep) {
        ep = pos[w];
        earliest = w;
      }
    });
    if ((later & ~bit(earliest) & ~g.adj[earliest]) != 0) return false;
  }
  return true;
}

// Finds some induced cycle of length >= 4 in a non-chordal graph: take
// non-adjacent u,w with a common neighbor v, then a shortest u-w path
// avoiding N[v]\{u,w}. Shortest paths are induced, and no path vertex other
// than u,w sees v, so v + path is a chordless cycle.
inline std::optional<std::vector<int>> find_induced_long_cycle(const Graph& g) {
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> nb = members(g.adj[v]);
    for (size_t a = 0; a < nb.size(); ++a) {
      for (size_t b = a + 1; b < nb.size(); ++b) {
        int u = nb[a], w = nb[b];
        if (g.has_edge(u, w)) continue;
        VertexSet allowed =
            g.vertices() & ~bit(v) & ~(g.adj[v] & ~bit(u) & ~bit(w));
        // BFS from u to w inside `allowed`.
        std::vector<int> parent(g.n, -1);
        VertexSet seen = bit(u);
        std::vector<int> queue{u};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
          int x = queue[qi];
          bool done = false;
          for_each_vertex(g.adj[x] & allowed & ~seen, [&](int y) {
            if (done) return;
            parent[y] = x;
            seen |= bit(y);
            queue.push_back(y);
            if (y == w) done = true;
          });
          if (done) break;
        }
        if (!contains(seen, w)) continue;
        std::vector<int> path;
        for (int x = w; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());  // u .. w
        path.push_back(v);
        return path;  // cycle u .. w v, length >= 4
      }
    }
  }
  return std::nullopt;
}

inline bool cycle_is_chordless(const Graph& g, const std::vector<int>& cyc) {
  int k = static_cast<int>(cyc.size());
  if (k < 4) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
    }
  return true;
}

inline ChordalityCertificate is_chordal(const Graph& g) {
  ChordalityCertificate cert;
  std::vector<int> order = mcs_elimination_order(g);
  if (verify_elimination_order(g, order)) {
    cert.chordal = true;
    cert.elimination_order = std::move(order);
    return cert;
  }
  auto cyc = find_induced_long_cycle(g);
  if (!cyc) throw std::logic_error("MCS rejected but no induced cycle found");
  cert.chordal = false;
  cert.induced_cycle = std::move(*cyc);
  return cert;
}

}  // namespace edgeideal
