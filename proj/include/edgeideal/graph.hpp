#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/vertexset.hpp"

namespace edgeideal {

// Finite simple graph on vertices 0..n-1, adjacency as per-vertex bitsets.
// Values are immutable after construction by convention: every operation
// below is a pure function returning fresh values.
struct Graph {
  int n = 0;
  std::vector<std::string> labels;  // unique, defaults to x1..xn
  std::vector<VertexSet> adj;       // symmetric, irreflexive

  Graph() = default;

  explicit Graph(int n_) : n(n_), adj(n_, 0) {
    if (n_ < 0 || n_ > kMaxVertices)
      throw std::out_of_range("graph order must be in 0..64");
    labels.reserve(n_);
    for (int i = 0; i < n_; ++i) labels.push_back("x" + std::to_string(i + 1));
  }

  Graph(int n_, const std::vector<std::pair<int, int>>& edges) : Graph(n_) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return contains(adj[u], v);
  }

  VertexSet vertices() const { return full_set(n); }

  int degree(int v) const {
    check_vertex(v);
    return popcount(adj[v]);
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += popcount(adj[v]);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for_each_vertex(adj[u] & ~((bit(u) << 1) - 1),
                      [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

inline Graph complement(const Graph& g) {
  Graph h(g.n);
  h.labels = g.labels;
  for (int v = 0; v < g.n; ++v) h.adj[v] = (g.vertices() & ~g.adj[v]) & ~bit(v);
  return h;
}

inline VertexSet open_neighborhood(const Graph& g, VertexSet f) {
  if (!subset_of(f, g.vertices()))
    throw std::out_of_range("vertex set not within graph");
  VertexSet nb = 0;
  for_each_vertex(f, [&](int v) { nb |= g.adj[v]; });
  return nb & ~f;
}

inline VertexSet closed_neighborhood(const Graph& g, VertexSet f) {
  return open_neighborhood(g, f) | f;
}

inline VertexSet closed_neighborhood(const Graph& g, int v) {
  g.check_vertex(v);
  return g.adj[v] | bit(v);
}

struct MaxDegree {
  int value = 0;
  VertexSet attaining = 0;  // all vertices of maximum degree
};

inline MaxDegree max_degree(const Graph& g) {
  MaxDegree md;
  for (int v = 0; v < g.n; ++v) {
    int d = popcount(g.adj[v]);
    if (d > md.value) {
      md.value = d;
      md.attaining = bit(v);
    } else if (d == md.value) {
      md.attaining |= bit(v);
    }
  }
  return md;
}

inline VertexSet isolated_vertices(const Graph& g) {
  VertexSet s = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.adj[v] == 0) s |= bit(v);
  return s;
}

// Induced subgraph keeping the original labels; vertices are re-indexed in
// increasing order of their old index.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!subset_of(keep, g.vertices()))
    throw std::out_of_range("vertex set not within graph");
  std::vector<int> old = members(keep);
  Graph h(static_cast<int>(old.size()));
  for (int i = 0; i < h.n; ++i) h.labels[i] = g.labels[old[i]];
  for (int i = 0; i < h.n; ++i)
    for (int j = i + 1; j < h.n; ++j)
      if (contains(g.adj[old[i]], old[j])) h.add_edge(i, j);
  return h;
}

inline Graph remove_vertices(const Graph& g, VertexSet drop) {
  return induced_subgraph(g, g.vertices() & ~drop);
}

// Connected component containing v, as a vertex mask.
inline VertexSet component_of(const Graph& g, int v) {
  g.check_vertex(v);
  VertexSet seen = bit(v);
  VertexSet frontier = bit(v);
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.adj[u]; });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet left = g.vertices();
  while (left) {
    VertexSet c = component_of(g, lowest_vertex(left));
    comps.push_back(c);
    left &= ~c;
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  return component_of(g, 0) == g.vertices();
}

inline bool is_complete(const Graph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.adj[v] != (g.vertices() & ~bit(v))) return false;
  return true;
}

// Returns an edge of g inside f, if any.
inline std::optional<std::pair<int, int>> edge_within(const Graph& g,
                                                      VertexSet f) {
  std::optional<std::pair<int, int>> hit;
  for_each_vertex(f, [&](int v) {
    if (hit) return;
    VertexSet later = g.adj[v] & f;
    later &= ~((bit(v) << 1) - 1);
    if (later) hit = std::make_pair(v, lowest_vertex(later));
  });
  return hit;
}

inline bool is_independent(const Graph& g, VertexSet f) {
  return !edge_within(g, f).has_value();
}

// F is maximal independent iff it is independent and N[F] = V(G).
inline bool is_maximal_independent(const Graph& g, VertexSet f) {
  return is_independent(g, f) && closed_neighborhood(g, f) == g.vertices();
}

// Peeling an ordered independent set: G_i is G_{i-1} with the closed
// neighborhood of v_i removed. Residual graphs are kept as vertex masks of
// the original graph so labels stay stable.
struct PeelingTrace {
  std::vector<int> order;             // v_1 .. v_r (original indices)
  std::vector<int> degrees;           // deg_{G_{i-1}}(v_i)
  std::vector<VertexSet> residuals;   // vertex sets of G_1 .. G_r
  VertexSet removed_neighborhoods = 0;  // N_G(F), disjoint union of steps
};

struct PeelResult {
  bool ok = false;
  PeelingTrace trace;
  std::pair<int, int> offending_edge{-1, -1};  // set when !ok
};

inline PeelResult peel(const Graph& g, const std::vector<int>& order) {
  PeelResult res;
  if (auto e = edge_within(g, set_of(order))) {
    res.offending_edge = *e;
    return res;
  }
  VertexSet live = g.vertices();
  for (int v : order) {
    g.check_vertex(v);
    if (!contains(live, v))
      throw std::invalid_argument("peel vertex not in residual graph");
    VertexSet open = g.adj[v] & live;
    res.trace.order.push_back(v);
    res.trace.degrees.push_back(popcount(open));
    res.trace.removed_neighborhoods |= open;
    live &= ~(open | bit(v));
    res.trace.residuals.push_back(live);
  }
  res.ok = true;
  return res;
}

}  // namespace edgeideal
