#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

// --- named families -----------------------------------------------------------
// Labeling is deterministic and documented so instances map to fixed indices.

// Two copies of K_r joined by a bridge. Index 0 ("x1") and index 1 ("x2")
// are the bridge endpoints; indices 2..r complete the first copy and
// r+1..2r-1 the second.
inline Graph barbell(int r) {
  if (r < 2) throw std::invalid_argument("barbell needs r >= 2");
  if (2 * r > kMaxVertices) throw std::invalid_argument("barbell too large");
  Graph g(2 * r);
  std::vector<int> a{0}, b{1};
  for (int i = 2; i <= r; ++i) a.push_back(i);
  for (int i = r + 1; i < 2 * r; ++i) b.push_back(i);
  auto clique = [&](const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
  };
  clique(a);
  clique(b);
  g.add_edge(0, 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Hub at index 0, cycle on 1..n-1.
inline Graph wheel(int n) {
  if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n - 1 ? 1 : i + 1);
  }
  return g;
}

// Complete graphs attached wholesale to a common vertex (index 0).
inline Graph star_complete(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("star_complete needs blocks");
  int n = 1;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("block sizes must be positive");
    n += s;
  }
  if (n > kMaxVertices) throw std::invalid_argument("star_complete too large");
  Graph g(n);
  int next = 1;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i) {
      g.add_edge(0, next + i);
      for (int j = i + 1; j < s; ++j) g.add_edge(next + i, next + j);
    }
    next += s;
  }
  return g;
}

// i_j pendant edges attached at vertex j of K_m (i non-decreasing). Leaves
// of vertex j take consecutive indices after the clique block.
inline Graph gmi(int m, const std::vector<int>& attach) {
  if (m < 1 || static_cast<int>(attach.size()) != m)
    throw std::invalid_argument("gmi needs one attachment count per clique vertex");
  for (size_t j = 0; j + 1 < attach.size(); ++j)
    if (attach[j] > attach[j + 1])
      throw std::invalid_argument("attachment counts must be non-decreasing");
  int n = m;
  for (int c : attach) {
    if (c < 0) throw std::invalid_argument("attachment counts must be >= 0");
    n += c;
  }
  if (n > kMaxVertices) throw std::invalid_argument("gmi too large");
  Graph g(n);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  int next = m;
  for (int j = 0; j < m; ++j)
    for (int c = 0; c < attach[j]; ++c) g.add_edge(j, next++);
  return g;
}

inline Graph gmr(int m, int r) {
  if (r < 0) throw std::invalid_argument("gmr needs r >= 0");
  return gmi(m, std::vector<int>(m, r));
}

// --- canonical form and isomorphism -------------------------------------------

namespace detail {

// Invariant vertex coloring: degrees refined by sorted neighbor colors.
inline std::vector<int> refined_colors(const Graph& g) {
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < g.n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> keys(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> nb;
      for_each_vertex(g.adj[v], [&](int u) { nb.push_back(color[u]); });
      std::sort(nb.begin(), nb.end());
      nb.push_back(color[v]);
      keys[v] = {std::move(nb), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(g.n);
    int c = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (i && sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct CanonSearch {
  const Graph* g;
  std::vector<std::vector<int>> slots;  // position -> candidate vertices
  std::vector<int> assign;              // position -> vertex
  std::vector<std::uint64_t> used;      // bitmask of used vertices (single word)
  std::vector<std::uint64_t> best;      // lower-triangle rows
  std::vector<std::uint64_t> cur;
  bool have_best = false;

  void search(int pos, bool tight) {
    int n = g->n;
    if (pos == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int v : slots[pos]) {
      if (used[0] & bit(v)) continue;
      std::uint64_t row = 0;
      for (int j = 0; j < pos; ++j)
        if (contains(g->adj[v], assign[j])) row |= std::uint64_t{1} << j;
      bool t = tight;
      if (have_best && t) {
        if (row > best[pos]) continue;
        if (row < best[pos]) t = false;
      }
      assign[pos] = v;
      cur[pos] = row;
      used[0] |= bit(v);
      search(pos + 1, t);
      used[0] &= ~bit(v);
    }
  }
};

}  // namespace detail

// Canonical adjacency encoding: the lexicographically smallest sequence of
// lower-triangle rows over all vertex orderings compatible with the refined
// color classes. Equal encodings <=> isomorphic graphs.
inline std::vector<std::uint64_t> canonical_form(const Graph& g) {
  if (g.n == 0) return {};
  std::vector<int> color = detail::refined_colors(g);
  // Positions take color classes in increasing class id; class ids are
  // already invariant under isomorphism.
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[a] < color[b]; });
  detail::CanonSearch cs;
  cs.g = &g;
  cs.slots.resize(g.n);
  for (int pos = 0; pos < g.n; ++pos) {
    for (int v : order)
      if (color[v] == color[order[pos]]) cs.slots[pos].push_back(v);
  }
  cs.assign.resize(g.n);
  cs.cur.resize(g.n);
  cs.used = {0};
  cs.search(0, true);
  return cs.best;
}

inline std::string canonical_key(const Graph& g) {
  std::vector<std::uint64_t> c = canonical_form(g);
  std::string s(1, static_cast<char>(g.n));
  s.append(reinterpret_cast<const char*>(c.data()), c.size() * sizeof(c[0]));
  return s;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.n == b.n && canonical_form(a) == canonical_form(b);
}

// --- (d_1,...,d_q)-tree builders ----------------------------------------------

namespace detail {

inline void validate_dq_sequence(const std::vector<int>& seq) {
  if (seq.empty()) throw std::invalid_argument("empty size sequence");
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1) throw std::invalid_argument("sizes must be positive");
    if (i && seq[i] > seq[i - 1])
      throw std::invalid_argument("size sequence must be non-increasing");
  }
  int n = seq[0] + static_cast<int>(seq.size()) - 1;
  if (n > kMaxVertices) throw std::invalid_argument("tree too large");
}

inline std::vector<VertexSet> k_cliques(const Graph& g, int k, VertexSet within) {
  std::vector<VertexSet> out;
  for_each_k_subset(within, k, [&](VertexSet s) {
    bool clique = true;
    for_each_vertex(s, [&](int v) {
      if (!subset_of(s & ~bit(v), g.adj[v])) clique = false;
    });
    if (clique) out.push_back(s);
  });
  return out;
}

}  // namespace detail

// Builds a random member: start from the clique on the first d_1 indices,
// then glue each K_{d_i} along a uniformly chosen (d_i - 1)-clique, the new
// vertex taking the next index.
inline Graph dq_tree_random(const std::vector<int>& seq, std::uint64_t seed) {
  detail::validate_dq_sequence(seq);
  int n = seq[0] + static_cast<int>(seq.size()) - 1;
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int i = 0; i < seq[0]; ++i)
    for (int j = i + 1; j < seq[0]; ++j) g.add_edge(i, j);
  int next = seq[0];
  for (size_t step = 1; step < seq.size(); ++step) {
    VertexSet built = full_set(next);
    std::vector<VertexSet> glues = detail::k_cliques(g, seq[step] - 1, built);
    std::uniform_int_distribution<size_t> pick(0, glues.size() - 1);
    VertexSet glue = glues[pick(rng)];
    for_each_vertex(glue, [&](int v) { g.add_edge(v, next); });
    ++next;
  }
  return g;
}

// All members for the sequence, deduplicated up to isomorphism.
inline std::vector<Graph> dq_tree_exhaustive(const std::vector<int>& seq) {
  detail::validate_dq_sequence(seq);
  std::vector<Graph> level;
  Graph start(seq[0]);
  for (int i = 0; i < seq[0]; ++i)
    for (int j = i + 1; j < seq[0]; ++j) start.add_edge(i, j);
  level.push_back(start);
  for (size_t step = 1; step < seq.size(); ++step) {
    std::vector<Graph> next_level;
    std::unordered_set<std::string> seen;
    for (const Graph& h : level) {
      VertexSet built = full_set(h.n);
      for (VertexSet glue : detail::k_cliques(h, seq[step] - 1, built)) {
        Graph g(h.n + 1);
        for (auto [u, v] : h.edges()) g.add_edge(u, v);
        for_each_vertex(glue, [&](int v) { g.add_edge(v, h.n); });
        if (seen.insert(canonical_key(g)).second) next_level.push_back(g);
      }
    }
    level = std::move(next_level);
  }
  return level;
}

// --- exhaustive corpora ---------------------------------------------------------

// Streams all connected labeled graphs on n vertices (callback per graph).
template <typename F>
inline void enumerate_connected_graphs(int n, F f) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration needs 1 <= n <= 8");
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Graph g(n);
    for (int b = 0; b < m; ++b)
      if ((mask >> b) & 1) g.add_edge(pos[b].first, pos[b].second);
    if (is_connected(g)) f(g);
  }
}

// All graphs on n vertices up to isomorphism, built by extending the
// (n-1)-vertex representatives with one vertex and every neighborhood.
inline std::vector<Graph> graphs_up_to_iso(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("corpus needs 1 <= n <= 8");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next_level;
    std::unordered_set<std::string> seen;
    for (const Graph& h : level) {
      for_each_subset(full_set(h.n), [&](VertexSet nb) {
        Graph g(k);
        for (auto [u, v] : h.edges()) g.add_edge(u, v);
        for_each_vertex(nb, [&](int v) { g.add_edge(v, k - 1); });
        if (seen.insert(canonical_key(g)).second) next_level.push_back(g);
      });
    }
    level = std::move(next_level);
  }
  return level;
}

inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  for (Graph& g : graphs_up_to_iso(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace edgeideal
