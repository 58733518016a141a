#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/chordal.hpp"
#include "edgeideal/cliques.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/decompose.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

// --- max-process -------------------------------------------------------------

// Tie-break policy: lowest vertex index by default; the first pick can be
// forced to any maximum-degree vertex (the residual graphs depend on the
// order, so examples fix their first choice); exhaustive branching is
// exposed separately.
struct TieBreak {
  int forced_first = -1;  // -1: none

  static TieBreak lowest_index() { return {}; }
  static TieBreak first_choice(int v) { return {v}; }
};

struct MaxProcessTrace {
  std::vector<int> order;            // v_1 .. v_r
  std::vector<int> degrees;          // deg_{G_{i-1}}(v_i), non-increasing... not necessarily
  std::vector<VertexSet> residuals;  // G_1 .. G_r as vertex masks
  bool maximal = false;              // G_r = ∅ (always reached by running to exhaustion)
};

// Greedy procedure: repeatedly pick a maximum-degree vertex of the residual
// graph and delete its closed neighborhood.
inline MaxProcessTrace max_process(const Graph& g,
                                   TieBreak tie = TieBreak::lowest_index()) {
  MaxProcessTrace t;
  VertexSet live = g.vertices();
  bool first = true;
  while (live) {
    int pick = -1, best = -1;
    for_each_vertex(live, [&](int v) {
      int d = popcount(g.adj[v] & live);
      if (d > best) {
        best = d;
        pick = v;
      }
    });
    if (first && tie.forced_first >= 0) {
      g.check_vertex(tie.forced_first);
      int fd = popcount(g.adj[tie.forced_first] & live);
      if (fd != best)
        throw std::invalid_argument(
            "forced first choice is not of maximum degree");
      pick = tie.forced_first;
      best = fd;
    }
    first = false;
    t.order.push_back(pick);
    t.degrees.push_back(best);
    live &= ~(g.adj[pick] | bit(pick));
    t.residuals.push_back(live);
  }
  t.maximal = true;  // the residual is empty by construction
  return t;
}

// All traces over every maximum-degree tie at every step.
inline std::vector<MaxProcessTrace> max_process_all_branches(const Graph& g) {
  std::vector<MaxProcessTrace> out;
  MaxProcessTrace cur;
  auto rec = [&](auto&& self, VertexSet live) -> void {
    if (!live) {
      cur.maximal = true;
      out.push_back(cur);
      cur.maximal = false;
      return;
    }
    int best = -1;
    for_each_vertex(live, [&](int v) {
      best = std::max(best, popcount(g.adj[v] & live));
    });
    for_each_vertex(live, [&](int v) {
      if (popcount(g.adj[v] & live) != best) return;
      VertexSet next = live & ~(g.adj[v] | bit(v));
      cur.order.push_back(v);
      cur.degrees.push_back(best);
      cur.residuals.push_back(next);
      self(self, next);
      cur.order.pop_back();
      cur.degrees.pop_back();
      cur.residuals.pop_back();
    });
  };
  rec(rec, g.vertices());
  return out;
}

// --- full vertices and necessary screens -------------------------------------

// A vertex with N[x] = V(G), if any (lowest index).
inline std::optional<int> has_full_vertex(const Graph& g) {
  for (int v = 0; v < g.n; ++v)
    if ((g.adj[v] | bit(v)) == g.vertices()) return v;
  return std::nullopt;
}

// Necessary conditions for the complement of G to be a (d_1,...,d_q)-tree:
//  (a) every maximum-degree vertex of G is a free and shedding vertex of Δ_G;
//  (b) all maximum-degree vertices of G are pairwise adjacent.
// Both require q >= 2, i.e. G must have at least one edge; for edgeless G
// the screens are vacuous and `applicable` is false.
struct ScreenReport {
  bool applicable = false;
  bool free_and_shedding_ok = true;
  bool max_degree_adjacent_ok = true;
  std::vector<int> not_free;       // max-degree vertices failing freeness
  std::vector<int> not_shedding;   // max-degree vertices failing shedding
  std::vector<std::pair<int, int>> non_adjacent_pairs;

  bool pass() const {
    return !applicable || (free_and_shedding_ok && max_degree_adjacent_ok);
  }
};

inline ScreenReport necessary_screens(const Graph& g) {
  ScreenReport rep;
  if (g.edge_count() == 0) return rep;
  rep.applicable = true;
  SimplicialComplex dg = independence_complex(g);
  std::vector<int> frees = free_vertices(dg);
  VertexSet free_set = set_of(frees);
  MaxDegree md = max_degree(g);
  std::vector<int> tops = members(md.attaining);
  for (int v : tops) {
    if (!contains(free_set, v)) {
      rep.not_free.push_back(v);
      rep.free_and_shedding_ok = false;
    }
    if (!is_shedding_vertex(dg, v)) {
      rep.not_shedding.push_back(v);
      rep.free_and_shedding_ok = false;
    }
  }
  for (size_t a = 0; a < tops.size(); ++a)
    for (size_t b = a + 1; b < tops.size(); ++b)
      if (!g.has_edge(tops[a], tops[b])) {
        rep.non_adjacent_pairs.emplace_back(tops[a], tops[b]);
        rep.max_degree_adjacent_ok = false;
      }
  return rep;
}

// --- (d_1,...,d_q)-tree recognition -------------------------------------------

// Accepted certificates replay: starting from the clique on F_1 and gluing
// the clique on F_i along F_i \ {x_i} (contained in the witnessed earlier
// facet) rebuilds the graph edge-for-edge.
struct TreeCertificate {
  bool accepted = false;

  // Accepted: facets in build order with glue witnesses.
  std::vector<VertexSet> facets;  // F_1 .. F_q
  std::vector<int> sizes;         // d_1 >= ... >= d_q
  std::vector<int> new_vertex;    // x_i (index into graph), x_1 = -1
  std::vector<int> host;          // index < i of a facet containing F_i \ {x_i}; -1 for i = 1

  enum class Reason {
    none,
    empty_graph,
    not_chordal,
    facet_count_vertex_count_mismatch,
    necessary_condition_failure,
    no_valid_peeling,
  };
  Reason reason = Reason::none;
  std::string detail;
  std::vector<int> cycle_witness;  // for not_chordal
};

inline const char* to_string(TreeCertificate::Reason r) {
  switch (r) {
    case TreeCertificate::Reason::none: return "none";
    case TreeCertificate::Reason::empty_graph: return "empty-graph";
    case TreeCertificate::Reason::not_chordal: return "not-chordal";
    case TreeCertificate::Reason::facet_count_vertex_count_mismatch:
      return "facet-count-vertex-count-mismatch";
    case TreeCertificate::Reason::necessary_condition_failure:
      return "necessary-condition-failure";
    case TreeCertificate::Reason::no_valid_peeling: return "no-valid-peeling";
  }
  return "?";
}

// Rebuilds the graph from a certificate and checks every claimed property.
inline bool replay_certificate(const Graph& g, const TreeCertificate& cert) {
  if (!cert.accepted) return false;
  size_t q = cert.facets.size();
  if (q == 0 || cert.sizes.size() != q || cert.new_vertex.size() != q ||
      cert.host.size() != q)
    return false;
  for (size_t i = 0; i < q; ++i) {
    if (popcount(cert.facets[i]) != cert.sizes[i]) return false;
    if (i && cert.sizes[i] > cert.sizes[i - 1]) return false;  // non-increasing
  }
  if (g.n != cert.sizes[0] + static_cast<int>(q) - 1) return false;
  Graph rebuilt(g.n);
  VertexSet placed = cert.facets[0];
  auto add_clique = [&](VertexSet f) {
    std::vector<int> vs = members(f);
    for (size_t a = 0; a < vs.size(); ++a)
      for (size_t b = a + 1; b < vs.size(); ++b)
        if (!rebuilt.has_edge(vs[a], vs[b])) rebuilt.add_edge(vs[a], vs[b]);
  };
  add_clique(cert.facets[0]);
  for (size_t i = 1; i < q; ++i) {
    int x = cert.new_vertex[i];
    int h = cert.host[i];
    if (x < 0 || x >= g.n || contains(placed, x)) return false;
    if (h < 0 || h >= static_cast<int>(i)) return false;
    VertexSet glue = cert.facets[i] & ~bit(x);
    if (!contains(cert.facets[i], x)) return false;
    if (!subset_of(glue, cert.facets[h])) return false;
    if (!subset_of(glue, placed)) return false;
    add_clique(cert.facets[i]);
    placed |= bit(x);
  }
  return placed == g.vertices() && rebuilt == g;
}

namespace detail {

struct PeelState {
  const std::vector<VertexSet>* facets;
  std::vector<int> build_order;  // filled in reverse
  std::unordered_set<std::uint64_t> dead;
};

// Reverse peeling: repeatedly remove a facet of minimum size possessing a
// free vertex x with F \ {x} inside another remaining facet. Build order is
// non-increasing in facet size, so peeling must be non-decreasing; among
// minimum-size facets the choice can matter, hence backtracking with failed
// facet-sets memoized.
inline bool peel_search(PeelState& st, std::uint64_t remaining,
                        VertexSet live) {
  const auto& facets = *st.facets;
  int count = std::popcount(remaining);
  if (count == 1) {
    int last = std::countr_zero(remaining);
    if (facets[last] != live) return false;
    st.build_order.push_back(last);
    return true;
  }
  if (st.dead.count(remaining)) return false;
  int min_size = kMaxVertices + 1;
  for (std::uint64_t m = remaining; m; m &= m - 1)
    min_size = std::min(min_size, popcount(facets[std::countr_zero(m)]));
  for (std::uint64_t m = remaining; m; m &= m - 1) {
    int fi = std::countr_zero(m);
    VertexSet f = facets[fi];
    if (popcount(f) != min_size) continue;
    VertexSet others = 0;
    for (std::uint64_t mm = remaining & ~(std::uint64_t{1} << fi); mm;
         mm &= mm - 1)
      others |= facets[std::countr_zero(mm)];
    VertexSet free = f & ~others;
    bool found = false;
    for_each_vertex(free, [&](int x) {
      if (found) return;
      VertexSet glue = f & ~bit(x);
      for (std::uint64_t mm = remaining & ~(std::uint64_t{1} << fi); mm;
           mm &= mm - 1) {
        if (subset_of(glue, facets[std::countr_zero(mm)])) {
          found = true;
          return;
        }
      }
    });
    if (!found) continue;
    if (peel_search(st, remaining & ~(std::uint64_t{1} << fi),
                    live & ~(f & ~others))) {
      st.build_order.push_back(fi);
      return true;
    }
  }
  st.dead.insert(remaining);
  return false;
}

}  // namespace detail

inline TreeCertificate recognize_dq_tree(const Graph& g) {
  TreeCertificate cert;
  if (g.n == 0) {
    cert.reason = TreeCertificate::Reason::empty_graph;
    cert.detail = "no vertices";
    return cert;
  }
  if (is_complete(g)) {
    cert.accepted = true;
    cert.facets = {g.vertices()};
    cert.sizes = {g.n};
    cert.new_vertex = {-1};
    cert.host = {-1};
    return cert;
  }
  ChordalityCertificate ch = is_chordal(g);
  if (!ch.chordal) {
    cert.reason = TreeCertificate::Reason::not_chordal;
    cert.cycle_witness = ch.induced_cycle;
    cert.detail = "induced cycle of length " +
                  std::to_string(ch.induced_cycle.size());
    return cert;
  }
  // Necessary conditions (pruning only, never acceptance): on the
  // complement side, maximum-degree vertices must be free and shedding in
  // its independence complex and pairwise adjacent.
  ScreenReport screens = necessary_screens(complement(g));
  if (!screens.pass()) {
    cert.reason = TreeCertificate::Reason::necessary_condition_failure;
    if (!screens.free_and_shedding_ok)
      cert.detail = "max-degree vertex of the complement is not free/shedding";
    else
      cert.detail = "non-adjacent max-degree vertices in the complement";
    return cert;
  }
  std::vector<VertexSet> facets = maximal_cliques(g);
  size_t q = facets.size();
  int d1 = 0;
  for (VertexSet f : facets) d1 = std::max(d1, popcount(f));
  if (g.n != d1 + static_cast<int>(q) - 1) {
    cert.reason = TreeCertificate::Reason::facet_count_vertex_count_mismatch;
    cert.detail = "n = " + std::to_string(g.n) + " but d1 + q - 1 = " +
                  std::to_string(d1 + static_cast<int>(q) - 1);
    return cert;
  }
  if (q > 63) {  // peel-state bitmask bound; cannot happen for n <= 64
    cert.reason = TreeCertificate::Reason::no_valid_peeling;
    cert.detail = "too many facets";
    return cert;
  }
  detail::PeelState st;
  st.facets = &facets;
  if (!detail::peel_search(st, (std::uint64_t{1} << q) - 1, g.vertices())) {
    cert.reason = TreeCertificate::Reason::no_valid_peeling;
    cert.detail = "no facet build order exists";
    return cert;
  }
  // st.build_order holds facet indices in build order (pushed in reverse).
  cert.accepted = true;
  VertexSet placed = 0;
  for (size_t i = 0; i < st.build_order.size(); ++i) {
    VertexSet f = facets[st.build_order[i]];
    cert.facets.push_back(f);
    cert.sizes.push_back(popcount(f));
    if (i == 0) {
      cert.new_vertex.push_back(-1);
      cert.host.push_back(-1);
    } else {
      VertexSet fresh = f & ~placed;
      cert.new_vertex.push_back(lowest_vertex(fresh));
      int host = -1;
      VertexSet glue = f & ~fresh;
      for (size_t h = 0; h < i; ++h)
        if (subset_of(glue, cert.facets[h])) {
          host = static_cast<int>(h);
          break;
        }
      cert.host.push_back(host);
    }
    placed |= f;
  }
  if (!replay_certificate(g, cert))
    throw std::logic_error("accepted certificate failed replay");
  return cert;
}

// --- theorem-backed fast paths ------------------------------------------------

struct FastPdim {
  int value = 0;
  // Which rule fired: "full-vertex", "dq-tree", "dq-tree-component",
  // "bight", or "hochster" (fallback).
  std::string method;
};

// Dispatch:
//  (1) a full vertex forces pdim = n - 1;
//  (2) G connected with complement a recognized (d_1,...,d_q)-tree:
//      pdim = max degree;
//  (3) G = isolated vertices + one connected component whose complement is
//      recognized: pdim = max degree of the component (isolated vertices
//      contribute free ring variables and leave pdim unchanged);
//  (4) recognized complement without the shapes above: pdim = bight;
//  (5) otherwise exact Hochster computation.
inline std::optional<FastPdim> pdim_fast_rules(const Graph& g) {
  if (g.n == 0) return FastPdim{0, "full-vertex"};
  if (has_full_vertex(g)) return FastPdim{g.n - 1, "full-vertex"};
  bool connected = is_connected(g);
  if (connected && recognize_dq_tree(complement(g)).accepted)
    return FastPdim{max_degree(g).value, "dq-tree"};
  if (!connected) {
    VertexSet iso = isolated_vertices(g);
    VertexSet rest = g.vertices() & ~iso;
    if (iso != 0 && rest != 0) {
      Graph comp = induced_subgraph(g, rest);
      if (is_connected(comp) && recognize_dq_tree(complement(comp)).accepted)
        return FastPdim{max_degree(comp).value, "dq-tree-component"};
    }
  }
  if (recognize_dq_tree(complement(g)).accepted)
    return FastPdim{bight(g), "bight"};
  return std::nullopt;
}

inline FastPdim pdim_fast(const Graph& g, FieldSpec field = {},
                          int cap = kDefaultBettiCap) {
  if (auto fast = pdim_fast_rules(g)) return *fast;
  return {betti_table(g, field, cap).pdim(), "hochster"};
}

// depth = d_q whenever the complement is a recognized (d_1,...,d_q)-tree.
inline std::optional<int> depth_fast(const Graph& g) {
  TreeCertificate cert = recognize_dq_tree(complement(g));
  if (!cert.accepted) return std::nullopt;
  return cert.sizes.back();
}

}  // namespace edgeideal
