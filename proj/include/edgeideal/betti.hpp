#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "edgeideal/chordal.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/hilbert.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/parallel.hpp"

namespace edgeideal {

// Graded Betti numbers of K[Δ_G] = R/I(G). β_{0,0} = 1 is implicit; stored
// entries have 1 <= i <= n, i < j <= n.
struct BettiTable {
  int n = 0;
  std::map<std::pair<int, int>, std::int64_t> entries;  // (i, j) -> rank

  std::int64_t beta(int i, int j) const {
    if (i == 0 && j == 0) return 1;
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  // Length of the minimal free resolution.
  int pdim() const {
    int p = 0;
    for (const auto& [ij, r] : entries) p = std::max(p, ij.first);
    return p;
  }

  // Castelnuovo-Mumford regularity; 0 for the zero ideal.
  int regularity() const {
    int reg = 0;
    for (const auto& [ij, r] : entries)
      reg = std::max(reg, ij.second - ij.first);
    return reg;
  }

  int depth() const { return n - pdim(); }  // Auslander-Buchsbaum

  void merge(const BettiTable& o) {
    for (const auto& [ij, r] : o.entries) entries[ij] += r;
  }
};

struct size_error : std::domain_error {
  using std::domain_error::domain_error;
};

constexpr int kDefaultBettiCap = 16;

// Hochster's formula: β_{i,j}(K[Δ_G]) = Σ_{|W|=j} rank H~_{j-i-1}(Δ_G|_W).
// Subsets are scanned in population-count order; each restriction is the
// independence complex of the induced subgraph, computed on the complement
// side (see independence_restriction_homology).
inline BettiTable betti_table(const Graph& g, FieldSpec field = {},
                              int cap = kDefaultBettiCap, int jobs = 1) {
  if (g.n > cap)
    throw size_error("graph order " + std::to_string(g.n) +
                     " exceeds Betti cap " + std::to_string(cap));
  BettiTable table;
  table.n = g.n;
  const std::vector<VertexSet> cadj = complement(g).adj;
  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, BettiTable& acc) {
    for (std::uint64_t w = lo; w < hi; ++w) {
      if (w == 0) continue;
      HomologyRanks hr = independence_restriction_homology(cadj, w, field);
      if (hr.all_zero()) continue;
      int j = popcount(w);
      for (int k = -1; k + 1 < static_cast<int>(hr.by_dim.size()); ++k) {
        int r = hr.rank(k);
        if (r > 0) acc.entries[{j - 1 - k, j}] += r;
      }
    }
  };
  std::uint64_t total = g.n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n);
  if (jobs <= 1) {
    // Population-count order (degree by degree) in the serial path.
    for (int j = 1; j <= g.n; ++j)
      for_each_k_subset(g.vertices(), j, [&](VertexSet w) {
        std::uint64_t v = w;
        scan_range(v, v + 1, table);
      });
    return table;
  }
  return parallel_reduce<BettiTable>(
      0, total, jobs, 4096, table, scan_range,
      [](BettiTable& a, const BettiTable& b) { a.merge(b); });
}

inline int pdim(const Graph& g, FieldSpec field = {},
                int cap = kDefaultBettiCap) {
  return betti_table(g, field, cap).pdim();
}

inline int regularity(const Graph& g, FieldSpec field = {},
                      int cap = kDefaultBettiCap) {
  return betti_table(g, field, cap).regularity();
}

inline int depth(const Graph& g, FieldSpec field = {},
                 int cap = kDefaultBettiCap) {
  return betti_table(g, field, cap).depth();
}

// Residual of the inequality
//   deg P - reg  <=  dim - depth
// i.e. (dim - depth) - (deg P - reg). Non-negative always; zero whenever G
// is co-chordal (2-linear resolution).
inline std::int64_t eq1_residual(const BettiTable& t, const HilbertData& hd) {
  return (hd.krull_dim - t.depth()) - (hd.h_degree - t.regularity());
}

inline std::int64_t check_eq1(const Graph& g, FieldSpec field = {},
                              int cap = kDefaultBettiCap) {
  return eq1_residual(betti_table(g, field, cap), hilbert_data(g));
}

// 2-linear resolution: every stored entry sits at j = i + 1. The zero ideal
// (edgeless graph) counts as 2-linear, matching the co-chordal criterion.
inline bool has_2linear_resolution(const BettiTable& t) {
  for (const auto& [ij, r] : t.entries)
    if (ij.second != ij.first + 1) return false;
  return true;
}

inline bool has_2linear_resolution(const Graph& g, FieldSpec field = {},
                                   int cap = kDefaultBettiCap) {
  return has_2linear_resolution(betti_table(g, field, cap));
}

inline bool is_co_chordal(const Graph& g) {
  return is_chordal(complement(g)).chordal;
}

}  // namespace edgeideal
