#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/complex.hpp"

namespace edgeideal {

// --- shedding vertices and vertex decomposability --------------------------

// v is a shedding vertex iff no facet of link(v) is a facet of del(v).
inline bool is_shedding_vertex(const SimplicialComplex& d, int v) {
  if (!contains(d.vertex_set(), v)) return false;
  SimplicialComplex lk = link(d, bit(v));
  SimplicialComplex dl = deletion(d, bit(v));
  for (VertexSet f : lk.facets)
    if (dl.is_facet(f)) return false;
  return true;
}

namespace detail {

// Deterministic memo key: facets sorted lexicographically by member lists,
// vertices relabeled by first occurrence, re-sorted. Complexes mapping to
// the same key are isomorphic, so sharing the cached answer is sound.
inline std::string vd_memo_key(const SimplicialComplex& d) {
  auto lex_less = [](VertexSet a, VertexSet b) {
    while (a && b) {
      int la = lowest_vertex(a), lb = lowest_vertex(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  };
  std::vector<VertexSet> fac = d.facets;
  std::unordered_map<int, int> relabel;
  for (int pass = 0; pass < 2; ++pass) {
    std::sort(fac.begin(), fac.end(), lex_less);
    relabel.clear();
    int next = 0;
    for (VertexSet f : fac)
      for_each_vertex(f, [&](int v) {
        if (relabel.emplace(v, next).second) ++next;
      });
    for (VertexSet& f : fac) {
      VertexSet nf = 0;
      for_each_vertex(f, [&](int v) { nf |= bit(relabel[v]); });
      f = nf;
    }
  }
  std::sort(fac.begin(), fac.end());
  std::string key;
  key.reserve(fac.size() * 9);
  for (VertexSet f : fac) {
    key.append(reinterpret_cast<const char*>(&f), sizeof f);
    key.push_back('|');
  }
  return key;
}

}  // namespace detail

// Node of a shedding-vertex tree; null children stand for base cases
// (simplexes, including the void and empty complex).
struct VdNode {
  int vertex = -1;
  std::shared_ptr<VdNode> del, link;
};

// Exhaustive vertex-decomposability search with memoization on canonical
// sub-complexes. One searcher per task; no shared state.
class VdSearcher {
 public:
  explicit VdSearcher(int vertex_cap = kDefaultBettiCap) : cap_(vertex_cap) {}

  bool decomposable(const SimplicialComplex& d) {
    if (popcount(d.vertex_set()) > cap_)
      throw size_error("vertex-decomposability cap exceeded");
    return vd(d);
  }

  // Shedding tree for a decomposable complex, nullopt otherwise.
  std::optional<std::shared_ptr<VdNode>> witness(const SimplicialComplex& d) {
    if (!decomposable(d)) return std::nullopt;
    return build(d);
  }

 private:
  bool vd(const SimplicialComplex& d) {
    if (d.is_simplex()) return true;
    std::string key = detail::vd_memo_key(d);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = false;
    for_each_vertex(d.vertex_set(), [&](int v) {
      if (ok) return;
      if (!is_shedding_vertex(d, v)) return;
      if (vd(deletion(d, bit(v))) && vd(link(d, bit(v)))) ok = true;
    });
    memo_[key] = ok;
    return ok;
  }

  std::shared_ptr<VdNode> build(const SimplicialComplex& d) {
    if (d.is_simplex()) return nullptr;
    std::shared_ptr<VdNode> node;
    for_each_vertex(d.vertex_set(), [&](int v) {
      if (node) return;
      if (!is_shedding_vertex(d, v)) return;
      SimplicialComplex dl = deletion(d, bit(v));
      SimplicialComplex lk = link(d, bit(v));
      if (vd(dl) && vd(lk)) {
        node = std::make_shared<VdNode>();
        node->vertex = v;
        node->del = build(dl);
        node->link = build(lk);
      }
    });
    return node;
  }

  int cap_;
  std::unordered_map<std::string, bool> memo_;
};

// Replays a shedding tree independently of the search that produced it.
inline bool verify_shedding_tree(const SimplicialComplex& d,
                                 const std::shared_ptr<VdNode>& node) {
  if (d.is_simplex()) return node == nullptr;
  if (!node) return false;
  if (!is_shedding_vertex(d, node->vertex)) return false;
  return verify_shedding_tree(deletion(d, bit(node->vertex)), node->del) &&
         verify_shedding_tree(link(d, bit(node->vertex)), node->link);
}

// --- shelling orders --------------------------------------------------------

// Björner-Wachs (non-pure) shelling: for all i < j there are v in F_j \ F_i
// and k < j with F_j \ F_k = {v}.
inline bool is_shelling_order(const std::vector<VertexSet>& order) {
  for (size_t j = 1; j < order.size(); ++j) {
    VertexSet singles = 0;
    for (size_t k = 0; k < j; ++k) {
      VertexSet diff = order[j] & ~order[k];
      if (popcount(diff) == 1) singles |= diff;
    }
    for (size_t i = 0; i < j; ++i)
      if (((order[j] & ~order[i]) & singles) == 0) return false;
  }
  return true;
}

// --- leaf orders (quasi-forests) --------------------------------------------

// F is a leaf of the complex with the given facets: some other facet M
// contains every intersection N ∩ F.
inline bool is_leaf(const std::vector<VertexSet>& facets, VertexSet f) {
  if (facets.size() <= 1) return true;
  for (VertexSet m : facets) {
    if (m == f) continue;
    bool branch = true;
    for (VertexSet nb : facets) {
      if (nb == f) continue;
      if (!subset_of(nb & f, m & f)) {
        branch = false;
        break;
      }
    }
    if (branch) return true;
  }
  return false;
}

inline bool is_leaf_order(const std::vector<VertexSet>& order) {
  std::vector<VertexSet> prefix;
  for (VertexSet f : order) {
    prefix.push_back(f);
    if (!is_leaf(prefix, f)) return false;
  }
  return true;
}

// --- searched witnesses ------------------------------------------------------

struct DecompositionWitness {
  enum class Kind { vertex_decomposable, shellable, quasi_forest };
  Kind kind;
  bool holds = false;
  std::vector<VertexSet> order;     // shelling / leaf order when holds
  std::shared_ptr<VdNode> tree;     // shedding tree when kind is VD
};

namespace detail {

// Backtracking order search; feasibility of a prefix depends only on its
// facet set, so failed sets are memoized as bitmasks over facet indices.
template <typename Feasible>
inline bool order_search(const std::vector<VertexSet>& facets,
                         std::vector<int>& order, std::uint64_t used,
                         std::unordered_set<std::uint64_t>& dead,
                         Feasible feasible) {
  size_t q = facets.size();
  if (order.size() == q) return true;
  if (dead.count(used)) return false;
  for (size_t c = 0; c < q; ++c) {
    if (used & (std::uint64_t{1} << c)) continue;
    if (!feasible(order, c)) continue;
    order.push_back(static_cast<int>(c));
    if (order_search(facets, order, used | (std::uint64_t{1} << c), dead,
                     feasible))
      return true;
    order.pop_back();
  }
  dead.insert(used);
  return false;
}

}  // namespace detail

inline DecompositionWitness is_shellable(const SimplicialComplex& d,
                                         int facet_cap = 12) {
  DecompositionWitness w{DecompositionWitness::Kind::shellable};
  if (static_cast<int>(d.facets.size()) > facet_cap)
    throw size_error("shellability facet cap exceeded");
  if (d.facets.size() <= 1) {
    w.holds = true;
    w.order = d.facets;
    return w;
  }
  std::vector<int> order;
  std::unordered_set<std::uint64_t> dead;
  auto feasible = [&](const std::vector<int>& pre, size_t c) {
    VertexSet fj = d.facets[c];
    VertexSet singles = 0;
    for (int k : pre) {
      VertexSet diff = fj & ~d.facets[k];
      if (popcount(diff) == 1) singles |= diff;
    }
    for (int i : pre)
      if (((fj & ~d.facets[i]) & singles) == 0) return false;
    return true;
  };
  if (detail::order_search(d.facets, order, 0, dead, feasible)) {
    w.holds = true;
    for (int c : order) w.order.push_back(d.facets[c]);
  }
  return w;
}

inline DecompositionWitness quasi_forest_leaf_order(const SimplicialComplex& d,
                                                    int facet_cap = 24) {
  DecompositionWitness w{DecompositionWitness::Kind::quasi_forest};
  if (static_cast<int>(d.facets.size()) > facet_cap)
    throw size_error("leaf-order facet cap exceeded");
  if (d.facets.size() <= 1) {
    w.holds = true;
    w.order = d.facets;
    return w;
  }
  std::vector<int> order;
  std::unordered_set<std::uint64_t> dead;
  auto feasible = [&](const std::vector<int>& pre, size_t c) {
    std::vector<VertexSet> prefix;
    prefix.reserve(pre.size() + 1);
    for (int k : pre) prefix.push_back(d.facets[k]);
    prefix.push_back(d.facets[c]);
    return is_leaf(prefix, d.facets[c]);
  };
  if (detail::order_search(d.facets, order, 0, dead, feasible)) {
    w.holds = true;
    for (int c : order) w.order.push_back(d.facets[c]);
  }
  return w;
}

inline DecompositionWitness is_vertex_decomposable(
    const SimplicialComplex& d, int vertex_cap = kDefaultBettiCap) {
  DecompositionWitness w{DecompositionWitness::Kind::vertex_decomposable};
  VdSearcher searcher(vertex_cap);
  auto tree = searcher.witness(d);
  if (tree) {
    w.holds = true;
    w.tree = *tree;
  }
  return w;
}

}  // namespace edgeideal
