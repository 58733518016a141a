#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

// Vertex sets are 64-bit masks over vertex indices 0..n-1 (n <= 64 everywhere).

namespace edgeideal {

using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

inline VertexSet bit(int v) { return VertexSet{1} << v; }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

inline int popcount(VertexSet s) { return std::popcount(s); }

inline bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Calls f(v) for each member in increasing order.
template <typename F>
inline void for_each_vertex(VertexSet s, F f) {
  while (s) {
    int v = std::countr_zero(s);
    f(v);
    s &= s - 1;
  }
}

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet set_of(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

// Next k-subset of the same population count (Gosper's hack); caller stops
// once the result no longer fits below the ambient mask.
inline VertexSet next_same_popcount(VertexSet s) {
  VertexSet c = s & -s;
  VertexSet r = s + c;
  return r | (((s ^ r) >> 2) / c);
}

// Enumerates all subsets of `ground` with exactly k members.
template <typename F>
inline void for_each_k_subset(VertexSet ground, int k, F f) {
  std::vector<int> idx = members(ground);
  int n = static_cast<int>(idx.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(VertexSet{0});
    return;
  }
  if (k == n) {  // avoids a 64-bit shift by n below
    f(ground);
    return;
  }
  VertexSet s = full_set(k);
  VertexSet limit = VertexSet{1} << n;
  while (s < limit) {
    VertexSet mapped = 0;
    for_each_vertex(s, [&](int i) { mapped |= bit(idx[i]); });
    f(mapped);
    if (s == (limit - 1)) break;
    s = next_same_popcount(s);
    if (s >= limit) break;
  }
}

// All subsets of `ground`, including the empty one.
template <typename F>
inline void for_each_subset(VertexSet ground, F f) {
  VertexSet s = ground;
  for (;;) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & ground;
  }
}

}  // namespace edgeideal
