#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "edgeideal/complex.hpp"

namespace edgeideal {

namespace detail {

inline std::int64_t checked_i64(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("integer overflow in f/h arithmetic");
  return static_cast<std::int64_t>(v);
}

inline __int128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

// counts[k] = number of faces of cardinality k, so counts[0] = 1 is the
// empty face and counts[1] the vertex count; in the usual indexing
// counts[k] = f_{k-1}.
struct FVector {
  std::vector<std::int64_t> counts;
  int krull_dim() const { return static_cast<int>(counts.size()) - 1; }
};

// h[0..d] with d = dim Δ + 1; entries may be negative.
struct HVector {
  std::vector<std::int64_t> h;
  // Degree of the h-polynomial (the Hilbert-series numerator):
  // largest s with h_s != 0.
  int degree() const {
    for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i)
      if (h[i] != 0) return i;
    return 0;
  }
};

inline FVector f_vector(const SimplicialComplex& d) {
  if (d.is_void()) throw std::invalid_argument("f-vector of the void complex");
  FVector f;
  auto faces = d.faces_by_size();
  f.counts.reserve(faces.size());
  for (const auto& level : faces)
    f.counts.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

// h_i = sum_{j=0}^{i} (-1)^{i-j} C(d-j, d-i) f_{j-1}
inline HVector h_vector(const FVector& f) {
  int d = f.krull_dim();
  HVector h;
  h.h.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    __int128 acc = 0;
    for (int j = 0; j <= i; ++j) {
      __int128 term = detail::binomial(d - j, d - i) * f.counts[j];
      acc += ((i - j) % 2 == 0) ? term : -term;
    }
    h.h[i] = detail::checked_i64(acc);
  }
  return h;
}

// Inverse transform: f_{i-1} = sum_{j=0}^{i} C(d-j, i-j) h_j
inline FVector f_from_h(const HVector& h) {
  int d = static_cast<int>(h.h.size()) - 1;
  FVector f;
  f.counts.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    __int128 acc = 0;
    for (int j = 0; j <= i; ++j) acc += detail::binomial(d - j, i - j) * h.h[j];
    f.counts[i] = detail::checked_i64(acc);
  }
  return f;
}

// f-vector, h-vector, Krull dimension, degree s of the h-polynomial and the
// a-invariant s - d of K[Δ_G].
struct HilbertData {
  FVector f;
  HVector h;
  int krull_dim = 0;
  int h_degree = 0;
  int a_invariant = 0;
};

inline HilbertData hilbert_data(const SimplicialComplex& d) {
  HilbertData out;
  out.f = f_vector(d);
  out.h = h_vector(out.f);
  out.krull_dim = out.f.krull_dim();
  out.h_degree = out.h.degree();
  out.a_invariant = out.h_degree - out.krull_dim;
  return out;
}

inline HilbertData hilbert_data(const Graph& g) {
  return hilbert_data(independence_complex(g));
}

}  // namespace edgeideal
