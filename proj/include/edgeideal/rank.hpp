#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "edgeideal/field.hpp"

namespace edgeideal {

// Dense integer matrix, row-major. Entries of boundary matrices are 0/±1;
// elimination can grow them, hence the checked 128-bit fast path with a
// bignum fallback.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
};

namespace detail {

inline int rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  int rows = m.rows, cols = m.cols;
  std::vector<std::uint64_t> w(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) {
    std::int64_t v = m.a[i] % static_cast<std::int64_t>(p);
    if (v < 0) v += p;
    w[i] = static_cast<std::uint64_t>(v);
  }
  auto at = [&](int r, int c) -> std::uint64_t& {
    return w[static_cast<size_t>(r) * cols + c];
  };
  auto inv_mod = [&](std::uint64_t x) {
    // Fermat: x^(p-2) mod p
    std::uint64_t e = p - 2, r = 1, b = x % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int cc = 0; cc < cols; ++cc) std::swap(at(pivot, cc), at(rank, cc));
    std::uint64_t inv = inv_mod(at(rank, c));
    for (int r = rank + 1; r < rows; ++r) {
      std::uint64_t f = at(r, c);
      if (f == 0) continue;
      std::uint64_t mult = f * inv % p;
      for (int cc = c; cc < cols; ++cc)
        at(r, cc) = (at(r, cc) + (p - mult) * at(rank, cc)) % p;
    }
    ++rank;
  }
  return rank;
}

// Fraction-free Bareiss elimination over Z in 128-bit arithmetic; throws on
// (unlikely at our sizes) overflow so the caller can retry with bignums.
inline int rank_bareiss_i128(const IntMatrix& m) {
  int rows = m.rows, cols = m.cols;
  std::vector<__int128> w(m.a.begin(), m.a.end());
  auto at = [&](int r, int c) -> __int128& {
    return w[static_cast<size_t>(r) * cols + c];
  };
  const __int128 limit = (__int128(1) << 62);  // keeps products within 128 bits
  __int128 prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int cc = 0; cc < cols; ++cc) std::swap(at(pivot, cc), at(rank, cc));
    __int128 piv = at(rank, c);
    for (int r = rank + 1; r < rows; ++r) {
      __int128 f = at(r, c);
      for (int cc = c; cc < cols; ++cc) {
        __int128 x = at(rank, cc), y = at(r, cc);
        if ((x > limit || x < -limit) || (y > limit || y < -limit) ||
            (piv > limit || piv < -limit) || (f > limit || f < -limit))
          throw std::overflow_error("bareiss overflow");
        at(r, cc) = (piv * y - f * x) / prev;
      }
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

inline int rank_bareiss_bignum(const IntMatrix& m) {
  using big = boost::multiprecision::cpp_int;
  int rows = m.rows, cols = m.cols;
  std::vector<big> w(m.a.begin(), m.a.end());
  auto at = [&](int r, int c) -> big& {
    return w[static_cast<size_t>(r) * cols + c];
  };
  big prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int cc = 0; cc < cols; ++cc) at(pivot, cc).swap(at(rank, cc));
    big piv = at(rank, c);
    for (int r = rank + 1; r < rows; ++r) {
      big f = at(r, c);
      for (int cc = c; cc < cols; ++cc)
        at(r, cc) = (piv * at(r, cc) - f * at(rank, cc)) / prev;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Exact rank of an integer matrix over the given field.
inline int rank_over(const IntMatrix& m, FieldSpec field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.characteristic != 0)
    return detail::rank_mod_p(m, field.characteristic);
  try {
    return detail::rank_bareiss_i128(m);
  } catch (const std::overflow_error&) {
    return detail::rank_bareiss_bignum(m);
  }
}

}  // namespace edgeideal
