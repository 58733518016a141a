#pragma once

#include <cstdint>
#include <stdexcept>

namespace edgeideal {

// Coefficient field: characteristic 0 (exact integer elimination) or a
// prime p. No floating point anywhere.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  static FieldSpec rationals() { return FieldSpec{0}; }

  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (p > 0x7fffffffu)
      throw std::invalid_argument("prime characteristic must fit in 31 bits");
    return FieldSpec{p};
  }

  static FieldSpec of(std::uint32_t c) {
    return c == 0 ? rationals() : prime(c);
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace edgeideal
