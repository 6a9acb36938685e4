#pragma once

#include <bit>
#include <cstdint>

namespace z2sum::bits {

/// Scatters the low bits of `value` into the set positions of `mask`.
inline std::uint32_t deposit(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t bit = 1; mask != 0; mask &= mask - 1, bit <<= 1) {
    if (value & bit) out |= mask & (~mask + 1);
  }
  return out;
}

/// Gathers the bits of `value` at the set positions of `mask` into the low bits.
inline std::uint32_t extract(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t bit = 1; mask != 0; mask &= mask - 1, bit <<= 1) {
    if (value & mask & (~mask + 1)) out |= bit;
  }
  return out;
}

inline int weight(std::uint32_t x) { return std::popcount(x); }

inline std::uint32_t low_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
}

}  // namespace z2sum::bits
