#include <algorithm>
#include <vector>

#include "z2sum/bits.hpp"
#include "z2sum/kernels.hpp"

namespace z2sum::kernels::serial {

void walsh_hadamard(std::span<std::int64_t> v) {
  const std::size_t n = v.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * h) {
      for (std::size_t i = block; i < block + h; ++i) {
        const std::int64_t x = v[i];
        const std::int64_t y = v[i + h];
        v[i] = x + y;
        v[i + h] = x - y;
      }
    }
  }
}

void xor_sumset(std::span<const Cell> outer, std::span<const Cell> inner,
                std::span<std::uint64_t> out) {
  for (Cell a : outer) {
    for (Cell b : inner) {
      const Cell s = a ^ b;
      out[s >> 6] |= std::uint64_t{1} << (s & 63U);
    }
  }
}

void compress(std::span<const std::uint64_t> in, int dim, std::uint32_t mask,
              std::span<std::uint64_t> out) {
  const std::uint32_t all = bits::low_mask(dim);
  mask &= all;
  const std::uint32_t rest = all & ~mask;
  const std::uint32_t coset_size = std::uint32_t{1} << bits::weight(mask);
  std::fill(out.begin(), out.end(), 0);
  auto test = [&](Cell x) { return (in[x >> 6] >> (x & 63U)) & 1U; };
  // Walk cosets base + H_I with base ranging over submasks of `rest`.
  for (std::uint32_t base = 0;; base = (base - rest) & rest) {
    std::uint32_t count = 0;
    for (std::uint32_t r = 0; r < coset_size; ++r) count += test(base | bits::deposit(r, mask));
    for (std::uint32_t r = 0; r < count; ++r) {
      const Cell x = base | bits::deposit(r, mask);
      out[x >> 6] |= std::uint64_t{1} << (x & 63U);
    }
    if (base == rest) break;
  }
}

}  // namespace z2sum::kernels::serial
