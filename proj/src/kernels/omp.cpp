#include <omp.h>

#include <algorithm>
#include <vector>

#include "z2sum/bits.hpp"
#include "z2sum/kernels.hpp"

namespace z2sum::kernels::omp {

namespace {
constexpr std::int64_t kParallelGrain = std::int64_t{1} << 14;
constexpr std::int64_t kBlock = std::int64_t{1} << 12;
constexpr std::size_t kPrivateBitmapWords = std::size_t{1} << 18;  // 2 MiB per thread
}  // namespace

void walsh_hadamard(std::span<std::int64_t> v) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  const std::int64_t half = n / 2;
  std::int64_t* data = v.data();
  // Layers below kBlock stay inside one cache-sized block each.
  const std::int64_t block = std::min(n, kBlock);
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
  for (std::int64_t b = 0; b < n; b += block) {
    serial::walsh_hadamard(std::span<std::int64_t>(data + b, static_cast<std::size_t>(block)));
  }
  for (std::int64_t h = block; h < n; h <<= 1) {
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (std::int64_t j = 0; j < half; ++j) {
      const std::int64_t i = ((j & ~(h - 1)) << 1) | (j & (h - 1));
      const std::int64_t x = data[i];
      const std::int64_t y = data[i + h];
      data[i] = x + y;
      data[i + h] = x - y;
    }
  }
}

void xor_sumset(std::span<const Cell> outer, std::span<const Cell> inner,
                std::span<std::uint64_t> out) {
  const std::int64_t count = static_cast<std::int64_t>(outer.size());
  const std::size_t words = out.size();
  if (words > kPrivateBitmapWords || omp_get_max_threads() == 1) {
    for (Cell a : outer) {
      for (Cell b : inner) {
        const Cell s = a ^ b;
        out[s >> 6] |= std::uint64_t{1} << (s & 63U);
      }
    }
    return;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(words, 0);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < count; ++k) {
      const Cell a = outer[static_cast<std::size_t>(k)];
      for (Cell b : inner) {
        const Cell s = a ^ b;
        local[s >> 6] |= std::uint64_t{1} << (s & 63U);
      }
    }
#pragma omp critical(z2sum_sumset_reduce)
    for (std::size_t w = 0; w < words; ++w) out[w] |= local[w];
  }
}

void compress(std::span<const std::uint64_t> in, int dim, std::uint32_t mask,
              std::span<std::uint64_t> out) {
  const std::uint32_t all = bits::low_mask(dim);
  mask &= all;
  const std::uint32_t rest = all & ~mask;
  const std::int64_t cosets = std::int64_t{1} << bits::weight(rest);
  const std::int64_t universe = std::int64_t{1} << dim;
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(cosets));
  auto test = [&](Cell x) { return static_cast<std::uint32_t>((in[x >> 6] >> (x & 63U)) & 1U); };

#pragma omp parallel if (universe >= kParallelGrain)
  {
    const std::int64_t threads = omp_get_num_threads();
    const std::int64_t tid = omp_get_thread_num();
    const std::int64_t lo = cosets * tid / threads;
    const std::int64_t hi = cosets * (tid + 1) / threads;
    // Coset bases are the submasks of `rest`, walked in increasing order.
    std::uint32_t base = bits::deposit(static_cast<std::uint32_t>(lo), rest);
    for (std::int64_t c = lo; c < hi; ++c, base = (base - rest) & rest) {
      std::uint32_t count = 0;
      for (std::uint32_t s = 0;; s = (s - mask) & mask) {
        count += test(base | s);
        if (s == mask) break;
      }
      counts[static_cast<std::size_t>(c)] = count;
    }
  }

  // A cell splits into its low 6 bits (position in the word) and the word
  // index; rank and coset number are assembled from both halves.
  const int low_bits = std::min(dim, 6);
  const std::uint32_t low = bits::low_mask(low_bits);
  const int mask_lo_weight = bits::weight(mask & low);
  const int rest_lo_weight = bits::weight(rest & low);
  std::uint32_t rank_lo[64];
  std::uint32_t coset_lo[64];
  for (std::uint32_t b = 0; b <= low; ++b) {
    rank_lo[b] = bits::extract(b, mask & low);
    coset_lo[b] = bits::extract(b, rest & low);
  }

  const std::int64_t words = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (universe >= kParallelGrain)
  for (std::int64_t w = 0; w < words; ++w) {
    const auto hi = static_cast<std::uint32_t>(w) << 6;
    const std::uint32_t rank_hi = bits::extract(hi, mask & ~low) << mask_lo_weight;
    const std::uint32_t coset_hi = bits::extract(hi, rest & ~low) << rest_lo_weight;
    std::uint64_t word = 0;
    for (std::uint32_t b = 0; b <= low; ++b) {
      if ((rank_hi | rank_lo[b]) < counts[coset_hi | coset_lo[b]]) word |= std::uint64_t{1} << b;
    }
    out[static_cast<std::size_t>(w)] = word;
  }
}

}  // namespace z2sum::kernels::omp
