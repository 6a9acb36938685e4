#pragma once

// Data-parallel inner loops. Each kernel has a plain serial version, kept as
// the reference the OpenMP version is tested and benchmarked against. Both
// produce bit-identical output for any thread count.

#include <cstdint>
#include <span>

#include "z2sum/z2set.hpp"

namespace z2sum::kernels {

namespace serial {

/// Unnormalized Walsh-Hadamard transform of a length-2^n vector, in place.
void walsh_hadamard(std::span<std::int64_t> v);

/// Sets bit a^b of `out` for every a in `outer`, b in `inner`.
void xor_sumset(std::span<const Cell> outer, std::span<const Cell> inner,
                std::span<std::uint64_t> out);

/// C_I over the bitmap `in` of Z_2^dim, I given as a coordinate mask.
/// Works coset by coset: count, then write the initial segment.
void compress(std::span<const std::uint64_t> in, int dim, std::uint32_t mask,
              std::span<std::uint64_t> out);

}  // namespace serial

namespace omp {

void walsh_hadamard(std::span<std::int64_t> v);
void xor_sumset(std::span<const Cell> outer, std::span<const Cell> inner,
                std::span<std::uint64_t> out);
/// Counts per coset in parallel, then decides every output word
/// independently from (coset count, rank within coset).
void compress(std::span<const std::uint64_t> in, int dim, std::uint32_t mask,
              std::span<std::uint64_t> out);

}  // namespace omp

}  // namespace z2sum::kernels
