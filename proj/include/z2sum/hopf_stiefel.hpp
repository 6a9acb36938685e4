#pragma once

#include <cstdint>

namespace z2sum {

/// a o b, the size of IS(a) + IS(b), from the dyadic recursion.
/// Memoized; safe to call from several threads.
std::uint64_t hs(std::uint64_t a, std::uint64_t b);

/// Same value, computed directly as |IS(a) + IS(b)| in the smallest cube
/// holding both segments. Operands are capped at 2^limits().hs_oracle_max_log.
std::uint64_t hs_oracle(std::uint64_t a, std::uint64_t b);

}  // namespace z2sum
