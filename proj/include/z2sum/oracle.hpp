#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "z2sum/z2set.hpp"

namespace z2sum {

enum class SearchMode {
  Full,        // every candidate pair (E inside A for the generating case)
  Compressed,  // A <<E>>-compressed, B compressed wherever A is kept-compressed
};

struct SearchOptions {
  SearchMode mode = SearchMode::Full;
  bool force = false;  // ignore the dimension caps (still limited to n <= 5)
  int jobs = 0;        // 0: OpenMP default
};

struct SumsetMin {
  std::uint64_t value = 0;
  Z2Set a;
  Z2Set b;
  std::uint64_t candidates = 0;  // pairs examined
};

/// Exact min |A+B| over |A| = size_a, |B| = size_b in Z_2^n, optionally with
/// <A> = G. Witnesses are the smallest pair by member-list order.
SumsetMin min_sumset(int n, std::uint64_t size_a, std::uint64_t size_b, bool require_gen_a,
                     const SearchOptions& opts = {});

struct DoublingMin {
  std::uint64_t value = 0;
  Z2Set witness;
  std::uint64_t candidates = 0;
};

/// Exact min |A+A| over affinely generating A of the given size.
DoublingMin min_doubling(int n, std::uint64_t size_a, const SearchOptions& opts = {});

/// Generating sets of Z_2^n (n <= 5) containing E, as cell masks, sorted.
/// In compressed mode only the <<E>>-compressed ones.
std::vector<std::uint32_t> generating_candidates(int n, std::uint64_t size, SearchMode mode);

/// |A+B| for sets given as cell masks of Z_2^n, n <= 5.
std::uint32_t mask_sumset(std::uint32_t a, std::uint32_t b, int n);
Z2Set mask_to_set(std::uint32_t mask, int n);
std::uint32_t set_to_mask(const Z2Set& s);

}  // namespace z2sum
