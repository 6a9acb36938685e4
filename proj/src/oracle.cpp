#include "z2sum/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <mutex>

#include "z2sum/bits.hpp"
#include "z2sum/compression.hpp"
#include "z2sum/isoperimetry.hpp"

namespace z2sum {

namespace {

constexpr int kMaskMaxDim = 5;
constexpr std::array<std::uint32_t, 5> kLowHalf = {0x55555555U, 0x33333333U, 0x0F0F0F0FU,
                                                   0x00FF00FFU, 0x0000FFFFU};

std::uint32_t translate_mask(std::uint32_t m, Cell x) {
  for (int i = 0; x != 0; ++i, x >>= 1) {
    if (x & 1U) {
      const unsigned s = 1U << i;
      m = ((m & kLowHalf[i]) << s) | ((m >> s) & kLowHalf[i]);
    }
  }
  return m;
}

std::uint32_t universe_mask(int n) { return n == 5 ? ~std::uint32_t{0} : (std::uint32_t{1} << (1U << n)) - 1; }

std::uint32_t basis_mask(int n) {
  std::uint32_t m = 1U;
  for (int i = 1; i <= n; ++i) m |= std::uint32_t{1} << unit(i);
  return m;
}

// Lexicographic order of the sorted member lists.
bool mask_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const std::uint32_t c = (a ^ b) & (~(a ^ b) + 1);
  const std::uint32_t above = ~((c << 1) - 1);
  if (a & c) return (b & above) != 0;
  return (a & above) == 0;
}

// required | (every k-subset of pool).
std::vector<std::uint32_t> subsets_with(std::uint32_t required, std::uint32_t pool, int k) {
  std::vector<std::uint32_t> out;
  const int p = std::popcount(pool);
  if (k < 0 || k > p) return out;
  if (k == 0) return {required};
  const std::uint64_t end = std::uint64_t{1} << p;
  for (std::uint64_t v = (std::uint64_t{1} << k) - 1; v < end;) {
    out.push_back(required | bits::deposit(static_cast<std::uint32_t>(v), pool));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

const std::vector<std::uint32_t>& shift_minimal_masks(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    for (const auto& d : shift_minimal_downsets(n)) it->second.push_back(set_to_mask(d));
  }
  return it->second;
}

void check_dim(int n, int cap, bool force, const char* what) {
  if (n < 1 || n > kMaskMaxDim) {
    throw Error(std::string(what) + " supports 1 <= n <= " + std::to_string(kMaskMaxDim));
  }
  if (n > cap && !force) {
    throw Error(std::string(what) + " capped at n <= " + std::to_string(cap) + " (use --force)");
  }
}

struct Best {
  std::uint64_t value = std::numeric_limits<std::uint64_t>::max();
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  void offer(std::uint64_t v, std::uint32_t ca, std::uint32_t cb) {
    if (v < value || (v == value && (mask_less(ca, a) || (ca == a && mask_less(cb, b))))) {
      value = v;
      a = ca;
      b = cb;
    }
  }
};

int thread_count(const SearchOptions& opts) { return opts.jobs > 0 ? opts.jobs : omp_get_max_threads(); }

// Index sets keeping E inside A, nonempty, as a list for the B filter.
std::vector<IndexMask> kept_index_sets(const Z2Set& a) {
  std::vector<IndexMask> out;
  for (IndexMask m : index_sets_by_size(a.dim())) {
    if (m != 0 && keeps_basis(a, m)) out.push_back(m);
  }
  return out;
}

}  // namespace

std::uint32_t mask_sumset(std::uint32_t a, std::uint32_t b, int n) {
  if (n < 0 || n > kMaskMaxDim) throw Error("mask sumsets need n <= 5");
  std::uint32_t out = 0;
  for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
    out |= translate_mask(b, static_cast<Cell>(std::countr_zero(rest)));
  }
  return out;
}

Z2Set mask_to_set(std::uint32_t mask, int n) {
  Z2Set s(n);
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) s.insert(static_cast<Cell>(std::countr_zero(rest)));
  return s;
}

std::uint32_t set_to_mask(const Z2Set& s) {
  if (s.dim() > kMaskMaxDim) throw Error("mask form needs n <= 5");
  std::uint32_t m = 0;
  s.for_each([&](Cell x) { m |= std::uint32_t{1} << x; });
  return m;
}

std::vector<std::uint32_t> generating_candidates(int n, std::uint64_t size, SearchMode mode) {
  if (n < 1 || n > kMaskMaxDim) throw Error("generating candidates need 1 <= n <= 5");
  const std::uint32_t e = basis_mask(n);
  if (size < static_cast<std::uint64_t>(n) + 1 || size > (std::uint64_t{1} << n)) return {};
  if (mode == SearchMode::Full) {
    return subsets_with(e, universe_mask(n) & ~e, static_cast<int>(size) - (n + 1));
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t d : shift_minimal_masks(n)) {
    if (static_cast<std::uint64_t>(std::popcount(d)) != size || (d & e) != e) continue;
    if (is_e_compressed(mask_to_set(d, n))) out.push_back(d);
  }
  return out;
}

SumsetMin min_sumset(int n, std::uint64_t size_a, std::uint64_t size_b, bool require_gen_a,
                     const SearchOptions& opts) {
  const auto& lim = limits();
  const int cap = !require_gen_a ? lim.exhaustive_unrestricted_dim
                  : opts.mode == SearchMode::Compressed ? lim.compressed_generating_dim
                                                        : lim.exhaustive_generating_dim;
  check_dim(n, cap, opts.force, "min_sumset");
  const std::uint64_t universe = std::uint64_t{1} << n;
  if (size_a < 1 || size_b < 1 || size_a > universe || size_b > universe) {
    throw Error("min_sumset needs 1 <= |A|, |B| <= 2^n");
  }
  if (require_gen_a && size_a < static_cast<std::uint64_t>(n) + 1) {
    throw Error("an affinely generating set needs at least n+1 points");
  }

  // Translating B leaves |A+B| unchanged, so 0 in B; likewise 0 in A when A is free.
  std::vector<std::uint32_t> as;
  std::vector<std::uint32_t> bs;
  const bool compressed = require_gen_a && opts.mode == SearchMode::Compressed;
  const std::uint32_t all = universe_mask(n);
  if (require_gen_a) {
    as = generating_candidates(n, size_a, opts.mode);
  } else {
    as = subsets_with(1U, all & ~1U, static_cast<int>(size_a) - 1);
  }
  if (compressed) {
    for (std::uint32_t d : shift_minimal_masks(n)) {
      if (static_cast<std::uint64_t>(std::popcount(d)) == size_b) bs.push_back(d);
    }
  } else {
    bs = subsets_with(1U, all & ~1U, static_cast<int>(size_b) - 1);
  }

  Best best;
  std::uint64_t candidates = 0;
  const std::int64_t count = static_cast<std::int64_t>(as.size());
#pragma omp parallel num_threads(thread_count(opts)) reduction(+ : candidates)
  {
    Best local;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t ia = 0; ia < count; ++ia) {
      const std::uint32_t a = as[static_cast<std::size_t>(ia)];
      std::vector<IndexMask> kept;
      Z2Set aset;
      if (compressed) {
        aset = mask_to_set(a, n);
        kept = kept_index_sets(aset);
      }
      for (std::uint32_t b : bs) {
        if (compressed) {
          const Z2Set bset = mask_to_set(b, n);
          if (!std::all_of(kept.begin(), kept.end(), [&](IndexMask m) { return is_compressed(bset, m); })) {
            continue;
          }
        }
        ++candidates;
        local.offer(static_cast<std::uint64_t>(std::popcount(mask_sumset(a, b, n))), a, b);
      }
    }
#pragma omp critical(z2sum_oracle_merge)
    if (local.value != std::numeric_limits<std::uint64_t>::max()) best.offer(local.value, local.a, local.b);
  }
  if (best.value == std::numeric_limits<std::uint64_t>::max()) {
    throw Error("no candidate pair for the requested sizes");
  }
  return {best.value, mask_to_set(best.a, n), mask_to_set(best.b, n), candidates};
}

DoublingMin min_doubling(int n, std::uint64_t size_a, const SearchOptions& opts) {
  const int cap = opts.mode == SearchMode::Compressed ? limits().compressed_generating_dim
                                                      : limits().exhaustive_generating_dim;
  check_dim(n, cap, opts.force, "min_doubling");
  if (size_a < static_cast<std::uint64_t>(n) + 1 || size_a > (std::uint64_t{1} << n)) {
    throw Error("min_doubling needs n+1 <= |A| <= 2^n");
  }
  const auto as = generating_candidates(n, size_a, opts.mode);
  Best best;
  for (std::uint32_t a : as) best.offer(static_cast<std::uint64_t>(std::popcount(mask_sumset(a, a, n))), a, a);
  if (as.empty()) throw Error("no generating candidate of the requested size");
  return {best.value, mask_to_set(best.a, n), as.size()};
}

}  // namespace z2sum
