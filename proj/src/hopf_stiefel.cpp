#include "z2sum/hopf_stiefel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "z2sum/config.hpp"
#include "z2sum/gf2core.hpp"
#include "z2sum/sumset.hpp"

namespace z2sum {

namespace {

std::shared_mutex memo_mutex;
std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> memo;

std::uint64_t hs_rec(std::uint64_t a, std::uint64_t b) {
  if (a < b) std::swap(a, b);
  if (a == 1) return 1;
  {
    std::shared_lock lock(memo_mutex);
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
  }
  // 2^k < a <= 2^(k+1)
  const std::uint64_t half = std::bit_ceil(a) / 2;
  const std::uint64_t value = b <= half ? half + hs_rec(a - half, b) : 2 * half;
  std::unique_lock lock(memo_mutex);
  memo.emplace(std::pair{a, b}, value);
  return value;
}

}  // namespace

std::uint64_t hs(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw Error("hs needs positive arguments");
  if (std::max(a, b) > (std::uint64_t{1} << 62)) throw Error("hs argument too large");
  return hs_rec(a, b);
}

std::uint64_t hs_oracle(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw Error("hs_oracle needs positive arguments");
  const std::uint64_t cap = std::uint64_t{1} << limits().hs_oracle_max_log;
  if (a > cap || b > cap) {
    throw Error("hs_oracle operands capped at 2^" + std::to_string(limits().hs_oracle_max_log));
  }
  const int n = std::bit_width(std::bit_ceil(std::max(a, b))) - 1;
  return sum(initial_segment(a, n), initial_segment(b, n)).size();
}

}  // namespace z2sum
