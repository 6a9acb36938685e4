#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace z2sum {

/// a_1 >= a_2 >= ... >= a_m >= 1.
struct Partition {
  std::vector<std::uint64_t> parts;

  Partition() = default;
  explicit Partition(std::vector<std::uint64_t> p);

  std::uint64_t total() const;
  std::size_t size() const { return parts.size(); }
  bool operator==(const Partition&) const = default;
  std::string to_string() const;
};

struct PartitionClass {
  bool compressed = false;
  bool quasi_dyadic = false;
  bool quasi_fair = false;
};

PartitionClass classify(const Partition& p);

/// k = ceil(log2(a/m)) and j = ceil(a/2^(k-1)) - m. For k = 0 (a = m) j is 0.
struct QuasiFairMeta {
  int k = 0;
  std::uint64_t j = 0;
};

QuasiFairMeta quasi_fair_meta(std::uint64_t a, std::uint64_t m);
/// The quasi-fair m-partition of a.
Partition quasi_fair(std::uint64_t a, std::uint64_t m);

/// sum over i < j of a_i o a_j. For quasi-dyadic input the shortcut
/// sum (m - i) a_i is evaluated as well and must agree.
std::uint64_t pair_cost(const Partition& p);

struct MinPairCost {
  std::uint64_t value = 0;
  Partition witness;
  std::uint64_t quasi_fair_cost = 0;
  std::uint64_t compressed_min = 0;  // minimum over compressed partitions only
  std::uint64_t partitions_seen = 0;
};

/// Exhaustive minimum of pair_cost over m-partitions of a with parts <= cap.
/// Ties prefer the quasi-fair partition, then the lexicographically largest.
MinPairCost min_pair_cost(std::uint64_t a, std::uint64_t m,
                          std::optional<std::uint64_t> cap = std::nullopt);

/// Calls f(parts) for every m-partition of a with parts <= cap, in
/// lexicographically decreasing order.
void for_each_partition(std::uint64_t a, std::uint64_t m, std::uint64_t cap,
                        const std::function<void(const std::vector<std::uint64_t>&)>& f);

}  // namespace z2sum
