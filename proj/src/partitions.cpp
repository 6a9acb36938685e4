#include "z2sum/partitions.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "z2sum/config.hpp"
#include "z2sum/hopf_stiefel.hpp"

namespace z2sum {

namespace {

bool is_pow2(std::uint64_t x) { return std::has_single_bit(x); }

void enumerate(std::uint64_t remaining, std::uint64_t slots, std::uint64_t max_part,
               std::vector<std::uint64_t>& prefix,
               const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  if (slots == 0) {
    if (remaining == 0) f(prefix);
    return;
  }
  // The current part is at least ceil(remaining / slots) and at most max_part,
  // and leaves at least one unit for each later slot.
  const std::uint64_t lo = (remaining + slots - 1) / slots;
  const std::uint64_t hi = std::min(max_part, remaining - (slots - 1));
  for (std::uint64_t v = hi; v >= lo && v >= 1; --v) {
    prefix.push_back(v);
    enumerate(remaining - v, slots - 1, v, prefix, f);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<std::uint64_t> p) : parts(std::move(p)) {
  if (parts.empty()) throw Error("a partition needs at least one part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw Error("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw Error("partition parts must be non-increasing");
  }
}

std::uint64_t Partition::total() const {
  std::uint64_t s = 0;
  for (auto v : parts) s += v;
  return s;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ']';
  return out.str();
}

PartitionClass classify(const Partition& p) {
  const auto& a = p.parts;
  const std::size_t m = a.size();
  PartitionClass c;

  c.compressed = true;
  for (std::size_t i = 0; i < m && c.compressed; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      // Largest 2^k below a_i + a_j is the binding one.
      const std::uint64_t top = std::bit_floor(a[i] + a[j] - 1);
      if (a[i] < top) {
        c.compressed = false;
        break;
      }
    }
  }

  c.quasi_dyadic = std::all_of(a.begin(), a.end() - 1, is_pow2);

  if (c.quasi_dyadic) {
    if (m == 1) {
      c.quasi_fair = true;
    } else {
      // Non-final parts are powers of two in {2^k, 2^(k-1)}: a_1 is 2^k.
      const std::uint64_t big = a.front();
      c.quasi_fair = std::all_of(a.begin(), a.end() - 1,
                                 [&](std::uint64_t v) { return v == big || 2 * v == big; });
    }
  }
  return c;
}

QuasiFairMeta quasi_fair_meta(std::uint64_t a, std::uint64_t m) {
  if (m < 1 || m > a) throw Error("quasi-fair partition needs 1 <= m <= a");
  QuasiFairMeta meta;
  while ((m << meta.k) < a) ++meta.k;
  if (meta.k > 0) {
    const std::uint64_t half = std::uint64_t{1} << (meta.k - 1);
    meta.j = (a + half - 1) / half - m;
  }
  return meta;
}

Partition quasi_fair(std::uint64_t a, std::uint64_t m) {
  const auto meta = quasi_fair_meta(a, m);
  if (meta.k == 0) return Partition(std::vector<std::uint64_t>(m, 1));
  if (m == 1) return Partition({a});
  const std::uint64_t big = std::uint64_t{1} << meta.k;
  std::vector<std::uint64_t> parts;
  std::uint64_t used = 0;
  for (std::uint64_t i = 0; i + 1 < m; ++i) {
    const std::uint64_t v = i < meta.j ? big : big / 2;
    parts.push_back(v);
    used += v;
  }
  if (used >= a || a - used > parts.back()) {
    throw Error("quasi-fair construction failed for a=" + std::to_string(a) +
                " m=" + std::to_string(m));
  }
  parts.push_back(a - used);
  return Partition(std::move(parts));
}

std::uint64_t pair_cost(const Partition& p) {
  const auto& a = p.parts;
  std::uint64_t direct = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) direct += hs(a[i], a[j]);
  }
  if (classify(p).quasi_dyadic) {
    std::uint64_t shortcut = 0;
    for (std::size_t i = 0; i < a.size(); ++i) shortcut += (a.size() - 1 - i) * a[i];
    if (shortcut != direct) {
      throw Error("pair cost shortcut disagrees on " + p.to_string());
    }
  }
  return direct;
}

void for_each_partition(std::uint64_t a, std::uint64_t m, std::uint64_t cap,
                        const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  if (m < 1 || m > a) return;
  std::vector<std::uint64_t> prefix;
  prefix.reserve(m);
  enumerate(a, m, cap, prefix, f);
}

MinPairCost min_pair_cost(std::uint64_t a, std::uint64_t m, std::optional<std::uint64_t> cap) {
  if (m < 1 || m > a) throw Error("min_pair_cost needs 1 <= m <= a");
  const std::uint64_t limit = cap.value_or(a);
  if (limit * m < a) {
    throw Error("no " + std::to_string(m) + "-partition of " + std::to_string(a) +
                " has parts <= " + std::to_string(limit));
  }
  const Partition fair = quasi_fair(a, m);
  const bool fair_fits = fair.parts.front() <= limit;

  MinPairCost best;
  best.quasi_fair_cost = pair_cost(fair);
  bool have = false;
  bool have_compressed = false;
  bool best_is_fair = false;
  for_each_partition(a, m, limit, [&](const std::vector<std::uint64_t>& parts) {
    ++best.partitions_seen;
    const Partition p(parts);
    const std::uint64_t cost = pair_cost(p);
    if (classify(p).compressed && (!have_compressed || cost < best.compressed_min)) {
      best.compressed_min = cost;
      have_compressed = true;
    }
    // Enumeration runs in decreasing lexicographic order, so the first
    // minimizer seen is the lexicographically largest one.
    const bool fair_here = fair_fits && p == fair;
    if (!have || cost < best.value || (cost == best.value && fair_here && !best_is_fair)) {
      best.value = cost;
      best.witness = p;
      best_is_fair = fair_here;
      have = true;
    }
  });
  return best;
}

}  // namespace z2sum
