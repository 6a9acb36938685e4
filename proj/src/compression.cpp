#include "z2sum/compression.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "z2sum/bits.hpp"
#include "z2sum/gf2core.hpp"
#include "z2sum/kernels.hpp"

namespace z2sum {

namespace {

constexpr int kMaxIndexSetDim = 20;

void check_coordinate(int dim, int i) {
  if (i < 1 || i > dim) {
    throw Error("coordinate " + std::to_string(i) + " outside [1, " + std::to_string(dim) + "]");
  }
}

std::uint64_t count_in_subgroup(const Z2Set& a, IndexMask mask) {
  std::uint64_t count = 0;
  for (std::uint32_t s = mask;; s = (s - 1) & mask) {
    count += a.contains(s) ? 1 : 0;
    if (s == 0) break;
  }
  return count;
}

void require_basis(const Z2Set& a, const char* what) {
  if (!contains_standard_basis(a)) {
    throw Error(std::string(what) + " needs {0, e_1, ..., e_n} inside the set");
  }
}

void require_fixpoint_dim(int dim) {
  if (dim > limits().fixpoint_max_dim) {
    throw Error("fixpoint sweep capped at n <= " + std::to_string(limits().fixpoint_max_dim) +
                ", got n=" + std::to_string(dim));
  }
}

struct Decomposition {
  int h = 0;
  Z2Set subgroup;
  std::vector<Z2Set> parts;
};

Decomposition decompose(const Z2Set& a) {
  const int n = a.dim();
  Decomposition d;
  while (d.h < n && coordinate_subgroup(n, bits::low_mask(d.h + 1)).is_subset_of(a)) ++d.h;
  d.subgroup = coordinate_subgroup(n, bits::low_mask(d.h));
  for (int i = d.h + 1; i <= n; ++i) d.parts.push_back(a & d.subgroup.translate(unit(i)));
  return d;
}

// Clauses 4-7 plus the part ordering; fills `check` and returns the report.
StructureReport shape_clauses(const Z2Set& a, StructureCheck& check) {
  auto d = decompose(a);
  StructureReport r;
  r.h = d.h;
  r.m = a.dim() - d.h;
  r.subgroup = std::move(d.subgroup);
  r.parts = std::move(d.parts);
  const std::uint64_t hsize = r.subgroup.size();
  std::uint64_t total = hsize;
  for (const auto& p : r.parts) {
    r.sizes.push_back(p.size());
    total += p.size();
  }
  auto fail = [&](const std::string& msg) {
    if (check.failure.empty()) check.failure = msg;
  };

  check.clause[3] = total == a.size();
  if (!check.clause[3]) fail("clause 4: A is not covered by H and its parts");

  check.clause[4] = std::all_of(r.sizes.begin(), r.sizes.end(),
                                [&](std::uint64_t s) { return s > 0 && s < hsize; });
  if (!check.clause[4]) fail("clause 5: some part is empty or a full coset");

  check.clause[5] = true;
  for (std::size_t i = 0; i < r.sizes.size(); ++i) {
    for (std::size_t j = i + 1; j < r.sizes.size(); ++j) {
      if (r.sizes[i] + r.sizes[j] > hsize) check.clause[5] = false;
    }
  }
  if (!check.clause[5]) fail("clause 6: two parts together exceed |H|");

  check.parts_non_increasing = std::is_sorted(r.sizes.rbegin(), r.sizes.rend());
  if (!check.parts_non_increasing) fail("part sizes are not non-increasing");

  check.clause[6] = r.m <= 1 || 2 * a.size() <= static_cast<std::uint64_t>(2 + r.m) * hsize;
  if (!check.clause[6]) fail("clause 7: |A| exceeds (1 + m/2)|H|");
  return r;
}

int max_subgroup_search(const Z2Set& p, const Z2Set& h, Cell last, int dim, int best) {
  // p = {x : x + H within A} for the current subgroup H of dimension `dim`.
  const int ceiling = 63 - std::countl_zero(p.size());
  if (ceiling <= best) return best;
  best = std::max(best, dim);
  for (Cell g : p.members()) {
    if (g <= last || h.contains(g)) continue;
    Z2Set next = p & p.translate(g);
    if (next.size() < (std::uint64_t{1} << (best + 1))) continue;
    best = max_subgroup_search(next, h | h.translate(g), g, dim + 1, best);
    if (best == ceiling) break;
  }
  return best;
}

}  // namespace

IndexMask index_mask(int dim, std::initializer_list<int> indices) {
  return index_mask(dim, std::vector<int>(indices));
}

IndexMask index_mask(int dim, const std::vector<int>& indices) {
  IndexMask mask = 0;
  for (int i : indices) {
    check_coordinate(dim, i);
    mask |= unit(i);
  }
  return mask;
}

void check_index_mask(int dim, IndexMask mask) {
  if ((mask & ~bits::low_mask(dim)) != 0) {
    throw Error("index set uses coordinates beyond n=" + std::to_string(dim));
  }
}

Z2Set compress(const Z2Set& a, IndexMask mask) {
  check_index_mask(a.dim(), mask);
  Z2Set out(a.dim());
  kernels::omp::compress(a.words(), a.dim(), mask, out.words());
  return out;
}

bool is_compressed(const Z2Set& a, IndexMask mask) {
  check_index_mask(a.dim(), mask);
  const IndexMask rest = ~mask;
  bool ok = true;
  // Initial segment in every coset: each member's predecessor in coset order is present.
  a.for_each([&](Cell x) {
    if (!ok) return;
    const std::uint32_t r = bits::extract(x, mask);
    if (r != 0 && !a.contains((x & rest) | bits::deposit(r - 1, mask))) ok = false;
  });
  return ok;
}

Z2Set push_down(const Z2Set& f, int i) {
  check_coordinate(f.dim(), i);
  Z2Set out = f;
  const Cell bit = unit(i);
  f.for_each([&](Cell x) {
    if ((x & bit) && !f.contains(x ^ bit)) {
      out.erase(x);
      out.insert(x ^ bit);
    }
  });
  return out;
}

Z2Set shift(const Z2Set& f, int i, int j) {
  check_coordinate(f.dim(), i);
  check_coordinate(f.dim(), j);
  if (i == j) throw Error("shift needs i != j");
  Z2Set out = f;
  const Cell bi = unit(i);
  const Cell bj = unit(j);
  f.for_each([&](Cell x) {
    if ((x & bj) && !(x & bi)) {
      const Cell y = x ^ bj ^ bi;
      if (!f.contains(y)) {
        out.erase(x);
        out.insert(y);
      }
    }
  });
  return out;
}

bool is_downset(const Z2Set& a) {
  bool ok = true;
  a.for_each([&](Cell x) {
    for (Cell rest = x; ok && rest != 0; rest &= rest - 1) {
      if (!a.contains(x ^ (rest & (~rest + 1)))) ok = false;
    }
  });
  return ok;
}

bool is_shift_minimal(const Z2Set& a) {
  const int n = a.dim();
  bool ok = true;
  a.for_each([&](Cell x) {
    for (int j = 2; ok && j <= n; ++j) {
      if (!(x & unit(j))) continue;
      for (int i = 1; i < j; ++i) {
        if (!(x & unit(i)) && !a.contains(x ^ unit(i) ^ unit(j))) {
          ok = false;
          break;
        }
      }
    }
  });
  return ok;
}

const std::vector<IndexMask>& index_sets_by_size(int dim) {
  if (dim < 0 || dim > kMaxIndexSetDim) {
    throw Error("index set listing supports n <= " + std::to_string(kMaxIndexSetDim));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<IndexMask>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(dim);
  if (inserted) {
    auto& v = it->second;
    v.resize(std::size_t{1} << dim);
    for (std::size_t m = 0; m < v.size(); ++m) v[m] = static_cast<IndexMask>(m);
    std::stable_sort(v.begin(), v.end(),
                     [](IndexMask x, IndexMask y) { return bits::weight(x) < bits::weight(y); });
  }
  return it->second;
}

bool contains_standard_basis(const Z2Set& a) {
  if (!a.contains(0)) return false;
  for (int i = 1; i <= a.dim(); ++i) {
    if (!a.contains(unit(i))) return false;
  }
  return true;
}

bool keeps_basis(const Z2Set& a, IndexMask mask) {
  if (mask == 0) return true;
  return count_in_subgroup(a, mask) > (std::uint64_t{1} << (bits::weight(mask) - 1));
}

Z2Set e_compress(const Z2Set& a) {
  require_basis(a, "e_compress");
  require_fixpoint_dim(a.dim());
  const auto& order = index_sets_by_size(a.dim());
  Z2Set cur = a;
  for (bool changed = true; changed;) {
    changed = false;
    for (IndexMask mask : order) {
      if (mask == 0 || !keeps_basis(cur, mask) || is_compressed(cur, mask)) continue;
      cur = compress(cur, mask);
      changed = true;
      break;
    }
  }
  return cur;
}

bool is_e_compressed(const Z2Set& a) {
  if (!contains_standard_basis(a)) return false;
  require_fixpoint_dim(a.dim());
  for (IndexMask mask : index_sets_by_size(a.dim())) {
    if (keeps_basis(a, mask) && !is_compressed(a, mask)) return false;
  }
  return true;
}

std::pair<Z2Set, Z2Set> pair_compress(const Z2Set& a, const Z2Set& b) {
  require_same_dim(a, b);
  require_basis(a, "pair_compress");
  if (b.empty()) throw Error("pair_compress needs a non-empty B");
  require_fixpoint_dim(a.dim());
  const auto& order = index_sets_by_size(a.dim());
  Z2Set ca = a;
  Z2Set cb = b;
  for (bool changed = true; changed;) {
    changed = false;
    for (IndexMask mask : order) {
      if (mask == 0 || !keeps_basis(ca, mask)) continue;
      if (is_compressed(ca, mask) && is_compressed(cb, mask)) continue;
      ca = compress(ca, mask);
      cb = compress(cb, mask);
      changed = true;
      break;
    }
  }
  return {std::move(ca), std::move(cb)};
}

int max_subgroup_dim(const Z2Set& a) {
  if (!a.contains(0)) return -1;
  return max_subgroup_search(a, Z2Set::of(a.dim(), {0}), 0, 0, 0);
}

StructureReport structure(const Z2Set& a) {
  require_basis(a, "structure");
  StructureCheck check;
  auto report = shape_clauses(a, check);
  if (!check.ok()) throw Error("input is not <<E>>-compressed: " + check.failure);
  return report;
}

StructureCheck check_structure(const Z2Set& a) {
  StructureCheck check;
  if (!contains_standard_basis(a)) {
    check.failure = "E is not inside A";
    return check;
  }
  check.clause[0] = is_downset(a) && is_shift_minimal(a);
  if (!check.clause[0]) check.failure = "clause 1: not a shift-minimal downset";

  const auto d = decompose(a);
  check.clause[1] = max_subgroup_dim(a) == d.h;
  if (!check.clause[1] && check.failure.empty()) {
    check.failure = "clause 2: a larger subgroup than <e_1..e_h> fits in A";
  }

  check.clause[2] = true;
  for (int i = d.h + 1; i <= a.dim(); ++i) {
    if (!is_compressed(a, bits::low_mask(d.h) | unit(i))) check.clause[2] = false;
  }
  if (!check.clause[2] && check.failure.empty()) {
    check.failure = "clause 3: not {1..h, h+i}-compressed";
  }

  shape_clauses(a, check);
  return check;
}

Cell heavy_witness(const Z2Set& h) {
  if (!is_subgroup(h)) throw Error("heavy_witness needs a subgroup");
  Z2Set cur = h;
  std::vector<int> removed;
  std::vector<Z2Set> stack;
  IndexMask live = bits::low_mask(h.dim());
  // Descend: drop coordinates e_i outside the current subgroup.
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= h.dim(); ++i) {
      if ((live & unit(i)) && !cur.contains(unit(i))) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    stack.push_back(cur);
    removed.push_back(pick);
    cur = compress(cur, unit(pick));
    live &= ~unit(pick);
  }
  Cell y = live;
  // Lift back: exactly one of y, y + e_i lies in the parent subgroup.
  for (std::size_t k = stack.size(); k-- > 0;) {
    if (!stack[k].contains(y)) y ^= unit(removed[k]);
  }
  return y;
}

}  // namespace z2sum
