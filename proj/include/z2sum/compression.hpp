#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "z2sum/z2set.hpp"

namespace z2sum {

/// An index set I of [n] as a coordinate mask: bit i-1 stands for i.
using IndexMask = std::uint32_t;

IndexMask index_mask(int dim, std::initializer_list<int> indices);
IndexMask index_mask(int dim, const std::vector<int>& indices);
/// Throws unless `mask` only uses coordinates 1..dim.
void check_index_mask(int dim, IndexMask mask);

/// C_I(A): in every H_I-coset, the same number of points moved to the
/// lexicographically first positions.
Z2Set compress(const Z2Set& a, IndexMask mask);
bool is_compressed(const Z2Set& a, IndexMask mask);

/// T_i and S_ij on the set-system view of A (a cell is the set of its 1-bits).
Z2Set push_down(const Z2Set& f, int i);
Z2Set shift(const Z2Set& f, int i, int j);

bool is_downset(const Z2Set& a);
/// Invariant under every S_ij with i < j.
bool is_shift_minimal(const Z2Set& a);

/// All I sorted by |I|, then by mask value. Cached per dimension.
const std::vector<IndexMask>& index_sets_by_size(int dim);

/// E is kept by C_I, i.e. |A cap H_I| > 2^(|I|-1) (every I-free e_j sits
/// first in its own coset, so only H_I itself can lose a basis point).
/// Requires E within A.
bool keeps_basis(const Z2Set& a, IndexMask mask);

/// {0, e_1, ..., e_n} within A.
bool contains_standard_basis(const Z2Set& a);

/// Repeatedly applies an E-keeping C_I that changes A, scanning I by size and
/// restarting after each change, until no such I is left.
Z2Set e_compress(const Z2Set& a);
bool is_e_compressed(const Z2Set& a);

/// Joint version: C_I is applied to both sets whenever it keeps E in A and
/// changes A or B. Returns the pair at the joint fixpoint.
std::pair<Z2Set, Z2Set> pair_compress(const Z2Set& a, const Z2Set& b);

/// Largest dimension of a subgroup inside A, or -1 when 0 is not in A.
int max_subgroup_dim(const Z2Set& a);

struct StructureReport {
  int h = 0;
  int m = 0;
  Z2Set subgroup;
  std::vector<Z2Set> parts;
  std::vector<std::uint64_t> sizes;
};

/// Decomposes an <<E>>-compressed set. Throws if the decomposition does not
/// have the expected shape, which means the input was not compressed.
StructureReport structure(const Z2Set& a);

struct StructureCheck {
  std::array<bool, 7> clause{};
  bool parts_non_increasing = false;
  std::string failure;  // first violated clause, empty when all hold
  bool ok() const { return failure.empty(); }
};

/// Evaluates every clause of the structure description without throwing.
StructureCheck check_structure(const Z2Set& a);

/// A member of the subgroup H of weight at least dim H, found by
/// compressing away coordinates e_i outside H one at a time.
Cell heavy_witness(const Z2Set& h);

}  // namespace z2sum
