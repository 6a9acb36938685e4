#pragma once

#include <cstdint>
#include <vector>

#include "z2sum/z2set.hpp"

namespace z2sum {

/// A coset basepoint + <basis> of Z_2^n. Basis vectors are kept in reduced
/// echelon form, so they are independent and the representation is unique
/// for a given basepoint.
struct AffineFlat {
  int dim = 0;
  Cell basepoint = 0;
  std::vector<Cell> basis;

  static AffineFlat whole(int dim);

  std::uint64_t size() const { return std::uint64_t{1} << basis.size(); }
  bool contains(Cell x) const;
  /// Points in increasing cell order.
  std::vector<Cell> sorted_points() const;
  Z2Set points() const;
  bool is_whole() const { return static_cast<int>(basis.size()) == dim; }
  bool operator==(const AffineFlat&) const = default;
};

/// Sum of 1-based ranks of the members (rank of cell x is x + 1).
std::uint64_t height(const Z2Set& a);

/// The `count` lexicographically smallest elements of Z_2^dim.
Z2Set initial_segment(std::uint64_t count, int dim);
/// The `count` lexicographically smallest elements of the coset `flat`.
Z2Set initial_segment(std::uint64_t count, const AffineFlat& flat);

/// Smallest coset containing `a`, based at the smallest member.
AffineFlat affine_span(const Z2Set& a);
bool affinely_generates(const Z2Set& a);

/// x -> L x + c over GF(2); `columns[i]` is the image of e_{i+1}.
struct AffineMap {
  int dim = 0;
  std::vector<Cell> columns;
  Cell translation = 0;

  static AffineMap identity(int dim);
  Cell operator()(Cell x) const;
  Z2Set operator()(const Z2Set& a) const;
  bool is_identity() const;
  bool operator==(const AffineMap&) const = default;
};

struct Normalized {
  Z2Set image;
  AffineMap map;
};

/// Finds an invertible affine map T with {0, e_1, ..., e_n} contained in T(a).
/// The affine basis is picked greedily in cell order from the smallest member,
/// so a set already containing the standard basis maps by the identity.
Normalized normalize_to_basis(const Z2Set& a);

/// {0, e_1, ..., e_n}.
Z2Set standard_basis(int dim);
/// H_I = <e_i : i in mask>, the subgroup spanned by the coordinates in `mask`.
Z2Set coordinate_subgroup(int dim, std::uint32_t mask);
bool is_subgroup(const Z2Set& h);

/// D_k^t x Z_2^(n-t): weight of the first t coordinates at most k.
Z2Set hamming_ball_product(int k, int t, int n);

}  // namespace z2sum
