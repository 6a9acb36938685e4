#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "z2sum/rational.hpp"
#include "z2sum/z2set.hpp"

namespace z2sum {

/// delta F: add one coordinate to a member. Never contains 0.
Z2Set upper_shadow(const Z2Set& f);
/// partial F: remove one coordinate from a member.
Z2Set lower_shadow(const Z2Set& f);

/// (F-, F+) over Z_2^(n-1): members without e_n, and members with e_n
/// with e_n removed.
std::pair<Z2Set, Z2Set> classify_by_top(const Z2Set& f);

/// Members with no proper superset in F (the maximal elements).
Z2Set maximal_elements(const Z2Set& f);
/// Non-members all of whose lower neighbours are members.
Z2Set addable_elements(const Z2Set& f);
/// Smallest downset containing F.
Z2Set downward_closure(const Z2Set& f);

struct DownsetFamily {
  int dim = 0;
  std::vector<Z2Set> sets;
};

struct FamilyReport {
  bool downset_ok = false;
  bool antichain_ok = false;  // C_j contains the lower shadow of C_i for all i, j
  Rational mean_size;
  Rational mean_shadow;
};

FamilyReport family_check(const DownsetFamily& fam);

struct HarperBound {
  int k = 0;
  Rational p;
  Rational bound;
  Integer count;  // ceiling of bound
};

/// |A| = sum_{i>k} C(n,i) + p C(n,k) with the smallest k in [1, n] giving
/// 0 <= p <= 1 (k = 0 when |A| = 2^n); bound is sum_{i>=k} C(n,i) + p C(n,k-1).
HarperBound harper_bound(int n, std::uint64_t size);

struct ShadowBound {
  int k = 0;
  Rational p;
  Rational bound;
};

/// avg = sum_{i<k} C(m,i) + p C(m,k) with k >= 0 and 0 <= p < 1; the bound
/// is sum_{1<=i<=k} C(m,i) + p C(m,k+1).
ShadowBound avg_shadow_bound_detail(int m, const Rational& avg);
Rational avg_shadow_bound(int m, const Rational& avg);

/// Every downset of Z_2^n (n <= 5), built from pairs (D-, D+) with D+ within D-.
std::vector<Z2Set> all_downsets(int n);
std::vector<Z2Set> shift_minimal_downsets(int n);

/// A random downset: the closure of a few random points, with the point
/// count itself random.
Z2Set random_downset(int n, std::mt19937_64& rng);

/// A family that satisfies the antichain condition by construction: a base
/// downset D, with each member D plus some addable points or D minus some
/// maximal points. Mixed draws are checked and discarded on failure, so this
/// may take several attempts internally.
DownsetFamily random_antichain_family(int m, int l, std::mt19937_64& rng);

}  // namespace z2sum
