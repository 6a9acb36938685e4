#pragma once

#include <cstdint>
#include <vector>

#include "z2sum/rational.hpp"
#include "z2sum/z2set.hpp"

namespace z2sum {

/// A + B by enumerating all pairs.
Z2Set sum_naive(const Z2Set& a, const Z2Set& b);

/// r(x) = #{(a, b) : a + b = x}, via the +-1 character transform:
/// transform both indicators, multiply pointwise, transform back, divide by 2^n.
std::vector<std::int64_t> representation_counts(const Z2Set& a, const Z2Set& b);

/// A + B as the support of representation_counts.
Z2Set sum_transform(const Z2Set& a, const Z2Set& b);

/// Picks the transform when |A||B| > 8 n 2^n (and n is within the transform
/// cap), otherwise the pair enumeration.
Z2Set sum(const Z2Set& a, const Z2Set& b);
bool prefers_transform(const Z2Set& a, const Z2Set& b);

struct SumStats {
  Rational doubling;  // |A+A| / |A|
  Rational spanning;  // |<A>| / |A|
};

SumStats constants(const Z2Set& a);

}  // namespace z2sum
