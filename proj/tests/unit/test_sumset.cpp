#include <doctest.h>

#include <random>

#include "z2sum/bounds.hpp"
#include "z2sum/gf2core.hpp"
#include "z2sum/sumset.hpp"

using namespace z2sum;

namespace {

constexpr Cell e1 = unit(1), e2 = unit(2);

Z2Set random_set(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Z2Set s(n);
  for (std::uint64_t x = 0; x < s.universe(); ++x) {
    if (coin(rng)) s.insert(static_cast<Cell>(x));
  }
  return s;
}

}  // namespace

TEST_CASE("small sums") {
  const Z2Set a = Z2Set::of(2, {0, e1});
  const Z2Set b = Z2Set::of(2, {0, e2});
  CHECK(sum_naive(a, b) == Z2Set::full(2));
  CHECK(sum_transform(a, b) == Z2Set::full(2));

  const Z2Set ipe = construct_ipe(3);
  CHECK(sum_naive(ipe, ipe).size() == 7);

  const Z2Set d1 = hamming_ball_product(1, 2, 3);
  const Z2Set d0 = hamming_ball_product(0, 2, 3);
  CHECK(sum_naive(d1, d0) == d1);
  CHECK(sum_transform(d1, d0) == d1);
  CHECK(sum(d1, d0).size() == 6);
}

TEST_CASE("representation counts") {
  std::mt19937_64 rng(3);
  const Z2Set a = random_set(8, 0.3, rng);
  const Z2Set b = random_set(8, 0.6, rng);
  const auto self = representation_counts(a, a);
  CHECK(self[0] == static_cast<std::int64_t>(a.size()));
  const auto counts = representation_counts(a, b);
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  CHECK(total == static_cast<std::int64_t>(a.size() * b.size()));
}

TEST_CASE("transform agrees with pair enumeration, exhaustive n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t sets = 1U << (1U << n);
    for (std::uint32_t ma = 0; ma < sets; ++ma) {
      for (std::uint32_t mb = 0; mb < sets; ++mb) {
        Z2Set a(n), b(n);
        for (Cell x = 0; x < (1U << n); ++x) {
          if ((ma >> x) & 1U) a.insert(x);
          if ((mb >> x) & 1U) b.insert(x);
        }
        REQUIRE(sum_naive(a, b) == sum_transform(a, b));
      }
    }
  }
}

TEST_CASE("transform agrees with pair enumeration, random n <= 16") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 13;
    const Z2Set a = random_set(n, 0.02 + 0.3 * (trial % 3), rng);
    const Z2Set b = random_set(n, 0.05, rng);
    REQUIRE(sum_naive(a, b) == sum_transform(a, b));
  }
}

TEST_CASE("algebraic laws") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    const Z2Set a = random_set(n, 0.2, rng);
    const Z2Set b = random_set(n, 0.3, rng);
    const Z2Set c = random_set(n, 0.1, rng);
    CHECK(sum(a, b) == sum(b, a));
    CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
    CHECK(sum(a, Z2Set::of(n, {0})) == a);
    if (a.size() + b.size() > a.universe()) CHECK(sum(a, b) == Z2Set::full(n));
  }
}

TEST_CASE("dispatch rule") {
  std::mt19937_64 rng(1);
  const Z2Set sparse = random_set(12, 0.001, rng);
  const Z2Set dense = random_set(12, 0.5, rng);
  CHECK_FALSE(prefers_transform(sparse, sparse));
  CHECK(prefers_transform(dense, dense));
}

TEST_CASE("doubling and spanning constants") {
  const auto group = constants(coordinate_subgroup(4, 0b0110));
  CHECK(group.doubling == 1);
  CHECK(group.spanning == 1);
  const auto ipe = constants(construct_ipe(4));
  CHECK(ipe.doubling == Rational(11, 5));
  CHECK(ipe.spanning == Rational(16, 5));
  const Z2Set ipe2 = construct_ipe2(3, 1);
  CHECK(ipe2.size() == 7);
  CHECK(sum(ipe2, ipe2).size() == 14);
  const auto c = constants(ipe2);
  CHECK(c.doubling == 2);
  CHECK(c.spanning == Rational(16, 7));
  CHECK_THROWS_AS(constants(Z2Set(3)), Error);
}
