#include <doctest.h>

#include <thread>
#include <vector>

#include "z2sum/config.hpp"
#include "z2sum/hopf_stiefel.hpp"

using namespace z2sum;

TEST_CASE("small values") {
  for (std::uint64_t b = 1; b <= 40; ++b) CHECK(hs(1, b) == b);
  CHECK(hs(3, 3) == 4);
  CHECK(hs(5, 3) == 7);
  CHECK(hs_oracle(3, 2) == 4);
  CHECK(hs_oracle(4, 3) == 4);
  for (int k = 0; k <= 8; ++k) {
    const std::uint64_t p = std::uint64_t{1} << k;
    CHECK(hs_oracle(p, p) == p);
  }
}

TEST_CASE("recursion matches the segment oracle") {
  for (std::uint64_t a = 1; a <= 96; ++a) {
    for (std::uint64_t b = 1; b <= 96; ++b) REQUIRE(hs(a, b) == hs_oracle(a, b));
  }
}

TEST_CASE("dyadic rules") {
  for (int k = 0; k <= 10; ++k) {
    const std::uint64_t p = std::uint64_t{1} << k;
    for (std::uint64_t b = 1; b <= p; ++b) REQUIRE(hs(p, b) == p);
  }
  for (std::uint64_t a = 1; a <= 64; ++a) {
    for (std::uint64_t b = 1; b <= 64; ++b) {
      CHECK(hs(a, b) == hs(b, a));
      CHECK(hs(a, b) >= std::max(a, b));
      CHECK(hs(a, b) <= a + b - 1);
    }
  }
  CHECK(hs(std::uint64_t{1} << 40, 3) == std::uint64_t{1} << 40);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(hs(0, 3), Error);
  CHECK_THROWS_AS(hs_oracle(1, 70000), Error);
}

TEST_CASE("memo is thread safe") {
  std::vector<std::thread> pool;
  std::vector<std::uint64_t> totals(4, 0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([t, &totals] {
      for (std::uint64_t a = 1; a <= 300; ++a) totals[t] += hs(a + 1000 * t, 301 - a);
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t) {
    std::uint64_t again = 0;
    for (std::uint64_t a = 1; a <= 300; ++a) again += hs(a + 1000 * t, 301 - a);
    CHECK(again == totals[t]);
  }
}
