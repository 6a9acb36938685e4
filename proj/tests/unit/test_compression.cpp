#include <doctest.h>

#include <random>

#include "z2sum/bits.hpp"
#include "z2sum/compression.hpp"
#include "z2sum/gf2core.hpp"
#include "z2sum/sumset.hpp"

using namespace z2sum;

namespace {

constexpr Cell e1 = unit(1), e2 = unit(2), e3 = unit(3), e4 = unit(4);

Z2Set random_set(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.95)(rng));
  Z2Set s(n);
  for (std::uint64_t x = 0; x < s.universe(); ++x) {
    if (coin(rng)) s.insert(static_cast<Cell>(x));
  }
  return s;
}

}  // namespace

TEST_CASE("index masks") {
  CHECK(index_mask(4, {1, 3}) == 0b0101);
  CHECK_THROWS_AS(index_mask(3, {4}), Error);
  CHECK_THROWS_AS(index_mask(3, {0}), Error);
  CHECK_THROWS_AS(check_index_mask(2, 0b100), Error);
}

TEST_CASE("single compressions") {
  const Z2Set a = Z2Set::of(4, {0, e1, e2, e3, e4});
  const IndexMask i123 = index_mask(4, {1, 2, 3});
  const Z2Set c = compress(a, i123);
  CHECK(c == Z2Set::of(4, {0, e1, e2, e1 | e2, e4}));
  // The standard basis is lost: e_3 moved to e_1 + e_2.
  CHECK_FALSE(keeps_basis(a, i123));
  CHECK_FALSE(is_compressed(a, i123));
  CHECK(is_compressed(c, i123));

  for (std::uint64_t size = 0; size <= 16; ++size) {
    const Z2Set seg = initial_segment(size, 4);
    for (IndexMask m = 0; m < 16; ++m) {
      CHECK(compress(seg, m) == seg);
      CHECK(is_compressed(seg, m));
    }
  }

  const Z2Set full_coset = Z2Set::of(3, {e2, e1 | e2});
  CHECK(compress(full_coset, index_mask(3, {1})) == full_coset);
  CHECK_FALSE(is_compressed(Z2Set::of(3, {e1}), index_mask(3, {1})));
}

TEST_CASE("down-pushes and shifts") {
  CHECK(push_down(Z2Set::of(3, {e1}), 1) == Z2Set::of(3, {0}));
  CHECK(shift(Z2Set::of(3, {e2, e1}), 1, 2) == Z2Set::of(3, {e2, e1}));
  CHECK(shift(Z2Set::of(3, {e2, e2 | e3}), 1, 2) == Z2Set::of(3, {e1, e1 | e3}));
  CHECK_THROWS_AS(shift(Z2Set(3), 2, 2), Error);
  CHECK(is_downset(hamming_ball_product(2, 4, 4)));
  CHECK(is_shift_minimal(hamming_ball_product(2, 4, 4)));
  CHECK_FALSE(is_shift_minimal(Z2Set::of(3, {0, e2})));
}

TEST_CASE("compression properties on random sets") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    const Z2Set a = random_set(n, rng);
    const IndexMask mask = static_cast<IndexMask>(rng()) & bits::low_mask(n);
    const Z2Set c = compress(a, mask);
    CHECK(c.size() == a.size());
    CHECK(is_compressed(c, mask));
    CHECK(compress(c, mask) == c);
    CHECK(height(c) <= height(a));
    CHECK((height(c) == height(a)) == is_compressed(a, mask));
    CHECK(is_compressed(c, mask & static_cast<IndexMask>(rng())));
    const Z2Set bigger = a | random_set(n, rng);
    CHECK(c.is_subset_of(compress(bigger, mask)));
    const Z2Set b = random_set(n, rng);
    CHECK(sum(c, compress(b, mask)).is_subset_of(compress(sum(a, b), mask)));
  }
}

TEST_CASE("index sets by size") {
  const auto& order = index_sets_by_size(3);
  REQUIRE(order.size() == 8);
  CHECK(order.front() == 0);
  CHECK(order.back() == 7);
  for (std::size_t i = 1; i < order.size(); ++i) {
    CHECK(bits::weight(order[i - 1]) <= bits::weight(order[i]));
  }
}

TEST_CASE("E-compression fixpoints") {
  const Z2Set ipe = standard_basis(4);
  CHECK(e_compress(ipe) == ipe);
  CHECK(is_e_compressed(ipe));
  CHECK(e_compress(Z2Set::full(4)) == Z2Set::full(4));

  const Z2Set plane_plus = Z2Set::of(3, {0, e1, e2, e1 | e2, e3});
  CHECK(e_compress(plane_plus) == plane_plus);
  const auto r = structure(plane_plus);
  CHECK(r.h == 2);
  CHECK(r.m == 1);
  CHECK(r.sizes == std::vector<std::uint64_t>{1});

  CHECK_THROWS_AS(e_compress(Z2Set::of(3, {0, e1, e2})), Error);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const Z2Set a = random_set(n, rng) | standard_basis(n);
    const Z2Set c = e_compress(a);
    CHECK(c.size() == a.size());
    CHECK(contains_standard_basis(c));
    CHECK(is_e_compressed(c));
    const auto check = check_structure(c);
    CHECK_MESSAGE(check.ok(), check.failure);
  }
}

TEST_CASE("joint compression") {
  const Z2Set e = standard_basis(4);
  auto [a0, b0] = pair_compress(e, Z2Set::of(4, {0}));
  CHECK(a0 == e);
  CHECK(b0 == Z2Set::of(4, {0}));
  auto [a1, b1] = pair_compress(e, e);
  CHECK(a1 == e);
  CHECK(b1 == e);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Z2Set a = random_set(4, rng) | e;
    Z2Set b = random_set(4, rng);
    if (b.empty()) b.insert(0);
    const auto [ca, cb] = pair_compress(a, b);
    CHECK(ca.size() == a.size());
    CHECK(cb.size() == b.size());
    CHECK(contains_standard_basis(ca));
    CHECK(sum(ca, cb).size() <= sum(a, b).size());
    for (IndexMask m : index_sets_by_size(4)) {
      if (keeps_basis(ca, m)) {
        CHECK(is_compressed(ca, m));
        CHECK(is_compressed(cb, m));
      }
    }
  }
}

TEST_CASE("structure reports") {
  const auto ipe = structure(standard_basis(4));
  CHECK(ipe.h == 1);
  CHECK(ipe.m == 3);
  CHECK(ipe.sizes == std::vector<std::uint64_t>{1, 1, 1});

  const auto full = structure(Z2Set::full(3));
  CHECK(full.h == 3);
  CHECK(full.m == 0);
  CHECK(full.parts.empty());

  const Z2Set ball = Z2Set::of(3, {0, e1, e2, e1 | e2, e3, e3 | e1});
  const auto r = structure(ball);
  CHECK(r.h == 2);
  CHECK(r.m == 1);
  CHECK(r.sizes == std::vector<std::uint64_t>{2});

  CHECK(max_subgroup_dim(Z2Set::of(3, {e1, e2})) == -1);
  CHECK(max_subgroup_dim(Z2Set::of(3, {0, e1, e2, e3})) == 1);
  CHECK(max_subgroup_dim(Z2Set::of(3, {0, e1, e2 | e3, e1 | e2 | e3})) == 2);

  const Z2Set shuffled = Z2Set::of(3, {0, e1, e2, e3, e2 | e3});
  CHECK_FALSE(check_structure(shuffled).ok());
  CHECK_THROWS_AS(structure(shuffled), Error);
}

TEST_CASE("heavy witnesses") {
  const Cell w1 = heavy_witness(Z2Set::of(3, {0, e1 | e2}));
  CHECK(w1 == (e1 | e2));
  CHECK(heavy_witness(Z2Set::full(5)) == 31);
  const Z2Set h = Z2Set::of(3, {0, e1 | e3, e2 | e3, e1 | e2});
  const Cell w = heavy_witness(h);
  CHECK(h.contains(w));
  CHECK(bits::weight(w) >= 2);
  CHECK_THROWS_AS(heavy_witness(Z2Set::of(3, {0, e1, e2})), Error);
}
