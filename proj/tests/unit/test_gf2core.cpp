#include <doctest.h>

#include <random>
#include <sstream>

#include "z2sum/gf2core.hpp"
#include "z2sum/z2set.hpp"

using namespace z2sum;

namespace {
constexpr Cell e1 = unit(1), e2 = unit(2), e3 = unit(3), e4 = unit(4);
}

TEST_CASE("cells encode lexicographic order") {
  CHECK(e1 == 1);
  CHECK(e3 == 4);
  // e_3 is the fifth element of Z_2^3: 0, e1, e2, e1+e2, e3.
  CHECK(height(Z2Set::of(3, {e3})) == 5);
  CHECK(height(Z2Set::of(3, {0})) == 1);
  CHECK(height(Z2Set::of(3, {0, e1, e2})) == 6);
}

TEST_CASE("set basics") {
  Z2Set a(3);
  CHECK(a.empty());
  a.insert(5);
  a.insert(5);
  CHECK(a.size() == 1);
  CHECK(a.front() == 5);
  CHECK_THROWS_AS(a.insert(8), Error);
  CHECK(Z2Set::full(4).size() == 16);
  CHECK(Z2Set::of(3, {1, 2}).translate(3) == Z2Set::of(3, {1, 2}));
  CHECK_THROWS_AS(require_same_dim(Z2Set(2), Z2Set(3)), Error);
  CHECK(Z2Set::encoding_less(Z2Set::of(3, {0, 5}), Z2Set::of(3, {0, 6})));
}

TEST_CASE("z2set file format") {
  const Z2Set a = Z2Set::of(4, {0, 3, 9, 15});
  std::stringstream io;
  write_z2set(io, a);
  CHECK(io.str() == "# z2set v1\nn=4\n0\n3\n9\n15\n");
  CHECK(read_z2set(io) == a);

  std::istringstream shuffled("# z2set v1\nn=3\n7\n\n2\n");
  CHECK(read_z2set(shuffled) == Z2Set::of(3, {2, 7}));

  std::istringstream dup("# z2set v1\nn=3\n1\n1\n");
  CHECK_THROWS_AS(read_z2set(dup), Error);
  std::istringstream range("# z2set v1\nn=2\n4\n");
  CHECK_THROWS_AS(read_z2set(range), Error);
  std::istringstream header("z2set\nn=2\n");
  CHECK_THROWS_AS(read_z2set(header), Error);
}

TEST_CASE("initial segments") {
  CHECK(initial_segment(3, 5) == Z2Set::of(5, {0, e1, e2}));
  CHECK(initial_segment(0, 3).empty());
  AffineFlat coset{4, e4, {e1, e2, e3}};
  CHECK(initial_segment(4, coset) == Z2Set::of(4, {e4, e4 | e1, e4 | e2, e4 | e1 | e2}));
  CHECK_THROWS_AS(initial_segment(9, 3), Error);
}

TEST_CASE("affine span") {
  CHECK(affine_span(standard_basis(4)).is_whole());
  const auto two = affine_span(Z2Set::of(2, {e1, e2}));
  CHECK(two.size() == 2);
  CHECK(two.basepoint == e1);
  CHECK(two.basis == std::vector<Cell>{e1 | e2});
  const auto h12 = affine_span(Z2Set::of(3, {0, e1, e2, e1 | e2}));
  CHECK(h12.points() == coordinate_subgroup(3, 0b011));
  CHECK_FALSE(affinely_generates(Z2Set::of(3, {0, e1, e2, e1 | e2})));
  CHECK(affinely_generates(standard_basis(3)));
}

TEST_CASE("normalization onto the standard basis") {
  const Z2Set e = standard_basis(4);
  const auto same = normalize_to_basis(e | Z2Set::of(4, {15}));
  CHECK(same.map.is_identity());

  const auto small = normalize_to_basis(Z2Set::of(2, {e1, 0, e1 | e2}));
  CHECK(small.image.size() == 3);
  CHECK(standard_basis(2).is_subset_of(small.image));

  // 1, 2, 4, 7 are affinely dependent (1+2+4+7 = 0), so they span a plane.
  CHECK_THROWS_AS(normalize_to_basis(Z2Set::of(3, {1, 2, 4, 7})), Error);
  const auto basis = normalize_to_basis(Z2Set::of(3, {1, 2, 4, 6}));
  CHECK(basis.image == standard_basis(3));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Z2Set a(5);
    while (!affinely_generates(a)) a.insert(static_cast<Cell>(rng() % 32));
    const auto norm = normalize_to_basis(a);
    CHECK(norm.image.size() == a.size());
    CHECK(standard_basis(5).is_subset_of(norm.image));
    CHECK(norm.map(a) == norm.image);
  }
}

TEST_CASE("subgroups and balls") {
  CHECK(is_subgroup(coordinate_subgroup(4, 0b1010)));
  CHECK_FALSE(is_subgroup(Z2Set::of(3, {0, e1, e2})));
  CHECK(hamming_ball_product(1, 3, 3).size() == 4);
  CHECK(hamming_ball_product(1, 2, 3).size() == 6);
  CHECK(hamming_ball_product(2, 4, 4).size() == 11);
  CHECK(hamming_ball_product(0, 2, 3) == Z2Set::of(3, {0, e3}));
}
