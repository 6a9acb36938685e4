#include <doctest.h>

#include <cmath>
#include <sstream>

#include "z2sum/bounds.hpp"
#include "z2sum/gf2core.hpp"
#include "z2sum/sumset.hpp"

using namespace z2sum;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7/4") == q(7, 4));
  CHECK(parse_rational("14/8") == q(7, 4));
  CHECK(parse_rational("-3") == q(-3));
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(to_string(q(4, 2)) == "2");
  CHECK(to_fraction(q(2)) == "2/1");
}

TEST_CASE("F spot values") {
  CHECK(F_of_K(q(1)) == 1);
  CHECK(F_of_K(q(7, 4)) == 2);
  CHECK(F_of_K(q(2)) == q(16, 7));
  CHECK(F_of_K(q(11, 5)) == q(16, 5));
  CHECK(F_of_K(q(21, 8)) == 4);
  CHECK(F_of_K(q(15, 8)) == q(15, 7));
  CHECK_THROWS_AS(F_of_K(q(1, 2)), Error);
}

TEST_CASE("F pieces") {
  CHECK(doubling_level(3) == q(7, 4));
  CHECK(branch_threshold(3) == q(13, 6));
  const auto br = F_breakpoints(4);
  // t = 1 and t = 2 contribute one piece each, t = 3 and t = 4 two.
  REQUIRE(br.size() == 6);
  CHECK(br[0].k == 1);
  CHECK(br[2].k == q(7, 4));
  CHECK(br[3].k == q(13, 6));
  CHECK(br[3].branch == 2);
  for (std::size_t i = 0; i + 1 < br.size(); ++i) CHECK(br[i].k < br[i + 1].k);

  // F jumps at 7/4 and 13/6: left limits sit strictly below the values.
  const Rational eps = q(1, 1000000);
  CHECK(F_of_K(q(7, 4) - eps) < q(19, 10));
  CHECK(F_of_K(q(13, 6) - eps) < F_of_K(q(13, 6)) - q(1, 100));
}

TEST_CASE("F stays between the exponential envelopes") {
  const auto br = F_breakpoints(21);
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    if (br[i].t > 20) break;
    const double t = br[i].t;
    auto lower_ratio = [](double k, double f) { return f * 4 * k / std::pow(4.0, k); };
    const double k = to_double(br[i].k);
    const double f = to_double(br[i].f);
    // Left limit of this piece at the next breakpoint.
    const double k_next = to_double(br[i + 1].k);
    const double f_left = to_double(br[i].f / br[i].k * br[i + 1].k);
    CHECK(lower_ratio(k, f) >= 1 - 0.4 / t);
    CHECK(lower_ratio(k_next, f_left) >= 1 - 0.4 / t);
    CHECK(lower_ratio(k, f) / 2 <= 1);
    CHECK(lower_ratio(k_next, f_left) / 2 <= 1);
  }
}

TEST_CASE("K~ values") {
  CHECK(Ktilde(0, 1).value == 1);
  CHECK(Ktilde(0, 1).t == 1);
  const auto two = Ktilde(1, 1);
  CHECK(two.value == q(7, 4));
  CHECK(two.t == 3);
  CHECK(two.s == 0);
  const auto v = Ktilde(4, 7);
  CHECK(v.value == 2);
  CHECK(v.t == 3);
  CHECK(v.s == 1);
  CHECK(Ktilde(4, 5).value == q(11, 5));
  CHECK(ktilde_in_domain(q(16, 7)));
  CHECK_FALSE(ktilde_in_domain(q(5, 2)));
  CHECK_THROWS_AS(Ktilde(1, 3), Error);
  // K~ and F agree at the points realized by independent points.
  for (int t = 1; t <= 10; ++t) {
    const Rational f = Rational(pow2(t), Integer(t + 1));
    CHECK(F_of_K(ktilde_formula(f).value) >= f);
  }
}

TEST_CASE("constructions") {
  CHECK(construct_ipe(3) == standard_basis(3));
  CHECK(constants(construct_ipe(3)).doubling == q(7, 4));
  const Z2Set a = construct_ipe2(3, 1);
  CHECK(a.size() == 7);
  CHECK(sum(a, a).size() == 14);
  CHECK(construct_ball(1, 2, 3).size() == 6);
  for (int t = 1; t <= 7; ++t) {
    for (int s = 0; s < t; ++s) {
      const Z2Set b = construct_ipe2(t, s);
      REQUIRE(b.size() == static_cast<std::uint64_t>(2 * (t + 1) - s));
      REQUIRE(affinely_generates(b));
    }
  }
  CHECK_THROWS_AS(construct_ipe2(3, 3), Error);
}

TEST_CASE("AB bound") {
  const auto r1 = ab_lower_bound(3, 5, 2);
  CHECK(r1.t == 2);
  CHECK(r1.k == 0);
  CHECK(r1.w == 0);
  CHECK(r1.bound_count == 6);
  const auto r2 = ab_lower_bound(4, 5, 5);
  CHECK(r2.t == 4);
  CHECK(r2.k == 1);
  CHECK(r2.w == 0);
  CHECK(r2.bound == q(11, 16));
  CHECK(r2.bound_count == 11);
  const auto r3 = ab_lower_bound(4, 5, 1);
  CHECK(r3.k == 0);
  CHECK(r3.bound_count == 5);
  const auto r4 = ab_lower_bound(4, 6, 6);
  CHECK(r4.t == 3);
  CHECK(r4.w == q(-1, 2));
  CHECK(r4.bound_count == 13);
  CHECK_THROWS_AS(ab_lower_bound(4, 13, 2), Error);
  CHECK_THROWS_AS(ab_lower_bound(4, 5, 5, 2), Error);
  CHECK(ab_lower_bound(4, 5, 5, 4).bound == r2.bound);

  // At a boundary between k and k+1 both descriptions give the same value.
  for (int t = 2; t <= 8; ++t) {
    Integer below = 0;
    for (int k = 0; k + 1 < t; ++k) {
      below += binomial(t, k);
      const Rational beta = Rational(below + binomial(t - 1, k)) / Rational(pow2(t));
      const auto at = ab_bound_at(t, beta);
      Integer upto = 0;
      for (int i = 0; i <= k + 1; ++i) upto += binomial(t, i);
      CHECK(at.bound == Rational(upto + binomial(t - 1, k + 1)) / Rational(pow2(t)));
    }
  }
}

TEST_CASE("repeated sums") {
  CHECK(repeated_threshold(1) == q(3, 4));
  CHECK(repeated_threshold(2) == q(1, 2));
  CHECK(repeated_threshold(3) == q(5, 16));
  const Z2Set c = repeated_construction(3, 4);
  CHECK(c.size() == 5);
  CHECK(sum(sum(c, c), c).size() == 15);
  CHECK(repeated_construction(2, 5).size() == 16);
}

TEST_CASE("curve tables") {
  const auto f = emit_curve(Curve::F, q(1), q(2), q(1, 4));
  REQUIRE(f.rows.size() == 5);
  CHECK(f.rows[3][0] == "7/4");
  CHECK(f.rows[3][1] == "2");

  const auto k = emit_curve(parse_curve("Ktilde"), q(2), q(2), q(1));
  REQUIRE(k.rows.size() == 1);
  CHECK(k.rows[0][1] == "7/4");

  const auto ab = emit_curve(parse_curve("ab"), q(1, 8), q(3, 4), q(1, 8));
  bool found = false;
  for (const auto& row : ab.rows) {
    if (row[0] == "1/2" && row[1] == "1/8") {
      CHECK(row[2] == "1/2");
      found = true;
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(parse_curve("G"), Error);
  CHECK_THROWS_AS(emit_curve(Curve::F, q(1), q(2), q(0)), Error);

  // CSV cells re-parse to the exact values.
  std::stringstream csv;
  write_csv(csv, f);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "K,F,K_approx,F_approx");
  while (std::getline(csv, line)) {
    const auto cells = split(line);
    REQUIRE(cells.size() == 4);
    CHECK(F_of_K(parse_rational(cells[0])) == parse_rational(cells[1]));
    CHECK(std::abs(std::stod(cells[3]) - to_double(parse_rational(cells[1]))) < 1e-9);
  }
}
