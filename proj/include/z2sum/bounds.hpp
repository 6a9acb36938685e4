#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "z2sum/rational.hpp"
#include "z2sum/z2set.hpp"

namespace z2sum {

/// L(t) = (C(t,2) + t + 1) / (t + 1), the doubling of {0, e_1, ..., e_t}.
Rational doubling_level(int t);
/// (t^2 + t + 1) / (2t), where F switches to its second linear piece.
Rational branch_threshold(int t);

Rational F_of_K(const Rational& k);

struct RationalBreakpoint {
  Rational k;
  Rational f;
  int t = 0;
  int branch = 1;  // 1: slope 2^t/(C(t,2)+t+1); 2: slope 2^(t+1)/(t^2+t+1)
};

/// Left ends of the non-empty linear pieces of F for t = 1..max_t, in
/// increasing K.
std::vector<RationalBreakpoint> F_breakpoints(int max_t);

struct KtildeValue {
  int t = 0;
  int s = 0;
  Rational value;
};

/// Formula value at F~ = 2^a / b >= 1.
KtildeValue Ktilde(std::uint64_t a, std::uint64_t b);
/// Same formula at any rational F~ >= 1. Only values whose reduced numerator
/// is a power of two are of the form 2^a/b.
KtildeValue ktilde_formula(const Rational& ftilde);
bool ktilde_in_domain(const Rational& ftilde);

/// {0, e_1, ..., e_t} in Z_2^t.
Z2Set construct_ipe(int t);
/// {0, e_0, e_1..e_t, e_0+e_1..e_0+e_(t-s)} in Z_2^(t+1), with e_0 stored as
/// coordinate 1 and e_i as coordinate i+1. Size, doubling and span are
/// checked against their closed forms.
Z2Set construct_ipe2(int t, int s);
/// D_k^t x Z_2^(n-t).
Z2Set construct_ball(int k, int t, int n);

struct AbBoundResult {
  int t = 0;
  int k = 0;
  Rational w;
  Rational bound;        // multiple of |G|
  Integer bound_count;   // ceiling of bound * 2^n
};

/// The lower bound on |A+B| for <A> = G, with |A| = alpha |G| and
/// |B| = beta |G|. Without an override t is the largest t with
/// alpha <= (t+1)/2^t; an override must satisfy (t+2)/2^(t+1) < alpha.
AbBoundResult ab_bound_fraction(const Rational& alpha, const Rational& beta,
                                std::optional<int> t_override = std::nullopt);
AbBoundResult ab_lower_bound(int n, std::uint64_t size_a, std::uint64_t size_b,
                             std::optional<int> t_override = std::nullopt);
/// The bound evaluated at a fixed t with no admissibility check on alpha;
/// used to compare the codimension cases against each other.
AbBoundResult ab_bound_at(int t, const Rational& beta);
int ab_default_t(const Rational& alpha);

/// (m+2) / 2^(m+1).
Rational repeated_threshold(int m);
/// D_1^(m+1) x Z_2^(n-m-1); every one of m copies sits exactly at the threshold.
Z2Set repeated_construction(int m, int n);

enum class Curve { F, Ktilde, AB };
Curve parse_curve(const std::string& name);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Samples a curve on from, from+step, ..., <= to. For AB the grid is
/// applied to |A|/|G| and |B|/|G| (the latter over (0, 1]); points outside
/// the bound's range are skipped.
Table emit_curve(Curve which, const Rational& from, const Rational& to, const Rational& step);
void write_csv(std::ostream& out, const Table& table);

}  // namespace z2sum
