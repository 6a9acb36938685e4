#include "z2sum/bounds.hpp"

#include <bit>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "z2sum/gf2core.hpp"
#include "z2sum/sumset.hpp"

namespace z2sum {

namespace {

constexpr std::size_t kMaxTableRows = 1000000;

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Rational pow2q(int k) { return Rational(pow2(static_cast<unsigned long>(k))); }

// sum_{i<=k} C(t,i)
Integer head_sum(int t, int k) {
  Integer s = 0;
  for (int i = 0; i <= k; ++i) s += binomial(t, i);
  return s;
}

std::string decimal(const Rational& r) {
  std::ostringstream out;
  out << std::setprecision(12) << to_double(r);
  return out.str();
}

// Largest t >= 1 with alpha <= (t+1)/2^t. The right side decreases in t.
int largest_t(const Rational& alpha) {
  int t = 1;
  while (alpha <= q(t + 2) / pow2q(t + 1)) ++t;
  return t;
}

void require_table_step(const Rational& from, const Rational& to, const Rational& step) {
  if (step <= 0) throw Error("table step must be positive");
  if (from > to) throw Error("table range is empty: from > to");
  const Rational count = (to - from) / step;
  if (count > Rational(static_cast<unsigned long>(kMaxTableRows))) {
    throw Error("table would exceed " + std::to_string(kMaxTableRows) + " rows");
  }
}

}  // namespace

Rational doubling_level(int t) {
  if (t < 1) throw Error("doubling level needs t >= 1");
  return Rational(binomial(t, 2) + t + 1) / q(t + 1);
}

Rational branch_threshold(int t) {
  if (t < 1) throw Error("branch threshold needs t >= 1");
  return q(static_cast<long>(t) * t + t + 1, 2L * t);
}

Rational F_of_K(const Rational& k) {
  if (k < 1) throw Error("F(K) needs K >= 1, got " + to_string(k));
  int t = 1;
  while (k >= doubling_level(t + 1)) ++t;
  if (k < branch_threshold(t)) {
    return pow2q(t) / Rational(binomial(t, 2) + t + 1) * k;
  }
  return pow2q(t + 1) / q(static_cast<long>(t) * t + t + 1) * k;
}

std::vector<RationalBreakpoint> F_breakpoints(int max_t) {
  std::vector<RationalBreakpoint> out;
  for (int t = 1; t <= max_t; ++t) {
    const Rational lo = doubling_level(t);
    out.push_back({lo, F_of_K(lo), t, 1});
    const Rational mid = branch_threshold(t);
    if (mid < doubling_level(t + 1)) out.push_back({mid, F_of_K(mid), t, 2});
  }
  return out;
}

KtildeValue ktilde_formula(const Rational& ftilde) {
  if (ftilde < 1) throw Error("K~ needs F~ >= 1, got " + to_string(ftilde));
  KtildeValue v;
  // The pieces [2^t/(t+1-s/2), 2^t/(t+1-(s+1)/2)) tile [1, inf) in order.
  for (int t = 1;; ++t) {
    for (int s = 0; s < t; ++s) {
      const Rational hi = pow2q(t) / (q(t + 1) - q(s + 1, 2));
      if (ftilde < hi) {
        v.t = t;
        v.s = s;
        v.value = (Rational(binomial(t, 2) + t + 1) - Rational(binomial(s, 2)) / 2) / pow2q(t) * ftilde;
        return v;
      }
    }
  }
}

bool ktilde_in_domain(const Rational& ftilde) {
  return ftilde >= 1 && mpz_popcount(ftilde.get_num_mpz_t()) == 1;
}

KtildeValue Ktilde(std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw Error("K~ needs b >= 1");
  if (a > 4096) throw Error("K~ exponent too large");
  Rational f(pow2(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(b)));
  f.canonicalize();
  if (f < 1) throw Error("K~ needs 2^a >= b");
  return ktilde_formula(f);
}

Z2Set construct_ipe(int t) {
  if (t < 0 || t > kMaxDim) throw Error("ipe needs 0 <= t <= " + std::to_string(kMaxDim));
  Z2Set a(t);
  a.insert(0);
  for (int i = 1; i <= t; ++i) a.insert(unit(i));
  return a;
}

Z2Set construct_ipe2(int t, int s) {
  if (s < 0 || s >= t || t + 1 > kMaxDim) throw Error("ipe2 needs 0 <= s < t");
  const int n = t + 1;
  const Cell e0 = unit(1);
  auto e = [](int i) { return unit(i + 1); };
  Z2Set a(n);
  a.insert(0);
  a.insert(e0);
  for (int i = 1; i <= t; ++i) a.insert(e(i));
  for (int i = 1; i <= t - s; ++i) a.insert(e0 | e(i));

  const std::uint64_t want_size = 2 * static_cast<std::uint64_t>(t + 1) - s;
  const Integer want_sum = 2 * (binomial(t, 2) + t + 1) - binomial(s, 2);
  const std::uint64_t got_sum = sum(a, a).size();
  if (a.size() != want_size || Integer(static_cast<unsigned long>(got_sum)) != want_sum ||
      affine_span(a).size() != (std::uint64_t{1} << n)) {
    throw Error("ipe2 construction does not match its closed forms");
  }
  return a;
}

Z2Set construct_ball(int k, int t, int n) { return hamming_ball_product(k, t, n); }

int ab_default_t(const Rational& alpha) {
  if (alpha <= 0) throw Error("|A| must be positive");
  return largest_t(alpha);
}

AbBoundResult ab_bound_at(int t, const Rational& beta) {
  if (t < 1) throw Error("t must be >= 1");
  if (beta <= 0 || beta > 1) throw Error("|B|/|G| must lie in (0, 1]");
  AbBoundResult r;
  r.t = t;
  const Rational u = beta * pow2q(t);
  // Smallest k with u <= sum_{i<=k} C(t,i) + C(t-1,k); these ranges tile (0, 2^t].
  for (int k = 0; k < t; ++k) {
    const Integer base = head_sum(t, k);
    const Integer width = binomial(t - 1, k);
    if (u <= Rational(base + width)) {
      r.k = k;
      r.w = (u - Rational(base)) / Rational(width);
      r.bound = (Rational(head_sum(t, k + 1)) + r.w * Rational(binomial(t - 1, k + 1))) / pow2q(t);
      return r;
    }
  }
  throw Error("no (k, w) representation for |B|/|G| = " + to_string(beta));
}

AbBoundResult ab_bound_fraction(const Rational& alpha, const Rational& beta, std::optional<int> t_override) {
  if (alpha <= 0) throw Error("|A| must be positive");
  if (alpha > q(3, 4)) throw Error("the bound needs |A| <= 3/4 |G|");
  if (beta <= 0) throw Error("|B| must be positive");
  if (beta > 1) throw Error("|B| exceeds |G|");
  int t = largest_t(alpha);
  if (t_override) {
    const int forced = *t_override;
    if (forced < 1 || !(q(forced + 2) / pow2q(forced + 1) < alpha)) {
      throw Error("t=" + std::to_string(forced) + " needs (t+2)/2^(t+1) < |A|/|G|");
    }
    t = forced;
  }
  return ab_bound_at(t, beta);
}

AbBoundResult ab_lower_bound(int n, std::uint64_t size_a, std::uint64_t size_b, std::optional<int> t_override) {
  if (n < 0 || n > kMaxDim) throw Error("dimension out of range");
  const Rational g = pow2q(n);
  if (size_b == 0) throw Error("B must be non-empty");
  Rational alpha = Rational(Integer(static_cast<unsigned long>(size_a))) / g;
  Rational beta = Rational(Integer(static_cast<unsigned long>(size_b))) / g;
  alpha.canonicalize();
  beta.canonicalize();
  auto r = ab_bound_fraction(alpha, beta, t_override);
  r.bound_count = ceil_integer(r.bound * g);
  return r;
}

Rational repeated_threshold(int m) {
  if (m < 1) throw Error("repeated threshold needs m >= 1");
  return q(m + 2) / pow2q(m + 1);
}

Z2Set repeated_construction(int m, int n) {
  if (m < 1 || m + 1 > n) throw Error("repeated construction needs 1 <= m and m + 1 <= n");
  return hamming_ball_product(1, m + 1, n);
}

Curve parse_curve(const std::string& name) {
  if (name == "F") return Curve::F;
  if (name == "Ktilde") return Curve::Ktilde;
  if (name == "ab") return Curve::AB;
  throw Error("unknown curve '" + name + "' (expected F, Ktilde or ab)");
}

Table emit_curve(Curve which, const Rational& from, const Rational& to, const Rational& step) {
  require_table_step(from, to, step);
  Table table;
  switch (which) {
    case Curve::F:
      if (from < 1) throw Error("F is defined for K >= 1");
      table.header = {"K", "F", "K_approx", "F_approx"};
      for (Rational k = from; k <= to; k += step) {
        const Rational f = F_of_K(k);
        table.rows.push_back({to_string(k), to_string(f), decimal(k), decimal(f)});
      }
      break;
    case Curve::Ktilde:
      if (from < 1) throw Error("K~ is defined for F~ >= 1");
      table.header = {"Ftilde", "Ktilde", "in_domain", "t", "s", "Ftilde_approx", "Ktilde_approx"};
      for (Rational f = from; f <= to; f += step) {
        const auto v = ktilde_formula(f);
        table.rows.push_back({to_string(f), to_string(v.value), ktilde_in_domain(f) ? "1" : "0",
                              std::to_string(v.t), std::to_string(v.s), decimal(f), decimal(v.value)});
      }
      break;
    case Curve::AB:
      table.header = {"A_frac", "B_frac", "bound_frac", "t", "k", "w",
                      "A_approx", "B_approx", "bound_approx"};
      {
        const Rational b_steps = Rational(1) / step;
        if (b_steps * (to - from) / step > Rational(static_cast<unsigned long>(kMaxTableRows))) {
          throw Error("table would exceed " + std::to_string(kMaxTableRows) + " rows");
        }
      }
      for (Rational a = from; a <= to; a += step) {
        if (a <= 0 || a > q(3, 4)) continue;
        for (Rational b = step; b <= 1; b += step) {
          const auto r = ab_bound_fraction(a, b);
          table.rows.push_back({to_string(a), to_string(b), to_string(r.bound), std::to_string(r.t),
                                std::to_string(r.k), to_string(r.w), decimal(a), decimal(b),
                                decimal(r.bound)});
        }
      }
      break;
  }
  return table;
}

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

}  // namespace z2sum
