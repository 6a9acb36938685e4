#include "z2sum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "z2sum/bits.hpp"
#include "z2sum/bounds.hpp"
#include "z2sum/compression.hpp"
#include "z2sum/gf2core.hpp"
#include "z2sum/hopf_stiefel.hpp"
#include "z2sum/isoperimetry.hpp"
#include "z2sum/kernels.hpp"
#include "z2sum/partitions.hpp"
#include "z2sum/sumset.hpp"

namespace z2sum {

namespace {

constexpr std::size_t kMaxFailureFiles = 20;

class Recorder {
 public:
  Recorder(VerifyReport& report, const VerifyParams& params) : report_(report), params_(params) {}

  void pass() { ++report_.cases; }

  void fail(std::string expected, std::string got,
            const std::vector<std::pair<std::string, Z2Set>>& sets = {}) {
    ++report_.cases;
    VerifyFailure f;
    f.expected = std::move(expected);
    f.got = std::move(got);
    if (report_.failures.size() < kMaxFailureFiles) {
      for (const auto& [label, set] : sets) {
        std::filesystem::create_directories(params_.out_dir);
        const auto path = params_.out_dir / (report_.suite + "-" + std::to_string(report_.failures.size()) +
                                             "-" + label + ".z2set");
        write_z2set(path, set);
        f.inputs.push_back(path.string());
      }
    }
    report_.failures.push_back(std::move(f));
  }

  void check(bool ok, const std::function<std::string()>& expected, const std::function<std::string()>& got,
             const std::vector<std::pair<std::string, Z2Set>>& sets = {}) {
    if (ok) {
      pass();
    } else {
      fail(expected(), got(), sets);
    }
  }

  void note(std::string line) { report_.notes.push_back(std::move(line)); }

 private:
  VerifyReport& report_;
  const VerifyParams& params_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

Z2Set random_set(int n, std::mt19937_64& rng) {
  const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution coin(density);
  Z2Set a(n);
  for (std::uint64_t x = 0; x < a.universe(); ++x) {
    if (coin(rng)) a.insert(static_cast<Cell>(x));
  }
  return a;
}

Z2Set random_set_with_basis(int n, std::mt19937_64& rng) { return random_set(n, rng) | standard_basis(n); }

// A uniformly random affinely generating set of the given size (rejection).
Z2Set random_generating_set(int n, std::uint64_t size, std::mt19937_64& rng) {
  std::vector<Cell> cells(std::size_t{1} << n);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<Cell>(i);
  for (;;) {
    std::shuffle(cells.begin(), cells.end(), rng);
    const Z2Set a = Z2Set::of(n, std::span<const Cell>(cells.data(), size));
    if (affinely_generates(a)) return a;
  }
}

std::uint32_t compress_word(std::uint32_t set, int n, IndexMask mask) {
  const std::uint64_t in = set;
  std::uint64_t out = 0;
  kernels::serial::compress(std::span<const std::uint64_t>(&in, 1), n, mask, std::span<std::uint64_t>(&out, 1));
  return static_cast<std::uint32_t>(out);
}

int pick_dim(const VerifyParams& p, int lo, int hi, std::mt19937_64& rng) {
  if (p.n) return *p.n;
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void require_dim(int n, int lo, int hi, const char* suite, bool force) {
  if (n < lo || (n > hi && !force)) {
    throw Error(std::string(suite) + " suite supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
  }
}

// ---------------------------------------------------------------- suites

void suite_comp(Recorder& rec, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  const std::uint64_t trials = p.random.value_or(2000);
  if (p.n) require_dim(*p.n, 1, 12, "comp", p.force);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const int n = pick_dim(p, 1, 8, rng);
    const Z2Set a = random_set(n, rng);
    const IndexMask mask = static_cast<IndexMask>(rng()) & bits::low_mask(n);
    const Z2Set c = compress(a, mask);
    const std::vector<std::pair<std::string, Z2Set>> input = {{"A", a}};
    const std::string where = " for I mask " + str(mask);

    rec.check(c.size() == a.size(), [&] { return "|C_I(A)| = " + str(a.size()) + where; },
              [&] { return str(c.size()); }, input);
    rec.check(is_compressed(c, mask), [&] { return "C_I(A) is I-compressed" + where; },
              [] { return std::string("not compressed"); }, input);
    const bool same = height(c) == height(a);
    rec.check(height(c) <= height(a) && same == is_compressed(a, mask),
              [&] { return "height decreases, strictly unless A is I-compressed" + where; },
              [&] { return str(height(c)) + " vs " + str(height(a)); }, input);
    const IndexMask sub = mask & static_cast<IndexMask>(rng());
    rec.check(is_compressed(c, sub), [&] { return "C_I(A) is J-compressed for J mask " + str(sub) + where; },
              [] { return std::string("not compressed"); }, input);
    const Z2Set b = a | random_set(n, rng);
    rec.check(c.is_subset_of(compress(b, mask)), [&] { return "C_I(A) within C_I(B) for A within B" + where; },
              [] { return std::string("not contained"); }, {{"A", a}, {"B", b}});

    Z2Set serial_out(n);
    kernels::serial::compress(a.words(), n, mask, serial_out.words());
    rec.check(serial_out == c, [&] { return "serial and parallel compression agree" + where; },
              [&] { return serial_out.to_string() + " vs " + c.to_string(); }, input);
  }
}

void suite_sumcomp(Recorder& rec, const VerifyParams& p) {
  const int n = p.n.value_or(3);
  const bool exhaustive = p.exhaustive || !p.random;
  if (exhaustive) {
    require_dim(n, 1, 3, "sumcomp --exhaustive", p.force);
    const std::uint32_t sets = std::uint32_t{1} << (1U << n);
    for (std::uint32_t a = 0; a < sets; ++a) {
      for (std::uint32_t b = 0; b < sets; ++b) {
        const std::uint32_t ab = mask_sumset(a, b, n);
        for (IndexMask mask = 0; mask < (1U << n); ++mask) {
          const std::uint32_t ca = compress_word(a, n, mask);
          const std::uint32_t cb = compress_word(b, n, mask);
          const std::uint32_t lhs = mask_sumset(ca, cb, n);
          const std::uint32_t rhs = compress_word(ab, n, mask);
          const bool ok = (lhs & ~rhs) == 0 && compress_word(lhs, n, mask) == lhs;
          if (ok) {
            rec.pass();
          } else {
            rec.fail("C_I(A)+C_I(B) within C_I(A+B) and I-compressed, I mask " + str(mask),
                     mask_to_set(lhs, n).to_string() + " vs " + mask_to_set(rhs, n).to_string(),
                     {{"A", mask_to_set(a, n)}, {"B", mask_to_set(b, n)}});
          }
        }
      }
    }
    return;
  }
  std::mt19937_64 rng(p.seed);
  require_dim(n, 1, 12, "sumcomp", p.force);
  for (std::uint64_t trial = 0; trial < *p.random; ++trial) {
    const Z2Set a = random_set(n, rng);
    const Z2Set b = random_set(n, rng);
    const IndexMask mask = static_cast<IndexMask>(rng()) & bits::low_mask(n);
    const Z2Set lhs = sum(compress(a, mask), compress(b, mask));
    const Z2Set rhs = compress(sum(a, b), mask);
    rec.check(lhs.is_subset_of(rhs) && is_compressed(lhs, mask),
              [&] { return "C_I(A)+C_I(B) within C_I(A+B), I mask " + str(mask); },
              [&] { return str(lhs.size()) + " vs " + str(rhs.size()); }, {{"A", a}, {"B", b}});
  }
}

void suite_structure(Recorder& rec, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  const std::uint64_t trials = p.random.value_or(10000);
  if (p.n) require_dim(*p.n, 1, limits().fixpoint_max_dim, "structure", false);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const int n = pick_dim(p, 4, 8, rng);
    const Z2Set a = random_set_with_basis(n, rng);
    const Z2Set c = e_compress(a);
    const auto check = check_structure(c);
    rec.check(check.ok() && c.size() == a.size() && is_e_compressed(c),
              [] { return std::string("e_compress output satisfies all seven clauses"); },
              [&] { return check.ok() ? std::string("fixpoint or size mismatch") : check.failure; },
              {{"A", a}, {"compressed", c}});
  }
}

void suite_hs(Recorder& rec, const VerifyParams& p) {
  const std::uint64_t top = p.n ? static_cast<std::uint64_t>(*p.n) : 256;
  if (top < 1 || top > (std::uint64_t{1} << limits().hs_oracle_max_log)) throw Error("hs bound out of range");
  for (std::uint64_t a = 1; a <= top; ++a) {
    for (std::uint64_t b = 1; b <= top; ++b) {
      const std::uint64_t v = hs(a, b);
      const int dim = std::bit_width(std::bit_ceil(std::max(a, b))) - 1;
      const Z2Set s = sum(initial_segment(a, dim), initial_segment(b, dim));
      const bool ok = v == s.size() && s == initial_segment(v, dim) && v == hs(b, a) && v >= std::max(a, b) &&
                      (!std::has_single_bit(a) || b > a || v == a);
      rec.check(ok, [&] { return "hs(" + str(a) + "," + str(b) + ") = |IS(a)+IS(b)| = " + str(s.size()); },
                [&] { return str(v); });
    }
  }
  const std::uint64_t half = std::max<std::uint64_t>(1, top / 2);
  for (std::uint64_t a = 1; a <= half; ++a) {
    for (std::uint64_t b1 = 1; b1 <= half; ++b1) {
      for (std::uint64_t b2 = 1; b2 <= half; ++b2) {
        const bool ok = hs(a, b1 + b2) <= hs(a, b1) + hs(a, b2);
        if (ok) {
          rec.pass();
        } else {
          rec.fail("sub-distributive at a=" + str(a) + " b1=" + str(b1) + " b2=" + str(b2),
                   str(hs(a, b1 + b2)) + " > " + str(hs(a, b1) + hs(a, b2)));
        }
      }
    }
  }
}

void suite_partitions(Recorder& rec, const VerifyParams& p) {
  const std::uint64_t amax = p.n ? static_cast<std::uint64_t>(*p.n) : 64;
  const std::uint64_t mmax = p.m ? static_cast<std::uint64_t>(*p.m) : 6;
  for (std::uint64_t a = 1; a <= amax; ++a) {
    for (std::uint64_t m = 1; m <= std::min(a, mmax); ++m) {
      const auto res = min_pair_cost(a, m);
      const Partition fair = quasi_fair(a, m);
      std::uint64_t fair_count = 0;
      bool fair_seen = false;
      for_each_partition(a, m, a, [&](const std::vector<std::uint64_t>& parts) {
        const Partition q(parts);
        if (classify(q).quasi_fair) {
          ++fair_count;
          fair_seen = fair_seen || q == fair;
        }
      });
      const std::string at = " at a=" + str(a) + " m=" + str(m);
      rec.check(res.compressed_min == res.quasi_fair_cost,
                [&] { return "compressed minimum = quasi-fair cost " + str(res.quasi_fair_cost) + at; },
                [&] { return str(res.compressed_min); });
      rec.check(res.value == res.quasi_fair_cost,
                [&] { return "global minimum = quasi-fair cost " + str(res.quasi_fair_cost) + at; },
                [&] { return str(res.value) + " by " + res.witness.to_string(); });
      rec.check(fair_count == 1 && fair_seen, [&] { return "exactly one quasi-fair partition" + at; },
                [&] { return str(fair_count); });
    }
  }
  // Monotonicity in a. Only a_1..a_(m-1) are monotone: the remainder part can
  // drop, e.g. [2,2] for a=4 against [4,1] for a=5.
  const std::uint64_t mono_max = std::max<std::uint64_t>(amax, 200);
  std::uint64_t last_drops = 0;
  std::string first_drop;
  for (std::uint64_t m = 1; m <= mono_max; ++m) {
    std::vector<Partition> fair;
    for (std::uint64_t a = m; a <= mono_max; ++a) fair.push_back(quasi_fair(a, m));
    bool ok = true;
    for (std::size_t i = 0; i + 1 < fair.size(); ++i) {
      for (std::size_t j = 0; j + 1 < m; ++j) ok = ok && fair[i].parts[j] <= fair[i + 1].parts[j];
      if (fair[i].parts.back() > fair[i + 1].parts.back()) {
        if (last_drops++ == 0) first_drop = fair[i].to_string() + " -> " + fair[i + 1].to_string();
      }
    }
    rec.check(ok, [&] { return "non-final quasi-fair parts grow with a for m=" + str(m); },
              [] { return std::string("decrease found"); });
  }
  rec.note("last part drops in " + str(last_drops) + " steps a -> a+1, first " + first_drop);
  // Sub-partitions stay quasi-fair: every contiguous run, plus random subsequences.
  std::mt19937_64 rng(p.seed);
  for (std::uint64_t a = 1; a <= 100; ++a) {
    for (std::uint64_t m = 1; m <= a; ++m) {
      const auto parts = quasi_fair(a, m).parts;
      bool ok = true;
      for (std::size_t i = 0; i < parts.size() && ok; ++i) {
        for (std::size_t j = i + 1; j <= parts.size() && ok; ++j) {
          ok = classify(Partition({parts.begin() + i, parts.begin() + j})).quasi_fair;
        }
      }
      for (int draw = 0; draw < 8 && ok; ++draw) {
        std::vector<std::uint64_t> sub;
        for (auto v : parts) {
          if (rng() & 1U) sub.push_back(v);
        }
        if (!sub.empty()) ok = classify(Partition(sub)).quasi_fair;
      }
      rec.check(ok, [&] { return "sub-partitions of quasi_fair(" + str(a) + "," + str(m) + ") are quasi-fair"; },
                [] { return std::string("violation"); });
    }
  }
}

void suite_iso(Recorder& rec, const VerifyParams& p) {
  std::mt19937_64 rng(p.seed);
  const int mmax = p.m.value_or(6);
  if (mmax < 1 || mmax > 10) throw Error("iso suite supports 1 <= m <= 10");
  const std::uint64_t trials = p.random.value_or(10000);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, mmax)(rng);
    const int l = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto fam = random_antichain_family(m, l, rng);
    const auto report = family_check(fam);
    const Rational bound = avg_shadow_bound(m, report.mean_size);
    std::vector<std::pair<std::string, Z2Set>> sets;
    for (std::size_t i = 0; i < fam.sets.size(); ++i) sets.emplace_back("C" + std::to_string(i + 1), fam.sets[i]);
    rec.check(report.mean_shadow >= bound,
              [&] { return "E[dC] >= " + to_string(bound) + " at E[C] = " + to_string(report.mean_size); },
              [&] { return to_string(report.mean_shadow); }, sets);

    const bool all_nonempty = std::none_of(fam.sets.begin(), fam.sets.end(), [](const Z2Set& c) { return c.empty(); });
    if (all_nonempty) {
      const Z2Set ball = hamming_ball_product(1, m, m);
      Integer total = 0;
      for (const auto& c : fam.sets) total += static_cast<unsigned long>(sum(c, ball).size());
      Rational mean(total, static_cast<unsigned long>(fam.sets.size()));
      mean.canonicalize();
      rec.check(mean == 1 + report.mean_shadow && mean >= 1 + bound,
                [&] { return "E[C + D_1] = 1 + E[dC] >= " + to_string(1 + bound); },
                [&] { return to_string(mean); }, sets);
    }
    if (report.mean_size < 1) {
      const bool small = std::all_of(fam.sets.begin(), fam.sets.end(),
                                     [&](const Z2Set& c) { return c.is_subset_of(Z2Set::of(m, {0})); });
      rec.check(!all_nonempty && small, [] { return std::string("E[C] < 1 forces members within {0}, one empty"); },
                [] { return std::string("violation"); }, sets);
    }
  }

  // The pair {D_1^3, {0}} meets the bound with equality.
  {
    const DownsetFamily fam{3, {hamming_ball_product(1, 3, 3), Z2Set::of(3, {0})}};
    const auto report = family_check(fam);
    const Rational bound = avg_shadow_bound(3, report.mean_size);
    rec.check(report.antichain_ok && report.mean_shadow == bound && bound == Rational(9, 2),
              [] { return std::string("{D_1^3, {0}} has E[dC] = 9/2 = bound"); },
              [&] { return to_string(report.mean_shadow) + " vs " + to_string(bound); });
  }

  // Shadows of shift-minimal downsets against classification by the top coordinate.
  for (const auto& c : shift_minimal_downsets(4)) {
    const auto [minus, plus] = classify_by_top(c);
    const auto [shadow_minus, shadow_plus] = classify_by_top(upper_shadow(c));
    const Z2Set up_plus = upper_shadow(plus);
    const bool first = up_plus.is_subset_of(shadow_plus) && shadow_plus == minus &&
                       ((up_plus != shadow_plus) == !c.empty());
    const bool second = upper_shadow(minus) == shadow_minus;
    rec.check(first && second, [] { return std::string("d(C+) within (dC)+ = C-, strict iff C nonempty; d(C-) = (dC)-"); },
              [] { return std::string("violation"); }, {{"C", c}});
  }

  // Shifts do not grow shadows.
  for (std::uint64_t trial = 0; trial < std::min<std::uint64_t>(trials, 2000); ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const Z2Set f = random_set(n, rng);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const bool ok = upper_shadow(shift(f, i, j)).is_subset_of(shift(upper_shadow(f), i, j)) &&
                        lower_shadow(shift(f, i, j)).is_subset_of(shift(lower_shadow(f), i, j));
        rec.check(ok, [&] { return "shadows commute into S_" + std::to_string(i) + std::to_string(j); },
                  [] { return std::string("violation"); }, {{"F", f}});
      }
    }
  }

  // Both (k, p) conventions agree where they overlap.
  for (int m = 1; m <= mmax; ++m) {
    Integer below = 0;
    for (int k = 1; k <= m + 1; ++k) {
      below += binomial(m, k - 1);
      Integer alt = 0;
      for (int i = 1; i <= k - 1; ++i) alt += binomial(m, i);
      alt += binomial(m, k);
      const Rational got = avg_shadow_bound(m, Rational(below));
      rec.check(got == Rational(alt), [&] { return "boundary conventions agree at m=" + std::to_string(m); },
                [&] { return to_string(got) + " vs " + alt.get_str(); });
    }
  }
}

void suite_harper(Recorder& rec, const VerifyParams& p) {
  const int n = p.n.value_or(4);
  const bool exhaustive = p.exhaustive || !p.random;
  if (exhaustive) {
    require_dim(n, 1, 4, "harper --exhaustive", p.force);
    const std::uint32_t sets = n == 5 ? 0 : std::uint32_t{1} << (1U << n);
    std::uint32_t ball = 1;
    for (int i = 1; i <= n; ++i) ball |= std::uint32_t{1} << unit(i);
    for (std::uint32_t a = 1; a < sets || (n == 5 && a != 0); ++a) {
      const auto got = static_cast<std::uint64_t>(std::popcount(mask_sumset(a, ball, n)));
      const auto want = harper_bound(n, static_cast<std::uint64_t>(std::popcount(a))).count;
      if (Integer(static_cast<unsigned long>(got)) >= want) {
        rec.pass();
      } else {
        rec.fail("|A + D_1| >= " + want.get_str(), str(got), {{"A", mask_to_set(a, n)}});
      }
    }
  } else {
    require_dim(n, 1, 16, "harper", p.force);
    std::mt19937_64 rng(p.seed);
    const Z2Set ball = hamming_ball_product(1, n, n);
    for (std::uint64_t trial = 0; trial < *p.random; ++trial) {
      const Z2Set a = random_set(n, rng);
      if (a.empty()) continue;
      const auto got = sum(a, ball).size();
      const auto want = harper_bound(n, a.size()).count;
      rec.check(Integer(static_cast<unsigned long>(got)) >= want, [&] { return "|A + D_1| >= " + want.get_str(); },
                [&] { return str(got); }, {{"A", a}});
    }
  }
  // Balls are extremal.
  for (int k = 0; k <= n; ++k) {
    const Z2Set dk = hamming_ball_product(k, n, n);
    const auto got = sum(dk, hamming_ball_product(1, n, n)).size();
    const auto want = harper_bound(n, dk.size()).count;
    rec.check(Integer(static_cast<unsigned long>(got)) == want,
              [&] { return "|D_" + std::to_string(k) + " + D_1| = " + want.get_str(); }, [&] { return str(got); });
  }
}

void suite_fk(Recorder& rec, const VerifyParams& p) {
  const std::vector<std::pair<Rational, Rational>> spots = {
      {Rational(1), Rational(1)}, {Rational(7, 4), Rational(2)}, {Rational(2), Rational(16, 7)},
      {Rational(11, 5), Rational(16, 5)}, {Rational(21, 8), Rational(4)}};
  for (const auto& [k, f] : spots) {
    const Rational got = F_of_K(k);
    rec.check(got == f, [&] { return "F(" + to_string(k) + ") = " + to_string(f); },
              [&] { return to_string(got); });
  }

  // Grid over [1, 4]: F/K is constant on each piece, F and F/K never decrease.
  const auto breaks = F_breakpoints(8);
  auto piece_of = [&](const Rational& k) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      if (breaks[i].k <= k) idx = i;
    }
    return idx;
  };
  const Rational step(1, 1000);
  Rational prev_k(1);
  Rational prev_f = F_of_K(prev_k);
  std::map<std::size_t, Rational> slope;
  slope[piece_of(prev_k)] = prev_f / prev_k;
  for (Rational k = prev_k + step; k <= 4; k += step) {
    const Rational f = F_of_K(k);
    const Rational s = f / k;
    const std::size_t piece = piece_of(k);
    auto [it, fresh] = slope.try_emplace(piece, s);
    const bool linear = fresh || it->second == s;
    const bool monotone = f >= prev_f;
    const bool superlinear = s >= prev_f / prev_k;
    rec.check(linear && monotone && superlinear,
              [&] { return "F linear on its piece, non-decreasing and superlinear at K=" + to_string(k); },
              [&] { return "F=" + to_string(f); });
    prev_k = k;
    prev_f = f;
  }

  // Tightness: the doubled independent points realize K~ exactly.
  for (int t = 1; t <= 8; ++t) {
    for (int s = 0; s < t; ++s) {
      const Z2Set a = construct_ipe2(t, s);
      const auto c = constants(a);
      Rational ftilde(pow2(t + 1), Integer(2 * (t + 1) - s));
      ftilde.canonicalize();
      const auto kt = ktilde_formula(ftilde);
      rec.check(c.spanning == ftilde && c.doubling == kt.value,
                [&] { return "ipe2 t=" + std::to_string(t) + " s=" + std::to_string(s) + " gives (" +
                             to_string(kt.value) + ", " + to_string(ftilde) + ")"; },
                [&] { return "(" + to_string(c.doubling) + ", " + to_string(c.spanning) + ")"; }, {{"A", a}});
    }
  }

  // K~(F)/F never increases along the domain.
  Rational prev_ratio(2);
  for (std::uint64_t b = 64; b >= 1; --b) {
    for (std::uint64_t a = 6; a <= 6; ++a) {
      const auto v = Ktilde(a, b);
      Rational f(pow2(a), Integer(static_cast<unsigned long>(b)));
      f.canonicalize();
      const Rational ratio = v.value / f;
      rec.check(ratio <= prev_ratio, [&] { return "K~(F)/F non-increasing at F=" + to_string(f); },
                [&] { return to_string(ratio) + " after " + to_string(prev_ratio); });
      prev_ratio = ratio;
    }
  }

  // Minimum doubling never beats the formula.
  const int nmax = p.n.value_or(4);
  require_dim(nmax, 1, 4, "fk min_doubling", p.force);
  for (int n = 1; n <= nmax; ++n) {
    for (std::uint64_t size = n + 1; size <= (std::uint64_t{1} << n); ++size) {
      const auto res = min_doubling(n, size, {SearchMode::Full, p.force, p.jobs});
      Rational ftilde(pow2(n), Integer(static_cast<unsigned long>(size)));
      ftilde.canonicalize();
      const Integer floor_value = ceil_integer(ktilde_formula(ftilde).value * Rational(Integer(static_cast<unsigned long>(size))));
      rec.check(Integer(static_cast<unsigned long>(res.value)) >= floor_value,
                [&] { return "min |A+A| >= " + floor_value.get_str() + " at n=" + std::to_string(n) + " |A|=" + str(size); },
                [&] { return str(res.value); }, {{"witness", res.witness}});
    }
  }
}

void suite_ab(Recorder& rec, const VerifyParams& p) {
  const int n = p.n.value_or(4);
  const SearchOptions opts{p.mode, p.force, p.jobs};
  const std::uint64_t g = std::uint64_t{1} << n;
  for (std::uint64_t a = n + 1; 4 * a <= 3 * g; ++a) {
    for (std::uint64_t b = 1; b <= g; ++b) {
      const auto found = min_sumset(n, a, b, true, opts);
      const auto bound = ab_lower_bound(n, a, b);
      rec.check(Integer(static_cast<unsigned long>(found.value)) >= bound.bound_count,
                [&] { return "min |A+B| >= " + bound.bound_count.get_str() + " at |A|=" + str(a) + " |B|=" + str(b); },
                [&] { return str(found.value); }, {{"A", found.a}, {"B", found.b}});
      if (Integer(static_cast<unsigned long>(found.value)) == bound.bound_count && bound.w == 0) {
        rec.note("equality at |A|=" + str(a) + " |B|=" + str(b) + ": " + str(found.value) +
                 " (t=" + std::to_string(bound.t) + " k=" + std::to_string(bound.k) + " w=0)");
      }
    }
  }
  // Ball pairs at the default t are attained exactly.
  for (int t = 1; t <= n; ++t) {
    const Z2Set a = construct_ball(1, t, n);
    if (4 * a.size() > 3 * g) continue;
    if (ab_lower_bound(n, a.size(), 1).t != t) continue;
    for (int k = 0; k < t; ++k) {
      const Z2Set b = construct_ball(k, t, n);
      const auto bound = ab_lower_bound(n, a.size(), b.size());
      const auto got = sum(a, b);
      rec.check(got == construct_ball(k + 1, t, n) && bound.w == 0 &&
                    Integer(static_cast<unsigned long>(got.size())) == bound.bound_count,
                [&] { return "D_1 + D_" + std::to_string(k) + " = D_" + std::to_string(k + 1) + " meets the bound " +
                             bound.bound_count.get_str(); },
                [&] { return str(got.size()); });
    }
  }
  // The default t gives the weakest codimension case.
  for (std::uint64_t ai = 1; ai <= 48; ++ai) {
    const Rational alpha(static_cast<unsigned long>(ai), 64UL);
    const int t = ab_default_t(alpha);
    for (std::uint64_t bi = 1; bi <= 64; ++bi) {
      const Rational beta(Integer(static_cast<unsigned long>(bi)), Integer(64));
      Rational beta_c = beta;
      beta_c.canonicalize();
      const Rational base = ab_bound_at(t, beta_c).bound;
      for (int smaller = 1; smaller < t; ++smaller) {
        const Rational other = ab_bound_at(smaller, beta_c).bound;
        rec.check(other >= base,
                  [&] { return "bound at t=" + std::to_string(smaller) + " >= bound at t=" + std::to_string(t); },
                  [&] { return to_string(other) + " < " + to_string(base); });
      }
    }
  }
}

void suite_repeated(Recorder& rec, const VerifyParams& p) {
  const int m = p.m.value_or(3);
  const int n = p.n.value_or(4);
  if (m < 1 || m + 1 > n) throw Error("repeated suite needs 1 <= m and m + 1 <= n");
  const std::uint64_t g = std::uint64_t{1} << n;
  const Rational threshold = repeated_threshold(m);
  // Smallest size strictly above threshold * |G|.
  const Integer floor_size = ceil_integer(threshold * Rational(Integer(static_cast<unsigned long>(g))));
  const std::uint64_t size0 = floor_size.get_ui() + (threshold * Rational(Integer(static_cast<unsigned long>(g))) ==
                                                             Rational(floor_size)
                                                         ? 1
                                                         : 0);
  rec.note("threshold " + to_string(threshold) + ", smallest admissible size " + str(size0));

  // Chain of exact minima: |A_1 + ... + A_i| >= cur for generating sets of size >= size0.
  const SearchOptions opts{SearchMode::Compressed, p.force, p.jobs};
  std::uint64_t cur = size0;
  for (int i = 2; i <= m; ++i) {
    const auto res = min_sumset(n, size0, cur, true, opts);
    rec.note("min |A_1 + " + std::string(i > 2 ? "... + " : "") + "A_" + std::to_string(i) + "| >= " + str(res.value));
    cur = res.value;
  }
  rec.check(cur == g, [&] { return "every " + std::to_string(m) + " generating sets of size >= " + str(size0) + " cover G"; },
            [&] { return "lower bound " + str(cur); });

  std::mt19937_64 rng(p.seed);
  const std::uint64_t trials = p.random.value_or(100000);
  std::uniform_int_distribution<std::uint64_t> size_dist(size0, g);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::vector<Z2Set> sets;
    Z2Set total = Z2Set::of(n, {0});
    for (int i = 0; i < m; ++i) {
      sets.push_back(random_generating_set(n, size_dist(rng), rng));
      total = sum(total, sets.back());
    }
    std::vector<std::pair<std::string, Z2Set>> payload;
    for (std::size_t i = 0; i < sets.size(); ++i) payload.emplace_back("A" + std::to_string(i + 1), sets[i]);
    rec.check(total.size() == g, [] { return std::string("sum covers G"); }, [&] { return str(total.size()); },
              payload);
  }

  // Sharpness: the ball product sits exactly at the threshold and misses a point.
  const Z2Set ball = repeated_construction(m, n);
  Z2Set total = ball;
  for (int i = 1; i < m; ++i) total = sum(total, ball);
  const bool at_threshold = Rational(Integer(static_cast<unsigned long>(ball.size())), Integer(static_cast<unsigned long>(g))) == threshold;
  rec.check(at_threshold && affinely_generates(ball) && total.size() < g,
            [] { return std::string("m copies of D_1^(m+1) x Z_2^(n-m-1) miss part of G"); },
            [&] { return "sum size " + str(total.size()); }, {{"construction", ball}});
  rec.note("construction size " + str(ball.size()) + ", " + std::to_string(m) + "-fold sum size " + str(total.size()));
}

using SuiteFn = void (*)(Recorder&, const VerifyParams&);

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"comp", suite_comp},         {"sumcomp", suite_sumcomp}, {"structure", suite_structure},
      {"hs", suite_hs},             {"partitions", suite_partitions}, {"iso", suite_iso},
      {"harper", suite_harper},     {"fk", suite_fk},           {"ab", suite_ab},
      {"repeated", suite_repeated},
  };
  return table;
}

nlohmann::json params_json(const VerifyParams& p) {
  nlohmann::json j = nlohmann::json::object();
  if (p.n) j["n"] = *p.n;
  if (p.m) j["m"] = *p.m;
  j["exhaustive"] = p.exhaustive;
  if (p.random) j["random"] = *p.random;
  j["seed"] = p.seed;
  j["jobs"] = p.jobs;
  j["mode"] = p.mode == SearchMode::Compressed ? "compressed" : "full";
  j["force"] = p.force;
  return j;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport verify_suite(const std::string& name, const VerifyParams& params) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw Error("unknown verify suite '" + name + "'");
  VerifyReport report;
  report.suite = name;
  report.params = params_json(params);
  Recorder rec(report, params);
  it->second(rec, params);
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["params"] = report.params;
  j["cases"] = report.cases;
  j["passed"] = report.passed();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  }
  j["notes"] = report.notes;
  return j;
}

}  // namespace z2sum
