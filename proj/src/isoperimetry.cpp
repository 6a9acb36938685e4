#include "z2sum/isoperimetry.hpp"

#include <algorithm>

#include "z2sum/compression.hpp"
#include "z2sum/config.hpp"

namespace z2sum {

namespace {

constexpr int kMaxDownsetEnumerationDim = 5;

Z2Set lift(const Z2Set& lower, const Z2Set& upper) {
  // Inverse of classify_by_top: lower half is D-, upper half is D+ + e_n.
  Z2Set out(lower.dim() + 1);
  const Cell top = unit(lower.dim() + 1);
  lower.for_each([&](Cell x) { out.insert(x); });
  upper.for_each([&](Cell x) { out.insert(x | top); });
  return out;
}

Rational average(const std::vector<std::uint64_t>& values) {
  Integer total = 0;
  for (auto v : values) total += static_cast<unsigned long>(v);
  Rational r(total, static_cast<unsigned long>(values.size()));
  r.canonicalize();
  return r;
}

}  // namespace

Z2Set upper_shadow(const Z2Set& f) {
  Z2Set out(f.dim());
  f.for_each([&](Cell x) {
    for (int i = 1; i <= f.dim(); ++i) {
      if (!(x & unit(i))) out.insert(x | unit(i));
    }
  });
  return out;
}

Z2Set lower_shadow(const Z2Set& f) {
  Z2Set out(f.dim());
  f.for_each([&](Cell x) {
    for (Cell rest = x; rest != 0; rest &= rest - 1) out.insert(x ^ (rest & (~rest + 1)));
  });
  return out;
}

std::pair<Z2Set, Z2Set> classify_by_top(const Z2Set& f) {
  if (f.dim() < 1) throw Error("classification needs n >= 1");
  const int n = f.dim();
  const Cell top = unit(n);
  Z2Set minus(n - 1);
  Z2Set plus(n - 1);
  f.for_each([&](Cell x) {
    if (x & top) {
      plus.insert(x ^ top);
    } else {
      minus.insert(x);
    }
  });
  return {std::move(minus), std::move(plus)};
}

Z2Set maximal_elements(const Z2Set& f) {
  Z2Set out(f.dim());
  f.for_each([&](Cell x) {
    for (int i = 1; i <= f.dim(); ++i) {
      if (!(x & unit(i)) && f.contains(x | unit(i))) return;
    }
    out.insert(x);
  });
  return out;
}

Z2Set addable_elements(const Z2Set& f) {
  Z2Set out(f.dim());
  for (std::uint64_t x = 0; x < f.universe(); ++x) {
    const Cell c = static_cast<Cell>(x);
    if (f.contains(c)) continue;
    bool ok = true;
    for (Cell rest = c; ok && rest != 0; rest &= rest - 1) ok = f.contains(c ^ (rest & (~rest + 1)));
    if (ok) out.insert(c);
  }
  return out;
}

Z2Set downward_closure(const Z2Set& f) {
  Z2Set out(f.dim());
  f.for_each([&](Cell x) {
    for (Cell s = x;; s = (s - 1) & x) {
      out.insert(s);
      if (s == 0) break;
    }
  });
  return out;
}

FamilyReport family_check(const DownsetFamily& fam) {
  FamilyReport r;
  if (fam.sets.empty()) throw Error("a downset family needs at least one member");
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> shadows;
  std::vector<Z2Set> lower;
  r.downset_ok = true;
  for (const auto& c : fam.sets) {
    if (c.dim() != fam.dim) throw Error("family member has the wrong dimension");
    r.downset_ok = r.downset_ok && is_downset(c);
    sizes.push_back(c.size());
    shadows.push_back(upper_shadow(c).size());
    lower.push_back(lower_shadow(c));
  }
  r.antichain_ok = true;
  for (const auto& shadow : lower) {
    for (const auto& c : fam.sets) {
      if (!shadow.is_subset_of(c)) r.antichain_ok = false;
    }
  }
  r.mean_size = average(sizes);
  r.mean_shadow = average(shadows);
  return r;
}

HarperBound harper_bound(int n, std::uint64_t size) {
  if (n < 0 || n > kMaxDim) throw Error("harper_bound: dimension out of range");
  if (size == 0 || size > (std::uint64_t{1} << n)) {
    throw Error("harper_bound needs 0 < size <= 2^n");
  }
  const Rational s(static_cast<unsigned long>(size));
  HarperBound out;
  // tail(k) = sum_{i>k} C(n,i)
  auto tail = [&](int k) {
    Integer t = 0;
    for (int i = k + 1; i <= n; ++i) t += binomial(n, i);
    return t;
  };
  bool found = false;
  for (int k = 1; k <= n && !found; ++k) {
    Rational p = (s - Rational(tail(k))) / Rational(binomial(n, k));
    if (p >= 0 && p <= 1) {
      out.k = k;
      out.p = p;
      found = true;
    }
  }
  if (!found) {
    out.k = 0;
    out.p = s - Rational(tail(0));
  }
  out.bound = Rational(tail(out.k - 1)) + out.p * Rational(binomial(n, out.k - 1));
  out.count = ceil_integer(out.bound);
  return out;
}

ShadowBound avg_shadow_bound_detail(int m, const Rational& avg) {
  if (m < 0 || m > kMaxDim) throw Error("avg_shadow_bound: dimension out of range");
  if (avg < 0 || avg > Rational(pow2(m))) throw Error("avg_shadow_bound needs 0 <= avg <= 2^m");
  ShadowBound out;
  Integer below = 0;  // sum_{i<k} C(m,i)
  int k = 0;
  for (;; ++k) {
    const Integer c = binomial(m, k);
    if (c == 0 || avg < Rational(below + c)) break;
    below += c;
  }
  out.k = k;
  const Integer ck = binomial(m, k);
  out.p = ck == 0 ? Rational(0) : (avg - Rational(below)) / Rational(ck);
  Integer head = 0;
  for (int i = 1; i <= k; ++i) head += binomial(m, i);
  out.bound = Rational(head) + out.p * Rational(binomial(m, k + 1));
  return out;
}

Rational avg_shadow_bound(int m, const Rational& avg) { return avg_shadow_bound_detail(m, avg).bound; }

std::vector<Z2Set> all_downsets(int n) {
  if (n < 0 || n > kMaxDownsetEnumerationDim) {
    throw Error("downset enumeration supports n <= " + std::to_string(kMaxDownsetEnumerationDim));
  }
  if (n == 0) return {Z2Set(0), Z2Set::full(0)};
  const auto smaller = all_downsets(n - 1);
  std::vector<Z2Set> out;
  for (const auto& minus : smaller) {
    for (const auto& plus : smaller) {
      if (plus.is_subset_of(minus)) out.push_back(lift(minus, plus));
    }
  }
  return out;
}

std::vector<Z2Set> shift_minimal_downsets(int n) {
  auto all = all_downsets(n);
  std::erase_if(all, [](const Z2Set& d) { return !is_shift_minimal(d); });
  return all;
}

Z2Set random_downset(int n, std::mt19937_64& rng) {
  Z2Set seeds(n);
  const std::uint64_t universe = std::uint64_t{1} << n;
  std::uniform_int_distribution<std::uint64_t> cell(0, universe - 1);
  std::uniform_int_distribution<int> count(0, n + 2);
  for (int i = count(rng); i > 0; --i) seeds.insert(static_cast<Cell>(cell(rng)));
  return downward_closure(seeds);
}

DownsetFamily random_antichain_family(int m, int l, std::mt19937_64& rng) {
  if (l < 1) throw Error("a family needs l >= 1");
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const Z2Set base = random_downset(m, rng);
    const auto addable = addable_elements(base).members();
    const auto maximal = maximal_elements(base).members();
    // 0: only grow, 1: only shrink, 2: both.
    const int mode = std::uniform_int_distribution<int>(0, 2)(rng);
    DownsetFamily fam{m, {}};
    for (int i = 0; i < l; ++i) {
      Z2Set c = base;
      const bool grow = mode == 0 || (mode == 2 && coin(rng));
      if (grow) {
        for (Cell x : addable) {
          if (coin(rng)) c.insert(x);
        }
      } else {
        for (Cell x : maximal) {
          if (coin(rng)) c.erase(x);
        }
      }
      fam.sets.push_back(std::move(c));
    }
    const auto report = family_check(fam);
    if (report.downset_ok && report.antichain_ok) return fam;
  }
}

}  // namespace z2sum
