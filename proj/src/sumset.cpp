#include "z2sum/sumset.hpp"

#include "z2sum/gf2core.hpp"
#include "z2sum/kernels.hpp"

namespace z2sum {

Z2Set sum_naive(const Z2Set& a, const Z2Set& b) {
  require_same_dim(a, b);
  Z2Set out(a.dim());
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  const auto outer = small.members();
  const auto inner = large.members();
  kernels::omp::xor_sumset(outer, inner, out.words());
  return out;
}

std::vector<std::int64_t> representation_counts(const Z2Set& a, const Z2Set& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  if (n > limits().transform_max_dim) {
    throw Error("transform sumset capped at n <= " + std::to_string(limits().transform_max_dim) +
                ", got n=" + std::to_string(n));
  }
  const std::size_t cells = std::size_t{1} << n;
  std::vector<std::int64_t> fa(cells, 0);
  std::vector<std::int64_t> fb(cells, 0);
  a.for_each([&](Cell x) { fa[x] = 1; });
  b.for_each([&](Cell x) { fb[x] = 1; });
  kernels::omp::walsh_hadamard(fa);
  kernels::omp::walsh_hadamard(fb);
  // |fa|,|fb| <= 2^n and every butterfly partial sum is bounded by
  // sum |fa fb| <= 2^n sqrt(|A||B|) <= 2^(2n), so int64 holds for n <= 30.
#pragma omp parallel for schedule(static) if (cells >= (std::size_t{1} << 14))
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells); ++i) fa[i] *= fb[i];
  kernels::omp::walsh_hadamard(fa);
  for (auto& v : fa) v >>= n;
  return fa;
}

Z2Set sum_transform(const Z2Set& a, const Z2Set& b) {
  const auto counts = representation_counts(a, b);
  Z2Set out(a.dim());
  auto words = out.words();
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x] != 0) words[x >> 6] |= std::uint64_t{1} << (x & 63U);
  }
  return out;
}

bool prefers_transform(const Z2Set& a, const Z2Set& b) {
  const int n = a.dim();
  if (n > limits().transform_max_dim) return false;
  const double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());
  return pairs > 8.0 * n * static_cast<double>(a.universe());
}

Z2Set sum(const Z2Set& a, const Z2Set& b) {
  require_same_dim(a, b);
  return prefers_transform(a, b) ? sum_transform(a, b) : sum_naive(a, b);
}

SumStats constants(const Z2Set& a) {
  if (a.empty()) throw Error("constants of the empty set");
  const auto size = static_cast<unsigned long>(a.size());
  const auto doubled = sum(a, a).size();
  const auto span = affine_span(a).size();
  SumStats s{Rational(static_cast<unsigned long>(doubled), size),
             Rational(static_cast<unsigned long>(span), size)};
  s.doubling.canonicalize();
  s.spanning.canonicalize();
  return s;
}

}  // namespace z2sum
