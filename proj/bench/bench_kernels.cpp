// Wall-clock comparison of the serial and OpenMP kernels, and of the two
// sumset paths. Prints one line per measurement.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "z2sum/compression.hpp"
#include "z2sum/kernels.hpp"
#include "z2sum/sumset.hpp"

using namespace z2sum;

namespace {

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

Z2Set random_set(int n, std::uint64_t size, std::mt19937_64& rng) {
  Z2Set s(n);
  std::uniform_int_distribution<Cell> cell(0, static_cast<Cell>((std::uint64_t{1} << n) - 1));
  for (std::uint64_t have = 0; have < size;) {
    const Cell x = cell(rng);
    if (!s.contains(x)) {
      s.insert(x);
      ++have;
    }
  }
  return s;
}

void report(const char* what, double serial, double parallel) {
  std::printf("%-28s serial %10.2f ms   omp %10.2f ms   x%.2f\n", what, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmarks"};
  int n = 20;
  int reps = 3;
  int sum_log = 17;
  bool skip_naive = false;
  app.add_option("--n", n, "dimension")->check(CLI::Range(8, 26));
  app.add_option("--reps", reps, "repetitions, best time is kept")->check(CLI::PositiveNumber);
  app.add_option("--sum-log", sum_log, "log2 of |A| = |B| for the sumset comparison");
  app.add_flag("--skip-naive", skip_naive, "skip the full pair enumeration");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(42);
  std::printf("n=%d threads=%d\n", n, omp_get_max_threads());

  std::vector<std::int64_t> v(std::size_t{1} << n);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 3) - 1;
  auto w = v;
  const double wht_s = best_ms(reps, [&] { w = v; kernels::serial::walsh_hadamard(w); });
  const double wht_p = best_ms(reps, [&] { w = v; kernels::omp::walsh_hadamard(w); });
  report("walsh_hadamard", wht_s, wht_p);

  const Z2Set a = random_set(n, std::uint64_t{1} << (n - 1), rng);
  Z2Set out(n);
  for (IndexMask mask : {IndexMask{0x5}, static_cast<IndexMask>((1U << n) - 1)}) {
    const double cs = best_ms(reps, [&] { kernels::serial::compress(a.words(), n, mask, out.words()); });
    const double cp = best_ms(reps, [&] { kernels::omp::compress(a.words(), n, mask, out.words()); });
    report(mask == 0x5 ? "compress |I|=2" : "compress |I|=n", cs, cp);
  }

  const int pair_log = std::min(12, n - 2);
  const auto outer = random_set(n, std::uint64_t{1} << pair_log, rng).members();
  const auto inner = random_set(n, std::uint64_t{1} << pair_log, rng).members();
  const double xs = best_ms(reps, [&] {
    std::fill(out.words().begin(), out.words().end(), 0);
    kernels::serial::xor_sumset(outer, inner, out.words());
  });
  const double xp = best_ms(reps, [&] {
    std::fill(out.words().begin(), out.words().end(), 0);
    kernels::omp::xor_sumset(outer, inner, out.words());
  });
  report("xor_sumset 2^12 x 2^12", xs, xp);

  const Z2Set sa = random_set(n, std::uint64_t{1} << sum_log, rng);
  const Z2Set sb = random_set(n, std::uint64_t{1} << sum_log, rng);
  Z2Set via_transform;
  const double tr = best_ms(reps, [&] { via_transform = sum_transform(sa, sb); });
  std::printf("sum_transform |A|=|B|=2^%d   %10.2f ms\n", sum_log, tr);
  if (!skip_naive) {
    Z2Set via_naive;
    const double nv = best_ms(1, [&] { via_naive = sum_naive(sa, sb); });
    std::printf("sum_naive     |A|=|B|=2^%d   %10.2f ms   transform speedup x%.1f   agree=%s\n", sum_log, nv,
                nv / tr, via_naive == via_transform ? "yes" : "NO");
  }
  return 0;
}
