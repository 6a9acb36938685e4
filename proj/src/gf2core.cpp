#include "z2sum/gf2core.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "z2sum/bits.hpp"

namespace z2sum {

namespace {

// Echelon basis indexed by pivot (highest set bit). `combo` records which of
// the inserted vectors were XORed together to produce each row.
struct EchelonBasis {
  std::array<Cell, 32> row{};
  std::array<std::uint32_t, 32> combo{};
  std::uint32_t pivots = 0;
  int rank = 0;

  // Reduces x in place; returns the combination of rows used.
  std::uint32_t reduce(Cell& x) const {
    std::uint32_t c = 0;
    for (int p = 31; p >= 0; --p) {
      if (((pivots >> p) & 1U) && ((x >> p) & 1U)) {
        x ^= row[p];
        c ^= combo[p];
      }
    }
    return c;
  }

  bool insert(Cell v, std::uint32_t tag) {
    std::uint32_t c = tag ^ reduce(v);
    if (v == 0) return false;
    const int p = 31 - std::countl_zero(v);
    for (int q = 0; q < 32; ++q) {
      if (((pivots >> q) & 1U) && ((row[q] >> p) & 1U)) {
        row[q] ^= v;
        combo[q] ^= c;
      }
    }
    row[p] = v;
    combo[p] = c;
    pivots |= 1U << p;
    ++rank;
    return true;
  }

  std::vector<Cell> rows() const {
    std::vector<Cell> out;
    for (int p = 0; p < 32; ++p) {
      if ((pivots >> p) & 1U) out.push_back(row[p]);
    }
    return out;
  }
};

}  // namespace

AffineFlat AffineFlat::whole(int dim) {
  AffineFlat f;
  f.dim = dim;
  for (int i = 1; i <= dim; ++i) f.basis.push_back(unit(i));
  return f;
}

bool AffineFlat::contains(Cell x) const {
  if (x >= (std::uint64_t{1} << dim)) return false;
  Cell v = x ^ basepoint;
  // Reduced echelon rows with distinct pivots: eliminate from the top pivot down.
  std::vector<Cell> sorted = basis;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (Cell r : sorted) {
    const int p = 31 - std::countl_zero(r);
    if ((v >> p) & 1U) v ^= r;
  }
  return v == 0;
}

std::vector<Cell> AffineFlat::sorted_points() const {
  std::vector<Cell> pts;
  pts.reserve(size());
  for (std::uint64_t combo = 0; combo < size(); ++combo) {
    Cell x = basepoint;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((combo >> i) & 1U) x ^= basis[i];
    }
    pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

Z2Set AffineFlat::points() const {
  const auto pts = sorted_points();
  return Z2Set::of(dim, pts);
}

std::uint64_t height(const Z2Set& a) {
  std::uint64_t h = 0;
  a.for_each([&](Cell x) { h += std::uint64_t{x} + 1; });
  return h;
}

Z2Set initial_segment(std::uint64_t count, int dim) {
  Z2Set out(dim);
  if (count > out.universe()) {
    throw Error("initial segment of size " + std::to_string(count) + " exceeds |Z_2^" +
                std::to_string(dim) + "|");
  }
  auto words = out.words();
  const std::uint64_t full_words = count >> 6;
  for (std::uint64_t w = 0; w < full_words; ++w) words[w] = ~std::uint64_t{0};
  if (count & 63U) words[full_words] = (std::uint64_t{1} << (count & 63U)) - 1;
  return out;
}

Z2Set initial_segment(std::uint64_t count, const AffineFlat& flat) {
  if (count > flat.size()) {
    throw Error("initial segment of size " + std::to_string(count) +
                " exceeds coset size " + std::to_string(flat.size()));
  }
  if (flat.is_whole()) return initial_segment(count, flat.dim);
  const auto pts = flat.sorted_points();
  return Z2Set::of(flat.dim, std::span<const Cell>(pts.data(), count));
}

AffineFlat affine_span(const Z2Set& a) {
  if (a.empty()) throw Error("affine span of the empty set");
  AffineFlat flat;
  flat.dim = a.dim();
  flat.basepoint = a.front();
  EchelonBasis basis;
  a.for_each([&](Cell x) {
    if (basis.rank < a.dim()) basis.insert(x ^ flat.basepoint, 0);
  });
  flat.basis = basis.rows();
  return flat;
}

bool affinely_generates(const Z2Set& a) {
  return !a.empty() && affine_span(a).is_whole();
}

AffineMap AffineMap::identity(int dim) {
  AffineMap m;
  m.dim = dim;
  for (int i = 1; i <= dim; ++i) m.columns.push_back(unit(i));
  return m;
}

Cell AffineMap::operator()(Cell x) const {
  Cell y = translation;
  for (std::size_t i = 0; x != 0; ++i, x >>= 1) {
    if (x & 1U) y ^= columns[i];
  }
  return y;
}

Z2Set AffineMap::operator()(const Z2Set& a) const {
  Z2Set out(a.dim());
  a.for_each([&](Cell x) { out.insert((*this)(x)); });
  return out;
}

bool AffineMap::is_identity() const { return translation == 0 && *this == identity(dim); }

Normalized normalize_to_basis(const Z2Set& a) {
  const int n = a.dim();
  if (a.empty()) throw Error("cannot normalize the empty set");
  const Cell base = a.front();
  EchelonBasis basis;
  a.for_each([&](Cell x) {
    if (basis.rank < n) basis.insert(x ^ base, std::uint32_t{1} << basis.rank);
  });
  if (basis.rank < n) {
    throw Error("set does not affinely generate Z_2^" + std::to_string(n) + " (affine rank " +
                std::to_string(basis.rank) + ")");
  }
  // L(v_k) = e_k where v_k is the k-th chosen difference; L x is read off the
  // combination that reduces x to zero.
  auto linear = [&](Cell x) {
    return basis.reduce(x);
  };
  AffineMap map;
  map.dim = n;
  for (int i = 1; i <= n; ++i) map.columns.push_back(linear(unit(i)));
  map.translation = linear(base);
  return {map(a), map};
}

Z2Set standard_basis(int dim) {
  Z2Set e(dim);
  e.insert(0);
  for (int i = 1; i <= dim; ++i) e.insert(unit(i));
  return e;
}

Z2Set coordinate_subgroup(int dim, std::uint32_t mask) {
  Z2Set h(dim);
  mask &= bits::low_mask(dim);
  // Enumerate all submasks of `mask`.
  for (std::uint32_t s = mask;; s = (s - 1) & mask) {
    h.insert(s);
    if (s == 0) break;
  }
  return h;
}

bool is_subgroup(const Z2Set& h) {
  if (!h.contains(0)) return false;
  const auto flat = affine_span(h);
  return flat.size() == h.size();
}

Z2Set hamming_ball_product(int k, int t, int n) {
  if (k < 0 || k > t || t > n) {
    throw Error("hamming ball needs 0 <= k <= t <= n, got k=" + std::to_string(k) +
                " t=" + std::to_string(t) + " n=" + std::to_string(n));
  }
  Z2Set out(n);
  const Cell head = bits::low_mask(t);
  for (std::uint64_t x = 0; x < out.universe(); ++x) {
    if (bits::weight(static_cast<Cell>(x) & head) <= k) out.insert(static_cast<Cell>(x));
  }
  return out;
}

}  // namespace z2sum
