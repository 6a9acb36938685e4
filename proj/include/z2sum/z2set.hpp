#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "z2sum/config.hpp"

namespace z2sum {

/// Cell index of an element x = sum x_i e_i of Z_2^n, encoded as
/// sum x_i 2^(i-1). Integer order on cells is the lexicographic order
/// (largest differing coordinate decides), so "lex smallest" means "smallest
/// cell".
using Cell = std::uint32_t;

/// e_i for a 1-based coordinate index.
constexpr Cell unit(int i) { return Cell{1} << (i - 1); }

/// A subset of Z_2^n stored as an indicator bitmap over 2^n cells.
/// Bits beyond 2^n in the last word are always zero.
class Z2Set {
 public:
  Z2Set() : Z2Set(0) {}
  explicit Z2Set(int dim);

  static Z2Set full(int dim);
  /// Builds a set from cell indices; duplicates are allowed and collapse.
  static Z2Set of(int dim, std::span<const Cell> cells);
  static Z2Set of(int dim, std::initializer_list<Cell> cells) {
    return of(dim, std::span<const Cell>(cells.begin(), cells.size()));
  }

  int dim() const { return dim_; }
  std::uint64_t universe() const { return std::uint64_t{1} << dim_; }

  bool contains(Cell x) const {
    return x < universe() && ((words_[x >> 6] >> (x & 63)) & 1U);
  }
  void insert(Cell x);
  void erase(Cell x);

  std::uint64_t size() const;
  bool empty() const;
  /// Smallest member; the set must be non-empty.
  Cell front() const;

  std::vector<Cell> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<Cell>((w << 6) | static_cast<unsigned>(std::countr_zero(bits))));
      }
    }
  }

  bool is_subset_of(const Z2Set& other) const;

  Z2Set& operator|=(const Z2Set& other);
  Z2Set& operator&=(const Z2Set& other);
  /// Set difference.
  Z2Set& operator-=(const Z2Set& other);
  friend Z2Set operator|(Z2Set a, const Z2Set& b) { return a |= b; }
  friend Z2Set operator&(Z2Set a, const Z2Set& b) { return a &= b; }
  friend Z2Set operator-(Z2Set a, const Z2Set& b) { return a -= b; }

  /// x + A for a single element x.
  Z2Set translate(Cell x) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool operator==(const Z2Set&) const = default;

  /// Lexicographic comparison of the sorted member lists; used as the
  /// deterministic tie-break between witnesses.
  static bool encoding_less(const Z2Set& a, const Z2Set& b);

  std::string to_string() const;

 private:
  void check_cell(Cell x) const;

  int dim_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Throws unless both sets live in the same dimension.
void require_same_dim(const Z2Set& a, const Z2Set& b);

// "z2set v1" text format: "# z2set v1", "n=<dim>", one decimal cell per line.
Z2Set read_z2set(std::istream& in);
Z2Set read_z2set(const std::filesystem::path& path);
void write_z2set(std::ostream& out, const Z2Set& set);
void write_z2set(const std::filesystem::path& path, const Z2Set& set);

}  // namespace z2sum
