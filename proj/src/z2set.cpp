#include "z2sum/z2set.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace z2sum {

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace {

std::size_t word_count(int dim) {
  return dim >= 6 ? (std::size_t{1} << (dim - 6)) : 1;
}

std::uint64_t tail_mask(int dim) {
  return dim >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << dim)) - 1);
}

// Positions whose bit j is clear, for j = 0..5.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

std::uint64_t xor_permute_word(std::uint64_t v, unsigned s) {
  for (unsigned j = 0; j < 6; ++j) {
    if ((s >> j) & 1U) {
      const unsigned shift = 1U << j;
      v = ((v & kLowHalf[j]) << shift) | ((v >> shift) & kLowHalf[j]);
    }
  }
  return v;
}

}  // namespace

Z2Set::Z2Set(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim) {
    throw Error("dimension " + std::to_string(dim) + " outside [0, " +
                std::to_string(kMaxDim) + "]");
  }
  words_.assign(word_count(dim), 0);
}

Z2Set Z2Set::full(int dim) {
  Z2Set s(dim);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.words_.back() &= tail_mask(dim);
  return s;
}

Z2Set Z2Set::of(int dim, std::span<const Cell> cells) {
  Z2Set s(dim);
  for (Cell c : cells) s.insert(c);
  return s;
}

void Z2Set::check_cell(Cell x) const {
  if (x >= universe()) {
    throw Error("cell " + std::to_string(x) + " outside Z_2^" + std::to_string(dim_));
  }
}

void Z2Set::insert(Cell x) {
  check_cell(x);
  words_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

void Z2Set::erase(Cell x) {
  check_cell(x);
  words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
}

std::uint64_t Z2Set::size() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

bool Z2Set::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Cell Z2Set::front() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Cell>((w << 6) | static_cast<unsigned>(std::countr_zero(words_[w])));
    }
  }
  throw Error("front() of empty set");
}

std::vector<Cell> Z2Set::members() const {
  std::vector<Cell> out;
  out.reserve(size());
  for_each([&](Cell x) { out.push_back(x); });
  return out;
}

bool Z2Set::is_subset_of(const Z2Set& other) const {
  require_same_dim(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

Z2Set& Z2Set::operator|=(const Z2Set& other) {
  require_same_dim(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Z2Set& Z2Set::operator&=(const Z2Set& other) {
  require_same_dim(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Z2Set& Z2Set::operator-=(const Z2Set& other) {
  require_same_dim(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Z2Set Z2Set::translate(Cell x) const {
  check_cell(x);
  Z2Set out(dim_);
  const std::size_t high = x >> 6;
  const unsigned low = x & 63U;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w ^ high] = xor_permute_word(words_[w], low);
  }
  return out;
}

bool Z2Set::encoding_less(const Z2Set& a, const Z2Set& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string Z2Set::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Cell x) {
    os << (first ? "" : ",") << x;
    first = false;
  });
  os << '}';
  return os.str();
}

void require_same_dim(const Z2Set& a, const Z2Set& b) {
  if (a.dim() != b.dim()) {
    throw Error("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                std::to_string(b.dim()));
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

template <class T>
T parse_unsigned(std::string_view text, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error("z2set line " + std::to_string(line_no) + ": expected a decimal integer, got '" +
                std::string(text) + "'");
  }
  return value;
}

}  // namespace

Z2Set read_z2set(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "# z2set v1") {
    throw Error("z2set: missing '# z2set v1' header");
  }
  if (!std::getline(in, line)) throw Error("z2set: missing 'n=<dim>' line");
  auto dim_line = trim(line);
  if (dim_line.substr(0, 2) != "n=") throw Error("z2set: line 2 must be 'n=<dim>'");
  const int dim = parse_unsigned<int>(dim_line.substr(2), 2);
  Z2Set set(dim);
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = trim(line);
    if (text.empty()) continue;
    const auto cell = parse_unsigned<std::uint64_t>(text, line_no);
    if (cell >= set.universe()) {
      throw Error("z2set line " + std::to_string(line_no) + ": cell " + std::to_string(cell) +
                  " out of range for n=" + std::to_string(dim));
    }
    if (set.contains(static_cast<Cell>(cell))) {
      throw Error("z2set line " + std::to_string(line_no) + ": duplicate cell " +
                  std::to_string(cell));
    }
    set.insert(static_cast<Cell>(cell));
  }
  return set;
}

Z2Set read_z2set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_z2set(in);
}

void write_z2set(std::ostream& out, const Z2Set& set) {
  out << "# z2set v1\n" << "n=" << set.dim() << '\n';
  set.for_each([&](Cell x) { out << x << '\n'; });
}

void write_z2set(const std::filesystem::path& path, const Z2Set& set) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_z2set(out, set);
}

}  // namespace z2sum
