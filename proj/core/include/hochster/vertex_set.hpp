#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hochster {

inline constexpr int max_ground_size = 63;

// Subset of the ground set [m]; label i (1-based) is bit i-1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> labels) {
    for (int v : labels) insert(v);
  }

  static VertexSet from_labels(const std::vector<int>& labels) {
    VertexSet s;
    for (int v : labels) s.insert(v);
    return s;
  }
  static constexpr VertexSet full(int m) {
    return VertexSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  static constexpr VertexSet singleton(int label) {
    return VertexSet(std::uint64_t{1} << (label - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int label) const { return (bits_ >> (label - 1)) & 1U; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  void insert(int label) { bits_ |= std::uint64_t{1} << (label - 1); }
  void erase(int label) { bits_ &= ~(std::uint64_t{1} << (label - 1)); }

  // Smallest / largest label; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  constexpr int max() const { return 64 - std::countl_zero(bits_); }

  // Number of elements strictly below label.
  constexpr int rank_of(int label) const {
    return std::popcount(bits_ & ((std::uint64_t{1} << (label - 1)) - 1));
  }

  constexpr VertexSet complement(int m) const { return VertexSet(~bits_ & full(m).bits_); }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on increasing vertex tuples: (1,2) < (1,2,3) < (1,3) < (2).
bool lex_less(VertexSet a, VertexSet b);

// Subset enumeration order used throughout: popcount first, then numeric value.
inline bool popcount_less(VertexSet a, VertexSet b) {
  int sa = a.size(), sb = b.size();
  return sa != sb ? sa < sb : a.bits() < b.bits();
}

// θ(I,J) = Σ_{i∈I} #{j∈J : j<i}.
inline int crossing_count(VertexSet I, VertexSet J) {
  int total = 0;
  for (std::uint64_t b = I.bits(); b != 0; b &= b - 1) {
    int pos = std::countr_zero(b);
    total += std::popcount(J.bits() & ((std::uint64_t{1} << pos) - 1));
  }
  return total;
}

// All subsets of [m] in popcount-then-numeric order.
std::vector<VertexSet> subsets_in_order(int m);

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

}  // namespace hochster
