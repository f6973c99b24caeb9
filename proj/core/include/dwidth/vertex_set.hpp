#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwidth {

// A set of vertex ids drawn from 0..63, stored as a bitmask. Every exact
// algorithm in this library is exponential, so 64 vertices is far beyond
// anything the searches can handle anyway.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  // {0, 1, ..., n-1}
  static VertexSet first(int n) {
    check_id(n == 0 ? 0 : n - 1);
    if (n == 0) return {};
    if (n == kMaxVertices) return from_bits(~std::uint64_t{0});
    return from_bits((std::uint64_t{1} << n) - 1);
  }

  template <typename Range>
  static VertexSet of(const Range& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  bool contains(int v) const {
    return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U) != 0;
  }
  void insert(int v) {
    check_id(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(int v) {
    check_id(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  // Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  // One past the largest element (0 for the empty set).
  constexpr int bound() const { return kMaxVertices - std::countl_zero(bits_); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  // Lexicographic comparison of the sorted element lists, e.g. {0,2} < {1}.
  friend bool lex_less(VertexSet a, VertexSet b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
  }

  std::string to_string() const {
    std::string out = "{";
    bool first_element = true;
    for (int v : *this) {
      if (!first_element) out += ",";
      out += std::to_string(v);
      first_element = false;
    }
    return out + "}";
  }

 private:
  static void check_id(int v) {
    if (v < 0 || v >= kMaxVertices) {
      throw std::out_of_range("vertex id " + std::to_string(v) + " outside 0.." +
                              std::to_string(kMaxVertices - 1));
    }
  }

  std::uint64_t bits_ = 0;
};

// Calls fn(subset) for every k-subset of `from`, in lexicographic order of the
// sorted element lists. Stops early when fn returns false.
template <typename Fn>
bool for_each_subset_of_size(VertexSet from, int k, Fn&& fn) {
  const std::vector<int> elems = from.to_vector();
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(elems[i]);
    if (!fn(s)) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace dwidth
