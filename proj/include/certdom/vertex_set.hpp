#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace certdom {

using Vertex = int;

/// Largest vertex count a Graph or VertexSet can hold.
inline constexpr int kMaxVertices = 128;

/**
 * Fixed-capacity bitset over the vertex range [0, universe).
 *
 * The universe size travels with the set so that complement() is exact and
 * sets belonging to graphs of different orders are never mixed silently.
 * Bits at or above the universe are always zero.
 */
class VertexSet {
  static constexpr int kWordBits = 64;
  static constexpr int kWords = kMaxVertices / kWordBits;
  using Words = std::array<std::uint64_t, kWords>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}

    Vertex operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  VertexSet() = default;

  /// Empty set over [0, universe).
  explicit VertexSet(int universe) : n_(universe) {
    assert(universe >= 0 && universe <= kMaxVertices);
  }

  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < kWords; ++w) {
      int lo = w * kWordBits;
      if (universe >= lo + kWordBits) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (universe > lo) {
        s.words_[w] = (std::uint64_t{1} << (universe - lo)) - 1;
      }
    }
    return s;
  }

  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(Vertex v) const {
    assert(v >= 0 && v < n_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  void insert(Vertex v) {
    assert(v >= 0 && v < n_);
    words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  }

  void erase(Vertex v) {
    assert(v >= 0 && v < n_);
    words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const { return next(-1); }

  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const {
    int start = v + 1;
    if (start >= n_) return -1;
    int w = start / kWordBits;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (start % kWordBits));
    while (true) {
      if (word != 0) return w * kWordBits + std::countr_zero(word);
      if (++w >= kWords) return -1;
      word = words_[w];
    }
  }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  VertexSet complement() const {
    VertexSet s = full(n_);
    for (int w = 0; w < kWords; ++w) s.words_[w] &= ~words_[w];
    return s;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  int intersection_size(const VertexSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (int w = 0; w < kWords; ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool operator==(const VertexSet&) const = default;

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  Words words_{};
  int n_ = 0;
};

/// Lexicographic order on the ascending member lists ({0,5} before {1,2}).
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

/// "{0,2,5}"
std::string to_string(const VertexSet& s);

}  // namespace certdom
