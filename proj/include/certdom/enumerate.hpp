#pragma once

#include <cstdint>
#include <iterator>

#include "certdom/graph.hpp"

namespace certdom {

/// Largest order enumerated without an explicit override.
inline constexpr int kEnumerationCap = 7;
/// Largest order whose edge masks fit in 64 bits.
inline constexpr int kEnumerationHardCap = 11;

/// 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

/// Bit k of mask selects the k-th vertex pair in the order (0,1), (0,2), (1,2), (0,3), (1,3), ...
Graph labeled_graph(int n, std::uint64_t mask);

/// Inverse of labeled_graph.
std::uint64_t edge_mask(const Graph& g);

/// All labeled simple graphs on n vertices in increasing edge-mask order.
class LabeledGraphRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Graph;

    iterator() = default;
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return labeled_graph(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }
    std::uint64_t mask() const { return mask_; }

   private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
  };

  LabeledGraphRange(int n, std::uint64_t count) : n_(n), count_(count) {}
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const { return count_; }
  int order() const { return n_; }

 private:
  int n_;
  std::uint64_t count_;
};

/// Throws std::out_of_range for n < 0, for n above kEnumerationCap unless
/// allow_large, and for n above kEnumerationHardCap always.
LabeledGraphRange enumerate_labeled_graphs(int n, bool allow_large = false);

}  // namespace certdom
