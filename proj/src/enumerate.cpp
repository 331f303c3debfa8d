#include "certdom/enumerate.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace certdom {

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > kEnumerationHardCap) throw std::out_of_range("order out of range: " + std::to_string(n));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<VertexSet> rows(n, VertexSet(n));
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

std::uint64_t edge_mask(const Graph& g) {
  const int n = g.order();
  if (n > kEnumerationHardCap) throw std::out_of_range("order too large for an edge mask");
  std::uint64_t mask = 0;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << k;
    }
  }
  return mask;
}

LabeledGraphRange enumerate_labeled_graphs(int n, bool allow_large) {
  if (n < 0) throw std::out_of_range("negative order");
  if (n > kEnumerationCap && !allow_large) {
    throw std::out_of_range("enumeration of order " + std::to_string(n) + " refused above cap " +
                            std::to_string(kEnumerationCap) + " without override");
  }
  return LabeledGraphRange(n, labeled_graph_count(n));
}

}  // namespace certdom
