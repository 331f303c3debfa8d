#include <gtest/gtest.h>

#include "certdom/domination.hpp"
#include "certdom/enumerate.hpp"
#include "certdom/families.hpp"
#include "support/reference.hpp"

using namespace certdom;

namespace {

VertexSet from_mask(std::uint32_t mask, int n) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.insert(v);
  }
  return s;
}

}  // namespace

TEST(Dominating, Examples) {
  const Graph p3 = path_graph(3);
  EXPECT_TRUE(is_dominating(p3, VertexSet(3, {1})));
  EXPECT_FALSE(is_dominating(p3, VertexSet(3, {0})));
  EXPECT_TRUE(is_dominating(wheel_graph(7), wheel_graph(7).vertices()));
  EXPECT_TRUE(is_dominating(Graph(0), VertexSet(0)));
  EXPECT_EQ(undominated(p3, VertexSet(3, {0})), VertexSet(3, {2}));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_vertex(path_graph(4), VertexSet(4, {1, 2}), 1), VertexStatus::HalfShadowed);
  EXPECT_EQ(classify_vertex(Graph(1), VertexSet(1, {0}), 0), VertexStatus::Shadowed);
  EXPECT_EQ(classify_vertex(complete_bipartite_graph(1, 3), VertexSet(4, {0}), 0), VertexStatus::Illuminated);
  EXPECT_EQ(classify_vertex(path_graph(4), VertexSet(4, {1, 2}), 0), VertexStatus::Outside);
  EXPECT_EQ(to_string(VertexStatus::HalfShadowed), "half-shadowed");
}

TEST(Certified, Examples) {
  EXPECT_TRUE(is_certified_dominating(cycle_graph(4), VertexSet(4, {0, 2})));
  EXPECT_FALSE(is_certified_dominating(path_graph(4), VertexSet(4, {1, 2})));
  EXPECT_FALSE(is_certified_dominating(complete_graph(2), VertexSet(2, {0})));
  EXPECT_TRUE(is_certified_dominating(complete_graph(2), VertexSet(2, {0, 1})));
}

TEST(TwoDominating, Examples) {
  EXPECT_TRUE(is_2dominating(cycle_graph(4), VertexSet(4, {1, 3})));
  EXPECT_TRUE(is_2dominating(path_graph(3), VertexSet(3, {0, 2})));
  EXPECT_FALSE(is_2dominating(complete_graph(2), VertexSet(2, {0})));
}

TEST(DD2Pair, Examples) {
  const Graph c4 = cycle_graph(4);
  EXPECT_TRUE(is_dd2_pair(c4, {VertexSet(4, {0, 2}), VertexSet(4, {1, 3})}));
  EXPECT_FALSE(is_dd2_pair(c4, {VertexSet(4, {0, 2}), VertexSet(4, {0, 1, 3})}));
  const Graph k2 = complete_graph(2);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) EXPECT_FALSE(is_dd2_pair(k2, {from_mask(a, 2), from_mask(b, 2)}));
  }
  const auto [d, d2] = fig1_dd2_pair(3);
  EXPECT_TRUE(is_dd2_pair(fig1_graph(3), {d, d2}));
  EXPECT_EQ(d.size(), 7);
}

TEST(Minimal, Examples) {
  const Graph p3 = path_graph(3);
  EXPECT_TRUE(is_minimal_dominating(p3, VertexSet(3, {1})));
  EXPECT_FALSE(is_minimal_dominating(p3, VertexSet(3, {0, 1})));
  EXPECT_TRUE(is_minimal_dominating(cycle_graph(6), VertexSet(6, {0, 3})));
}

TEST(Predicates, MatchReferenceOnEverySubsetOfSmallGraphs) {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      const auto m = ref::from_graph(g);
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const VertexSet d = from_mask(mask, n);
        ASSERT_EQ(is_dominating(g, d), ref::dominating(m, mask));
        ASSERT_EQ(is_certified_dominating(g, d), ref::certified(m, mask));
        ASSERT_EQ(is_2dominating(g, d), ref::two_dominating(m, mask));
        for (Vertex v = 0; v < n; ++v) {
          const VertexStatus s = classify_vertex(g, d, v);
          if (!d.contains(v)) {
            ASSERT_EQ(s, VertexStatus::Outside);
            continue;
          }
          const int out = ref::outside_neighbours(m, mask, v);
          ASSERT_EQ(s, out == 0 ? VertexStatus::Shadowed : out == 1 ? VertexStatus::HalfShadowed : VertexStatus::Illuminated);
        }
      }
    }
  }
}

TEST(Predicates, StructuralInvariantsOnSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      const bool no_isolated = g.min_degree() >= 1;
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const VertexSet d = from_mask(mask, n);
        if (is_certified_dominating(g, d)) {
          ASSERT_TRUE(is_dominating(g, d));
        }
        if (!is_dominating(g, d) || !is_minimal_dominating(g, d)) continue;
        if (!no_isolated) continue;
        for (Vertex v : d) ASSERT_NE(classify_vertex(g, d, v), VertexStatus::Shadowed);
        if (is_certified_dominating(g, d)) {
          ASSERT_TRUE(is_2dominating(g, d.complement()));
        }
      }
    }
  }
}
