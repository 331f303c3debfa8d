#include <gtest/gtest.h>

#include "certdom/enumerate.hpp"
#include "certdom/families.hpp"
#include "certdom/solver.hpp"
#include "certdom/structure.hpp"
#include "support/reference.hpp"

using namespace certdom;

TEST(UniversalVertex, Examples) {
  EXPECT_EQ(find_universal_vertex(wheel_graph(7)), 0);
  EXPECT_EQ(find_universal_vertex(path_graph(3)), 1);
  EXPECT_FALSE(find_universal_vertex(cycle_graph(4)).has_value());
  EXPECT_EQ(find_universal_vertex(Graph(1)), 0);
  EXPECT_FALSE(find_universal_vertex(Graph(0)).has_value());
}

TEST(Recognisers, ShapeTests) {
  EXPECT_EQ(recognize_path(path_graph(7)), 7);
  EXPECT_EQ(recognize_path(path_graph(4).without_edge(0, 1).with_edge(0, 3)), 4);
  EXPECT_FALSE(recognize_path(cycle_graph(5)).has_value());
  EXPECT_FALSE(recognize_path(disjoint_union(path_graph(2), path_graph(2))).has_value());
  EXPECT_EQ(recognize_cycle(cycle_graph(6)), 6);
  EXPECT_FALSE(recognize_cycle(disjoint_union(cycle_graph(3), cycle_graph(3))).has_value());
  EXPECT_EQ(recognize_complete(complete_graph(5)), 5);
  EXPECT_EQ(recognize_complete_bipartite(complete_bipartite_graph(2, 4)), std::make_pair(2, 4));
  EXPECT_EQ(recognize_complete_bipartite(cycle_graph(4)), std::make_pair(2, 2));
  EXPECT_FALSE(recognize_complete_bipartite(cycle_graph(6)).has_value());
  EXPECT_EQ(recognize_wheel(wheel_graph(9)), 0);
  EXPECT_TRUE(recognize_wheel(complete_graph(4)).has_value());
  EXPECT_FALSE(recognize_wheel(cycle_graph(5)).has_value());
}

TEST(CoronaRecognition, Examples) {
  EXPECT_EQ(recognize_corona(path_graph(4)), VertexSet(4, {1, 2}));
  EXPECT_EQ(recognize_corona(corona(cycle_graph(4), complete_graph(1))), VertexSet(8, {0, 1, 2, 3}));
  EXPECT_FALSE(recognize_corona(cycle_graph(6)).has_value());
  EXPECT_EQ(recognize_corona(complete_graph(2)), VertexSet(2, {0}));
  EXPECT_FALSE(recognize_corona(Graph(1)).has_value());
  EXPECT_FALSE(recognize_corona(disjoint_union(path_graph(4), Graph(1))).has_value());
}

TEST(CoronaRecognition, BaseReconstructsTheGraph) {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& h : enumerate_labeled_graphs(n)) {
      const Graph g = corona(h, complete_graph(1));
      const auto base = recognize_corona(g);
      ASSERT_TRUE(base.has_value());
      EXPECT_EQ(corona(induced_subgraph(g, *base), complete_graph(1)).order(), g.order());
      EXPECT_EQ(induced_subgraph(g, *base), h);
    }
  }
}

TEST(DiademRecognition, Examples) {
  const auto p3 = recognize_diadem(path_graph(3));
  ASSERT_TRUE(p3.has_value());
  EXPECT_EQ(p3->strong_support, 1);
  EXPECT_EQ(p3->base, VertexSet(3, {1}));

  const Graph h = disjoint_union(complete_graph(3), complete_graph(2));
  const auto w = recognize_diadem(diadem(h));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->strong_support, 0);
  EXPECT_EQ(w->base, VertexSet(11, {0, 1, 2, 3, 4}));

  EXPECT_FALSE(recognize_diadem(cycle_graph(4)).has_value());
  EXPECT_FALSE(recognize_diadem(complete_bipartite_graph(1, 3)).has_value());
}

TEST(DiademRecognition, RecognisedForEveryBaseUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& h : enumerate_labeled_graphs(n)) {
      const Graph g = diadem(h);
      const auto w = recognize_diadem(g);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(induced_subgraph(g, w->base), h);
      EXPECT_EQ(strong_supports(g), VertexSet(g.order(), {w->strong_support}));
    }
  }
}

TEST(ClosedForm, Examples) {
  auto p10 = closed_form(path_graph(10));
  ASSERT_TRUE(p10.has_value());
  EXPECT_EQ(p10->value, 4);
  EXPECT_TRUE(std::holds_alternative<structure::Path>(p10->cls));

  auto star = closed_form(complete_bipartite_graph(1, 7));
  ASSERT_TRUE(star.has_value());
  EXPECT_EQ(star->value, 1);

  auto c = closed_form(corona(path_graph(3), complete_graph(1)));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->value, 6);
  EXPECT_TRUE(std::holds_alternative<structure::CoronaOf>(c->cls));
  EXPECT_FALSE(closed_form(fig3a_graph(2)).has_value());
}

TEST(ClosedForm, OverlappingClassesAgree) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      if (!is_connected(g)) continue;
      const auto forms = all_closed_forms(g);
      if (forms.empty()) continue;
      const int truth = ref::gamma_cer(ref::from_graph(g)).value;
      for (const auto& f : forms) EXPECT_EQ(f.value, truth) << to_string(f.cls);
    }
  }
}

TEST(ClosedForm, FamiliesMatchOracleUpToTwelve) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(gamma_cer_path(n), gamma_cer_oracle(path_graph(n)).value) << n;
    EXPECT_EQ(gamma_cer_complete(n), gamma_cer_oracle(complete_graph(n)).value) << n;
    if (n >= 3) {
      EXPECT_EQ(gamma_cer_cycle(n), gamma_cer_oracle(cycle_graph(n)).value) << n;
    }
    if (n >= 4) {
      EXPECT_EQ(gamma_cer_wheel(n), gamma_cer_oracle(wheel_graph(n)).value) << n;
    }
    for (int m = 1; m <= n && m + n <= 12; ++m) {
      EXPECT_EQ(gamma_cer_complete_bipartite(m, n), gamma_cer_oracle(complete_bipartite_graph(m, n)).value);
    }
  }
}

TEST(Characterisations, Examples) {
  EXPECT_TRUE(check_gamma_cer_equals_n(empty_graph(5)));
  EXPECT_TRUE(check_gamma_cer_equals_n(disjoint_union(path_graph(4), Graph(1))));
  EXPECT_FALSE(check_gamma_cer_equals_n(cycle_graph(3)));
  EXPECT_TRUE(check_gamma_cer_equals_n(Graph(0)));

  EXPECT_TRUE(check_gamma_cer_equals_n_minus_2(cycle_graph(4)));
  EXPECT_TRUE(check_gamma_cer_equals_n_minus_2(disjoint_union(diadem(complete_graph(2)), Graph(1))));
  EXPECT_FALSE(check_gamma_cer_equals_n_minus_2(path_graph(4)));
  EXPECT_TRUE(check_gamma_cer_equals_n_minus_2(disjoint_union(cycle_graph(3), path_graph(2))));
  EXPECT_FALSE(check_gamma_cer_equals_n_minus_2(disjoint_union(cycle_graph(3), cycle_graph(4))));
  EXPECT_THROW(check_gamma_cer_equals_n_minus_2(path_graph(2)), std::invalid_argument);
}

TEST(Characterisations, ExactOnAllGraphsUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      const int truth = ref::gamma_cer(ref::from_graph(g)).value;
      ASSERT_EQ(check_gamma_cer_equals_n(g), truth == n);
      if (n >= 3) {
        ASSERT_EQ(check_gamma_cer_equals_n_minus_2(g), truth == n - 2);
      }
    }
  }
}

TEST(Formulas, StatedTables) {
  const int paths[] = {1, 2, 1, 4, 2, 2, 3, 3, 3, 4};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(gamma_cer_path(n), paths[n - 1]) << n;
  EXPECT_EQ(gamma_cer_cycle(7), 3);
  EXPECT_EQ(gamma_cer_complete(2), 2);
  EXPECT_EQ(gamma_cer_complete(3), 1);
  EXPECT_EQ(gamma_cer_complete_bipartite(1, 1), 2);
  EXPECT_EQ(gamma_cer_complete_bipartite(1, 2), 1);
  EXPECT_EQ(gamma_cer_complete_bipartite(3, 3), 2);
  EXPECT_EQ(gamma_cer_wheel(10), 1);
}

TEST(StructureClass, Names) {
  EXPECT_EQ(to_string(StructureClass{structure::Path{10}}), "path(10)");
  EXPECT_EQ(to_string(StructureClass{structure::CoronaOf{VertexSet(4, {0, 1, 2})}}), "corona-of{0,1,2}");
}
