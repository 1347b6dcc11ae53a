#include <gtest/gtest.h>

#include "support.hpp"

using namespace morsegrass;

namespace {

SchubertSymbol sym(int k, int n, std::vector<int> e) { return SchubertSymbol(k, n, std::move(e)); }

}  // namespace

TEST(Graphs, FirstBetti) {
  EXPECT_EQ(graph_first_betti(interval_graph()), 0);
  EXPECT_EQ(graph_first_betti(two_in_three_out_tree()), 0);
  const FlowGraph theta(2, {{EdgeKind::internal, 0, 1}, {EdgeKind::internal, 0, 1}, {EdgeKind::internal, 0, 1}});
  EXPECT_EQ(graph_first_betti(theta), 2);
  const FlowGraph loop(1, {{EdgeKind::internal, 0, 0}, {EdgeKind::incoming, -1, 0}});
  EXPECT_EQ(graph_first_betti(loop), 1);
  EXPECT_THROW(graph_first_betti(FlowGraph(2, {})), DomainError);
  EXPECT_THROW(FlowGraph(1, {{EdgeKind::internal, 0, 3}}), DomainError);
  EXPECT_THROW(FlowGraph(0, {}), DomainError);
}

TEST(ModuliDimension, IntervalIsIndexDifference) {
  EXPECT_EQ(moduli_dimension(interval_graph(), {8, {3}, {1}}), 2);
  for (int dim_m = 0; dim_m <= 8; ++dim_m)
    for (int a = 0; a <= dim_m; ++a)
      for (int b = 0; b <= dim_m; ++b) EXPECT_EQ(moduli_dimension(interval_graph(), {dim_m, {a}, {b}}), a - b);
}

TEST(ModuliDimension, TwoInOneOut) {
  EXPECT_EQ(moduli_dimension(star_graph(2, 1), {2, {2, 2}, {1}}), 1);
  for (int dim_m = 0; dim_m <= 6; ++dim_m)
    for (int a = 0; a <= dim_m; ++a)
      for (int b = 0; b <= dim_m; ++b)
        for (int c = 0; c <= dim_m; ++c) EXPECT_EQ(moduli_dimension(star_graph(2, 1), {dim_m, {a, b}, {c}}), a + b - c - dim_m);
}

TEST(ModuliDimension, YGraphZeroCondition) {
  for (int dim_m = 0; dim_m <= 8; ++dim_m)
    for (int a = 0; a <= dim_m; ++a)
      for (int b = 0; b <= dim_m; ++b)
        for (int c = 0; c <= dim_m; ++c) {
          const bool balanced = (dim_m - a) + (dim_m - b) + (dim_m - c) == dim_m;
          EXPECT_EQ(moduli_dimension(y_graph(), {dim_m, {a, b, c}, {}}) == 0, balanced);
        }
}

TEST(ModuliDimension, LoopsCostOneCopyOfTheManifold) {
  const FlowGraph loop(1, {{EdgeKind::internal, 0, 0}, {EdgeKind::incoming, -1, 0}, {EdgeKind::outgoing, 0, -1}});
  EXPECT_EQ(moduli_dimension(loop, {4, {3}, {1}}), 3 - 1 - 4);
}

TEST(ModuliDimension, LabelErrors) {
  EXPECT_THROW(moduli_dimension(interval_graph(), {4, {1, 2}, {1}}), DomainError);
  EXPECT_THROW(moduli_dimension(interval_graph(), {4, {5}, {1}}), DomainError);
  EXPECT_THROW(moduli_dimension(interval_graph(), {-1, {0}, {0}}), DomainError);
}

TEST(Graft, DimensionIsAdditive) {
  const LabeledEnds l1{6, {5, 4}, {3}};
  const LabeledEnds l2{6, {3}, {2, 1}};
  const auto [g, l] = graft(star_graph(2, 1), l1, 0, star_graph(1, 2), l2, 0);
  EXPECT_EQ(g.vertices(), 2);
  EXPECT_EQ(g.internal(), 1);
  EXPECT_EQ(l.incoming, (std::vector<int>{5, 4}));
  EXPECT_EQ(l.outgoing, (std::vector<int>{2, 1}));
  EXPECT_EQ(moduli_dimension(g, l), moduli_dimension(star_graph(2, 1), l1) + moduli_dimension(star_graph(1, 2), l2));
  EXPECT_THROW(graft(star_graph(2, 1), l1, 0, star_graph(1, 2), LabeledEnds{6, {2}, {2, 1}}, 0), DomainError);
  EXPECT_THROW(graft(star_graph(2, 1), l1, 1, star_graph(1, 2), l2, 0), DomainError);
}

TEST(Graft, ExhaustiveSmallTrees) {
  const int dim_m = 4;
  for (int a = 0; a <= dim_m; ++a)
    for (int b = 0; b <= dim_m; ++b)
      for (int c = 0; c <= dim_m; ++c)
        for (int d = 0; d <= dim_m; ++d) {
          const LabeledEnds l1{dim_m, {a, b}, {c}};
          const LabeledEnds l2{dim_m, {c, d}, {b}};
          const auto [g, l] = graft(star_graph(2, 1), l1, 0, star_graph(2, 1), l2, 0);
          EXPECT_EQ(graph_first_betti(g), 0);
          EXPECT_EQ(moduli_dimension(g, l), moduli_dimension(star_graph(2, 1), l1) + moduli_dimension(star_graph(2, 1), l2));
        }
}

TEST(CupProductInstance, MatchesTripleProducts) {
  EXPECT_EQ(cup_product_instance(sym(2, 4, {1, 4}), sym(2, 4, {2, 4}), sym(2, 4, {2, 4})), 1);
  EXPECT_EQ(cup_product_instance(sym(2, 4, {2, 3}), sym(2, 4, {2, 4}), sym(2, 4, {2, 4})), 1);
  EXPECT_EQ(cup_product_instance(sym(2, 4, {2, 4}), sym(2, 4, {1, 3}), SchubertSymbol::maximal(2, 4)),
            duality_pairing(sym(2, 4, {2, 4}), sym(2, 4, {1, 3})));
  EXPECT_THROW(cup_product_instance(sym(2, 4, {1, 4}), sym(2, 4, {1, 4}), sym(2, 4, {1, 4})), DomainError);
  int admissible = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      const auto basis = enumerate_symbols(k, n);
      for (const auto& u : basis)
        for (const auto& v : basis)
          for (const auto& w : basis) {
            const int top = 2 * k * (n - k);
            if (degree(u) + degree(v) + degree(w) != top) {
              EXPECT_THROW(cup_product_instance(u, v, w), DomainError);
              continue;
            }
            ++admissible;
            EXPECT_EQ(cup_product_instance(u, v, w), triple_product(u, v, w));
          }
    }
  EXPECT_GT(admissible, 0);
}
