#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "bei/classify.hpp"

using namespace bei;
using Kind = JoinCertificate::Kind;

namespace {

Graph kc(int t) { return empty_graph(t); }
Graph k(int r) { return complete_graph(r); }
Graph un(const Graph& a, const Graph& b) { return disjoint_union(a, b); }

bool only_block_leaves(const JoinCertificate& c) {
  if (c.kind == Kind::Leaf) return c.block.has_value();
  for (const auto& ch : c.children)
    if (!only_block_leaves(ch)) return false;
  return true;
}

void check_join_rule(const JoinCertificate& c) {
  for (const auto& ch : c.children) check_join_rule(ch);
  if (c.kind != Kind::Join) return;
  ASSERT_EQ(c.children.size(), 2u);
  const auto& a = c.children[0].predicted_reg;
  const auto& b = c.children[1].predicted_reg;
  if (a && b) {
    ASSERT_TRUE(c.predicted_reg.has_value());
    EXPECT_EQ(*c.predicted_reg, std::max({*a, *b, 3}));
  } else {
    EXPECT_FALSE(c.predicted_reg.has_value());
  }
}

// Class from the definition-level rules, without the decomposition:
// reg 2 iff the non-isolated part is complete.
bool stripped_complete(const Graph& g) {
  const VertexSet core = g.vertices() - isolated_vertices(g);
  return !core.empty() && is_complete(induced_subgraph(g, core));
}

}  // namespace

TEST(JoinDecompose, Examples) {
  const auto c4 = join_decompose(cycle_graph(4));
  ASSERT_EQ(c4.kind, Kind::Join);
  ASSERT_EQ(c4.children.size(), 2u);
  for (const auto& ch : c4.children) {
    ASSERT_EQ(ch.kind, Kind::Leaf);
    EXPECT_EQ(ch.block, (Block{0, 0, 2}));
  }
  EXPECT_EQ(*c4.predicted_reg, 3);

  const auto star = join_decompose(star_graph(3));
  ASSERT_EQ(star.kind, Kind::Join);
  EXPECT_EQ(star.children[0].block, (Block{0, 0, 1}));
  EXPECT_EQ(star.children[0].vertices, (VertexSet{1}));
  EXPECT_EQ(star.children[1].block, (Block{0, 0, 3}));
  EXPECT_EQ(describe(star), "join(K1[no-edges], K3^c[no-edges])[3]");

  const auto p4 = join_decompose(path_graph(4));
  EXPECT_EQ(p4.kind, Kind::Leaf);
  EXPECT_TRUE(p4.is_general_leaf());
  EXPECT_EQ(p4.shape.tag, GraphClass::Tag::Path);
  EXPECT_EQ(*p4.predicted_reg, 4);

  const auto two_k2 = join_decompose(un(k(2), k(2)));
  EXPECT_EQ(two_k2.kind, Kind::Leaf);
  EXPECT_EQ(two_k2.block, (Block{2, 2, 0}));
}

TEST(JoinDecompose, ReconstructsEveryGraph) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_small_graphs(n)) {
      const auto c = join_decompose(g);
      EXPECT_EQ(reconstruct(c, n), g) << to_graph6(g);
      check_join_rule(c);
    }
}

TEST(JoinDecompose, ChildrenPartitionTheVertexSet) {
  for (const Graph& g : enumerate_small_graphs(6)) {
    std::function<void(const JoinCertificate&)> rec = [&](const JoinCertificate& c) {
      if (c.kind == Kind::Leaf) return;
      VertexSet seen;
      for (const auto& ch : c.children) {
        EXPECT_FALSE(seen.intersects(ch.vertices));
        seen = seen | ch.vertices;
        rec(ch);
      }
      EXPECT_EQ(seen, c.vertices);
      for (std::size_t i = 1; i < c.children.size(); ++i)
        EXPECT_LE(c.children[i - 1].vertices.size(), c.children[i].vertices.size());
    };
    rec(join_decompose(g));
  }
}

TEST(RegularityClassTest, Examples) {
  EXPECT_EQ(regularity_class(path_graph(3)), RegClass::Three);
  EXPECT_EQ(regularity_class(un(k(2), k(2))), RegClass::Three);
  EXPECT_EQ(regularity_class(path_graph(4)), RegClass::AtLeastFour);
  EXPECT_EQ(regularity_class(k(4)), RegClass::Two);
  EXPECT_EQ(regularity_class(un(k(3), kc(2))), RegClass::Two);
  EXPECT_EQ(regularity_class(kc(3)), RegClass::NoEdges);
  EXPECT_EQ(regularity_class(Graph(1)), RegClass::NoEdges);
  EXPECT_EQ(regularity_class(un(un(k(2), k(2)), k(2))), RegClass::AtLeastFour);
  EXPECT_EQ(regularity_class(un(path_graph(3), k(2))), RegClass::AtLeastFour);
  EXPECT_EQ(regularity_class(cycle_graph(5)), RegClass::AtLeastFour);
}

TEST(StructuralRegularity, Examples) {
  EXPECT_EQ(structural_regularity(join(Graph(1), un(path_graph(3), path_graph(3)))).value, 5);
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(structural_regularity(path_graph(n)).value, n) << n;
  for (int r = 2; r <= 4; ++r)
    for (int s = 2; s <= 4; ++s) EXPECT_EQ(structural_regularity(un(k(r), k(s))).value, 3);
  EXPECT_EQ(structural_regularity(k(5)).value, 2);
  EXPECT_EQ(structural_regularity(kc(4)).value, kRegNoEdges);
  EXPECT_FALSE(structural_regularity(cycle_graph(5)).value.has_value());
  EXPECT_EQ(structural_regularity(un(path_graph(4), un(k(3), kc(2)))).value, 5);
  EXPECT_EQ(structural_regularity(un(path_graph(4), path_graph(5))).value, 8);
}

TEST(StructuralRegularity, ClassThreeIffStructuralThree) {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_small_graphs(n)) {
      const auto cls = regularity_class(g);
      const auto s = structural_regularity(g);
      EXPECT_EQ(cls == RegClass::Three, s.value == 3) << to_graph6(g);
      EXPECT_EQ(cls == RegClass::Two, stripped_complete(g)) << to_graph6(g);
      EXPECT_EQ(cls == RegClass::NoEdges, g.edge_count() == 0) << to_graph6(g);
      if (s.value) {
        if (*s.value == 2) {
          EXPECT_EQ(cls, RegClass::Two);
        }
        if (*s.value >= 4) {
          EXPECT_EQ(cls, RegClass::AtLeastFour);
        }
      }
    }
}

TEST(StructuralRegularity, ClassThreeBottomsOutInBlocks) {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_small_graphs(n))
      if (regularity_class(g) == RegClass::Three) {
        EXPECT_TRUE(only_block_leaves(join_decompose(g))) << to_graph6(g);
      }
}

TEST(StructuralRegularity, FourVertexCensus) {
  std::set<CanonicalForm> found;
  for (const Graph& g : enumerate_small_graphs(4))
    if (regularity_class(g) == RegClass::Three) found.insert(canonical_form(g));
  const std::vector<Graph> named = {
      un(k(2), k(2)),                    // 2K2
      join(kc(2), kc(2)),                // C4
      join(kc(2), k(2)),                 // K2^c * K2
      join(un(k(2), k(1)), k(1)),        // (K2 + K1) * K1
      join(kc(3), k(1)),                 // K_{1,3}
      un(k(1), join(k(1), kc(2))),       // K1 + (K1 * K2^c)
  };
  std::set<CanonicalForm> expected;
  for (const Graph& g : named) expected.insert(canonical_form(g));
  EXPECT_EQ(expected.size(), 6u);
  EXPECT_EQ(found, expected);
}

TEST(StructuralRegularity, UniqueThreeVertexGraph) {
  int count = 0;
  for (const Graph& g : enumerate_small_graphs(3))
    if (regularity_class(g) == RegClass::Three) {
      ++count;
      EXPECT_TRUE(are_isomorphic(g, path_graph(3)));
    }
  EXPECT_EQ(count, 1);
}

TEST(StructuralRegularity, ClassIsMonotoneOnInducedSubgraphs) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_small_graphs(n)) {
      const auto cg = regularity_class(g);
      for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w)
        if (regularity_class(induced_subgraph(g, VertexSet(w))) == RegClass::AtLeastFour) {
          ASSERT_EQ(cg, RegClass::AtLeastFour) << to_graph6(g) << " W=" << to_string(VertexSet(w));
        }
    }
}

TEST(StructuralRegularity, ExistenceSweep) {
  for (int n = 3; n <= 7; ++n)
    for (int t = 3; t <= n; ++t) {
      const Graph g = join(path_graph(t), kc(n - t));
      EXPECT_TRUE(is_connected(g));
      EXPECT_EQ(structural_regularity(g).value, t) << "t=" << t << " n=" << n;
    }
}

TEST(Threshold, Examples) {
  using S = ThresholdStep;
  EXPECT_EQ(build_threshold({S::isolated, S::dominating}), k(2));
  EXPECT_TRUE(are_isomorphic(build_threshold({S::isolated, S::isolated, S::dominating}), path_graph(3)));
  EXPECT_THROW(build_threshold({}), PreconditionError);
}

TEST(Threshold, AllWordsHaveRegularityAtMostThree) {
  for (int len = 1; len <= 8; ++len)
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      std::vector<ThresholdStep> word;
      for (int i = 0; i < len; ++i) word.push_back(((code >> i) & 1u) ? ThresholdStep::dominating : ThresholdStep::isolated);
      const Graph g = build_threshold(word);
      const auto cls = regularity_class(g);
      if (g.edge_count() == 0) {
        EXPECT_EQ(cls, RegClass::NoEdges);
      }
      else EXPECT_TRUE(cls == RegClass::Two || cls == RegClass::Three) << to_graph6(g);
    }
}

TEST(CmGorenstein, Examples) {
  const auto a = classify_cm_gorenstein(join(k(1), un(k(2), k(3))));
  EXPECT_TRUE(a.cm_reg3);
  EXPECT_FALSE(a.extremal_gorenstein);
  EXPECT_EQ(a.pattern, "K1*(K3 + K2)");
  const auto b = classify_cm_gorenstein(un(k(2), k(2)));
  EXPECT_TRUE(b.cm_reg3);
  EXPECT_TRUE(b.extremal_gorenstein);
  const auto c = classify_cm_gorenstein(cycle_graph(4));
  EXPECT_FALSE(c.cm_reg3);
  EXPECT_FALSE(c.extremal_gorenstein);
  EXPECT_EQ(c.pattern, "none");
  EXPECT_TRUE(classify_cm_gorenstein(path_graph(3)).extremal_gorenstein);
  EXPECT_FALSE(classify_cm_gorenstein(un(k(2), k(3))).extremal_gorenstein);
  EXPECT_FALSE(classify_cm_gorenstein(k(3)).cm_reg3);
  EXPECT_THROW(classify_cm_gorenstein(un(k(2), kc(1))), PreconditionError);
}

TEST(CmGorenstein, PatternsImplyClassThree) {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_small_graphs(n)) {
      if (!isolated_vertices(g).empty()) continue;
      const auto r = classify_cm_gorenstein(g);
      if (r.cm_reg3) {
        EXPECT_EQ(regularity_class(g), RegClass::Three) << to_graph6(g);
      }
      if (r.extremal_gorenstein) {
        EXPECT_TRUE(r.cm_reg3);
      }
    }
}

TEST(Counterexample, Examples) {
  const auto a = build_counterexample({3, 3});
  EXPECT_EQ(a.predicted_reg, 5);
  EXPECT_EQ(a.ell_plus_1, 3);
  EXPECT_EQ(a.graph.order(), 7);
  const auto b = build_counterexample({3, 4});
  EXPECT_EQ(b.predicted_reg, 6);
  EXPECT_EQ(b.ell_plus_1, 4);
  const auto c = build_counterexample({9, 9, 9});
  EXPECT_EQ(c.predicted_reg, 25);
  EXPECT_EQ(c.ell_plus_1, 9);
  EXPECT_EQ(structural_regularity(c.graph).value, 25);
  EXPECT_GT(static_cast<double>(c.predicted_reg) / c.ell_plus_1, 2.7);
  EXPECT_THROW(build_counterexample({3}), PreconditionError);
  EXPECT_THROW(build_counterexample({3, 2}), PreconditionError);
}

TEST(Counterexample, ConnectedWeaklyClosedAndStructural) {
  for (const auto& t : std::vector<std::vector<int>>{{3, 3}, {3, 4}, {4, 4}, {3, 3, 3}, {3, 6}}) {
    const auto ce = build_counterexample(t);
    EXPECT_TRUE(is_connected(ce.graph));
    EXPECT_TRUE(is_weakly_closed(ce.graph).weakly_closed);
    EXPECT_EQ(longest_induced_path_length(ce.graph) + 1, ce.ell_plus_1);
    EXPECT_EQ(structural_regularity(ce.graph).value, ce.predicted_reg);
    EXPECT_GT(ce.predicted_reg, ce.ell_plus_1);
  }
}
