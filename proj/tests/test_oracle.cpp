#include <gtest/gtest.h>

#include "bei/oracle.hpp"

using namespace bei;

namespace {

using Status = RegularityResult::Status;
using Method = RegularityResult::Method;

Graph two_k2() { return Graph(4, {{1, 2}, {3, 4}}); }

std::vector<Graph> all_graphs(int max_n, bool connected = false) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : enumerate_small_graphs(n, connected)) out.push_back(g);
  return out;
}

}  // namespace

TEST(RegularityInitial, Examples) {
  EXPECT_EQ(regularity_initial(path_graph(3)), 3);
  EXPECT_EQ(regularity_initial(path_graph(4)), 4);
  for (int n = 2; n <= 6; ++n)
    for (OrderKind k : {OrderKind::lex, OrderKind::degrevlex}) EXPECT_EQ(regularity_initial(complete_graph(n), k), 2);
  EXPECT_EQ(regularity_initial(complete_graph(4), TermOrder::for_graph(OrderKind::lex, 4, Precedence::interleaved)), 2);
  EXPECT_EQ(regularity_initial(empty_graph(3)), kRegNoEdges);
  EXPECT_EQ(regularity_initial(two_k2()), 3);
  EXPECT_THROW(regularity_initial(path_graph(9)), CapExceeded);
  EXPECT_THROW(regularity_initial(path_graph(3), OrderKind::lex, 4), PreconditionError);
}

TEST(RegularityCertified, Examples) {
  const auto a = regularity_certified(two_k2());
  EXPECT_EQ(a.value, 3);
  EXPECT_EQ(a.status, Status::Exact);
  EXPECT_EQ(a.method, Method::Both);
  EXPECT_TRUE(a.consistent);

  const auto cx = build_counterexample({3, 3});
  const auto b = regularity_certified(cx.graph);
  EXPECT_EQ(b.value, 5);
  EXPECT_EQ(b.status, Status::Exact);
  ASSERT_EQ(b.initial.size(), 1u);
  EXPECT_EQ(b.initial[0].second, 5);
  EXPECT_TRUE(b.consistent);

  const auto c = regularity_certified(path_graph(4));
  EXPECT_EQ(c.value, 4);
  EXPECT_EQ(c.structural, 4);
  EXPECT_EQ(c.initial[0].second, 4);

  // no structural answer: C5 has reg ini >= 4
  const auto d = regularity_certified(cycle_graph(5), {OrderKind::lex, {2, 32003}});
  EXPECT_FALSE(d.structural);
  EXPECT_EQ(d.method, Method::InitialIdeal);
  EXPECT_EQ(d.status, d.value <= 3 ? Status::Exact : Status::UpperBoundOnly);
  EXPECT_EQ(d.initial.size(), 2u);

  // past the cap only structural answers are possible
  CertifyOptions small;
  small.max_vertices = 4;
  EXPECT_EQ(regularity_certified(path_graph(6), small).method, Method::Structural);
  EXPECT_THROW(regularity_certified(cycle_graph(6), small), CapExceeded);
  EXPECT_EQ(regularity_certified(empty_graph(3)).value, kRegNoEdges);
}

TEST(RegularityCertified, ExactValuesOfTwoAndThreeAgreeWithClasses) {
  for (const Graph& g : all_graphs(6)) {
    const auto r = regularity_certified(g);
    EXPECT_TRUE(r.consistent) << to_graph6(g);
    switch (regularity_class(g)) {
      case RegClass::NoEdges: EXPECT_EQ(r.value, kRegNoEdges); break;
      case RegClass::Two: EXPECT_EQ(r.value, 2) << to_graph6(g); break;
      case RegClass::Three: EXPECT_EQ(r.value, 3) << to_graph6(g); break;
      case RegClass::AtLeastFour: EXPECT_GE(r.value, 4) << to_graph6(g); break;
    }
    if (r.value <= 3) {
      EXPECT_EQ(r.status, Status::Exact);
    }
  }
}

TEST(Invariants, StructuralValueBoundsInitialValue) {
  for (const Graph& g : all_graphs(6)) {
    const auto s = structural_regularity(g);
    if (!s.value || *s.value == kRegNoEdges) continue;
    EXPECT_LE(*s.value, regularity_initial(g)) << to_graph6(g);
  }
}

TEST(Invariants, JoinFactorsHaveSmallerInitialRegularity) {
  for (const Graph& g : all_graphs(6)) {
    const auto parts = components(g, true);
    if (parts.size() < 2) continue;
    const int whole = regularity_initial(g);
    for (VertexSet p : parts) {
      const Graph h = induced_subgraph(g, p);
      EXPECT_LE(regularity_initial(h), whole) << to_graph6(g) << " factor " << to_string(p);
      const Graph rest = induced_subgraph(g, g.vertices() - p);
      EXPECT_LE(regularity_initial(rest), whole) << to_graph6(g);
    }
  }
}

TEST(Invariants, DisjointUnionAdditivity) {
  const auto gs = all_graphs(4);
  for (const Graph& a : gs) {
    if (a.edge_count() == 0) continue;
    for (const Graph& b : gs) {
      if (b.edge_count() == 0 || a.order() + b.order() > 6) continue;
      const int ra = regularity_certified(a).value, rb = regularity_certified(b).value;
      const auto u = regularity_certified(disjoint_union(a, b));
      EXPECT_EQ(u.value, ra + rb - 1) << to_graph6(a) << " + " << to_graph6(b);
      EXPECT_EQ(regularity_initial(disjoint_union(a, b)), regularity_initial(a) + regularity_initial(b) - 1);
    }
  }
}

TEST(Invariants, CharacteristicStabilityForSmallRegularity) {
  for (const Graph& g : all_graphs(6)) {
    if (g.edge_count() == 0) continue;
    const int r2 = regularity_initial(g, OrderKind::lex, 2);
    if (r2 > 3) continue;
    EXPECT_EQ(r2, regularity_initial(g, OrderKind::lex, 32003)) << to_graph6(g);
  }
}

TEST(PrimaryDecomposition, Examples) {
  EXPECT_TRUE(verify_primary_decomposition(path_graph(3), 5).passed());
  EXPECT_TRUE(verify_primary_decomposition(cycle_graph(4), 6).passed());
  const auto k3 = verify_primary_decomposition(complete_graph(3), 4);
  EXPECT_TRUE(k3.passed());
  EXPECT_EQ(k3.instances, 4u);
  EXPECT_THROW(verify_primary_decomposition(path_graph(7)), CapExceeded);
}

TEST(PrimaryDecomposition, AllGraphsUpToFour) {
  for (const Graph& g : all_graphs(4)) {
    const auto r = verify_primary_decomposition(g);
    EXPECT_TRUE(r.passed()) << to_graph6(g) << (r.failures.empty() ? "" : r.failures[0]);
  }
}

TEST(JoinRegularity, Examples) {
  const auto c4 = join_regularity_sides(empty_graph(2), empty_graph(2));
  EXPECT_EQ(c4.joined, 3);
  EXPECT_EQ(c4.expected, 3);
  const auto kk = join_regularity_sides(complete_graph(2), complete_graph(3));
  EXPECT_EQ(kk.joined, 2);
  EXPECT_EQ(kk.expected, 2);
  const auto p4 = join_regularity_sides(path_graph(4), Graph(1));
  EXPECT_EQ(p4.joined, 4);
  EXPECT_EQ(p4.expected, 4);
  EXPECT_TRUE(verify_join_regularity(path_graph(4), Graph(1), OrderKind::degrevlex, 32003).passed());
  EXPECT_THROW(verify_join_regularity(path_graph(5), path_graph(4)), CapExceeded);
}

TEST(InitialAdditivity, Examples) {
  const int n = 2;
  const auto o = TermOrder::for_graph(OrderKind::lex, n);
  const IdealDescription f{edge_binomials(complete_graph(2), o)};
  const IdealDescription vars{vertex_variables({1}, n)};
  EXPECT_TRUE(verify_initial_additivity(f, f, 2 * n, o, 4).passed());
  EXPECT_TRUE(verify_initial_additivity(f, vars, 2 * n, o, 4).passed());

  // I = (z1 - z2), J = (z1 - z3): both initial ideals are (z1), but
  // z2 - z3 lies in I + J
  const TermOrder o3(OrderKind::lex, 3);
  const IdealDescription i{{Binomial::difference(Monomial::variable(0), Monomial::variable(1), o3)}};
  const IdealDescription j{{Binomial::difference(Monomial::variable(0), Monomial::variable(2), o3)}};
  const auto res = initial_additivity(i, j, 3, o3, 2);
  EXPECT_FALSE(res.sum_equal);
  EXPECT_FALSE(res.meet_equal);
  EXPECT_FALSE(verify_initial_additivity(i, j, 3, o3, 2).passed());
}

TEST(InitialAdditivity, JoinProofIdeals) {
  const auto k1k1 = empty_graph(2);
  for (OrderKind k : {OrderKind::lex, OrderKind::degrevlex}) {
    const auto r = verify_join_proof(k1k1, k1k1, k, 4);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures[0]);
  }
  const auto o = TermOrder::for_graph(OrderKind::lex, 4);
  const auto ideals = join_proof_ideals(k1k1, k1k1, o);
  EXPECT_TRUE(verify_initial_additivity(ideals.q, ideals.q_prime, 8, o, 4).passed());
  EXPECT_TRUE(verify_join_proof(Graph(3, {{1, 2}}), k1k1, OrderKind::lex, 4).passed());
  EXPECT_TRUE(verify_join_proof(two_k2(), k1k1, OrderKind::lex, 3).passed());
}

TEST(Conjectures, SkCliquesOnConnectedUpToFive) {
  const auto r = verify_conjectures(all_graphs(5, true), Conjecture::sk_cliques, {2, 4});
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances, 20u);
}

TEST(Conjectures, EhhOnStructuralGraphsUpToFive) {
  const auto r = verify_conjectures(all_graphs(5), Conjecture::ehh_equality);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances, 30u);
}

TEST(Conjectures, WeaklyClosedCounterexample) {
  const auto cx = build_counterexample({3, 3});
  const auto r = verify_conjectures({cx.graph}, Conjecture::weakly_closed_ell);
  EXPECT_EQ(r.instances, 1u);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_NE(r.failures[0].find("reg J = 5"), std::string::npos);
  EXPECT_NE(r.failures[0].find("l(G) + 1 = 3"), std::string::npos);
  // paths satisfy it
  EXPECT_TRUE(verify_conjectures({path_graph(5), complete_graph(3)}, Conjecture::weakly_closed_ell).passed());
}

TEST(Conjectures, ParallelSweepIsDeterministic) {
  const auto gs = all_graphs(5);
  const auto a = verify_conjectures(gs, Conjecture::sk_cliques, {2, 1});
  const auto b = verify_conjectures(gs, Conjecture::sk_cliques, {2, 4});
  EXPECT_EQ(a.instances, b.instances);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.notes, b.notes);
  EXPECT_EQ(parse_conjecture("sk_cliques"), Conjecture::sk_cliques);
  EXPECT_THROW(parse_conjecture("nope"), PreconditionError);
}
