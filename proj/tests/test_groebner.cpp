#include <gtest/gtest.h>

#include <set>
#include <string>

#include "bei/groebner.hpp"
#include "support/helpers.hpp"

using namespace bei;
using bei::testing::leads_of;
using bei::testing::mono;

namespace {

TermOrder lex(int n) { return TermOrder::for_graph(OrderKind::lex, n); }
TermOrder drl(int n) { return TermOrder::for_graph(OrderKind::degrevlex, n); }

GroebnerBasis gb(const Graph& g, const TermOrder& o) { return buchberger(edge_binomials(g, o), o); }

}  // namespace

TEST(TermOrderTest, LexAndDegrevlexOnEdgeBinomial) {
  // f_12 = x1 y2 - x2 y1
  const Monomial a = mono("x1*y2", 2), b = mono("x2*y1", 2);
  EXPECT_GT(lex(2).compare(a, b), 0);
  EXPECT_LT(drl(2).compare(a, b), 0);
  EXPECT_GT(drl(2).compare(mono("x1*x1", 2), mono("x1*y1", 2)), 0);
  EXPECT_GT(drl(2).compare(mono("x1*x2*y1", 2), mono("x1", 2)), 0);
  const TermOrder inter(OrderKind::lex, 4, Precedence::interleaved);
  EXPECT_GT(inter.compare(mono("y1", 2), mono("x2", 2)), 0);
}

TEST(EdgeBinomials, Examples) {
  const auto k2 = edge_binomials(complete_graph(2));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(to_string(k2[0], 2), "x1*y2 - x2*y1");
  EXPECT_TRUE(edge_binomials(empty_graph(3)).empty());
  const auto p3 = edge_binomials(path_graph(3));
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(to_string(p3[0], 3), "x1*y2 - x2*y1");
  EXPECT_EQ(to_string(p3[1], 3), "x2*y3 - x3*y2");
}

TEST(BinomialTest, RejectsNonPureDifference) {
  const TermOrder o = lex(2);
  EXPECT_THROW(Binomial::from_terms({{2, mono("x1", 2)}}, o), PreconditionError);
  EXPECT_THROW(Binomial::from_terms({{1, mono("x1", 2)}, {1, mono("x2", 2)}}, o), PreconditionError);
  EXPECT_THROW(Binomial::from_terms({{1, mono("x1", 2)}, {-1, mono("x1", 2)}}, o), PreconditionError);
  EXPECT_THROW(Binomial::from_terms({{1, mono("x1", 2)}, {-1, mono("x2", 2)}, {1, mono("y1", 2)}}, o),
               PreconditionError);
  EXPECT_NO_THROW(Binomial::from_terms({{-1, mono("x1", 2)}, {1, mono("x2", 2)}}, o));
}

TEST(Buchberger, SmallGraphsMatchReferenceLeads) {
  EXPECT_EQ(gb(path_graph(3), lex(3)).size(), 2u);
  EXPECT_EQ(gb(complete_graph(3), lex(3)).size(), 3u);
  const auto star = gb(star_graph(3), lex(4));
  EXPECT_GT(star.size(), 3u);
  EXPECT_EQ(star.elements().back().degree(), 3);
  // reference leads from an independent computer-algebra run
  EXPECT_EQ(leads_of(star, 4),
            (std::set<std::string>{"x1*y2", "x1*y3", "x1*y4", "x2*y1*y3", "x2*y1*y4", "x3*y1*y4"}));
  EXPECT_EQ(leads_of(gb(path_graph(4), lex(4)), 4), (std::set<std::string>{"x1*y2", "x2*y3", "x3*y4"}));
  EXPECT_EQ(leads_of(gb(cycle_graph(4), lex(4)), 4),
            (std::set<std::string>{"x1*y2", "x1*y4", "x2*y3", "x3*y4", "x1*x4*y3", "x2*y1*y4"}));
  EXPECT_EQ(leads_of(gb(path_graph(3), drl(3)), 3), (std::set<std::string>{"x2*y1", "x3*y2"}));
  EXPECT_EQ(leads_of(gb(cycle_graph(4), drl(4)), 4),
            (std::set<std::string>{"x2*y1", "x3*y2", "x4*y1", "x4*y3", "x1*x4*y2", "x3*y1*y4"}));
  const Graph bowtie = join(Graph(1), disjoint_union(complete_graph(2), complete_graph(2)));
  EXPECT_EQ(leads_of(gb(bowtie, lex(5)), 5),
            (std::set<std::string>{"x1*y2", "x1*y3", "x1*y4", "x1*y5", "x2*y3", "x4*y5", "x2*y1*y4", "x2*y1*y5",
                                   "x3*y1*y4", "x3*y1*y5"}));
}

TEST(Buchberger, CriterionHoldsAndOutputIsReduced) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_small_graphs(n)) {
      for (const TermOrder& o : {lex(n), drl(n)}) {
        const auto basis = gb(g, o);
        ASSERT_TRUE(satisfies_buchberger_criterion(basis)) << to_graph6(g);
        const auto& el = basis.elements();
        for (std::size_t i = 0; i < el.size(); ++i) {
          ASSERT_TRUE(!el[i].trail() || o.compare(el[i].lead(), *el[i].trail()) > 0);
          for (std::size_t j = 0; j < el.size(); ++j) {
            if (i == j) continue;
            EXPECT_FALSE(el[j].lead().divides(el[i].lead()));
            if (el[i].trail()) {
              EXPECT_FALSE(el[j].lead().divides(*el[i].trail()));
            }
          }
        }
        for (const Binomial& f : edge_binomials(g, o)) EXPECT_TRUE(ideal_contains(basis, f));
      }
    }
}

TEST(Buchberger, AcceptsMonomialGenerators) {
  const int n = 3;
  const TermOrder o = lex(n);
  auto gens = edge_binomials(complete_graph(3), o);
  const auto vars = vertex_variables({1}, n);
  gens.insert(gens.end(), vars.begin(), vars.end());
  const auto basis = buchberger(gens, o);
  EXPECT_TRUE(satisfies_buchberger_criterion(basis));
  EXPECT_EQ(leads_of(basis, n), (std::set<std::string>{"x1", "y1", "x2*y3"}));
}

TEST(NormalForm, Examples) {
  const TermOrder o = lex(3);
  const auto p3 = gb(path_graph(3), o);
  const auto k3 = gb(complete_graph(3), o);
  const auto f13 = clique_binomials({1, 3}, 3, o)[0];
  for (const Binomial& f : p3.elements()) EXPECT_FALSE(normal_form(f, p3).has_value());
  const auto r = normal_form(f13, p3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, f13);
  EXPECT_FALSE(normal_form(f13, k3).has_value());
  // x2 * f13 lies in J_{P3}
  const Binomial x2f13 = Binomial::difference(mono("x1*x2*y3", 3), mono("x2*x3*y1", 3), o);
  EXPECT_FALSE(normal_form(x2f13, p3).has_value());
}

TEST(InitialIdeal, Examples) {
  const auto p3 = initial_ideal(gb(path_graph(3), lex(3)));
  EXPECT_EQ(to_string(p3, 3), "(x1*y2, x2*y3)");
  EXPECT_TRUE(p3.is_squarefree());
  EXPECT_EQ(initial_ideal(gb(complete_graph(2), lex(2))).gens(), std::vector<Monomial>{mono("x1*y2", 2)});
}

TEST(InitialIdeal, VariablesAddToTheInitialIdeal) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_small_graphs(n)) {
      const TermOrder o = lex(n);
      const auto gens = edge_binomials(g, o);
      const auto base = initial_ideal(buchberger(gens, o));
      for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
        auto with_vars = gens;
        const auto vars = vertex_variables(VertexSet(t), n);
        with_vars.insert(with_vars.end(), vars.begin(), vars.end());
        std::vector<Monomial> var_monos;
        for (const auto& v : vars) var_monos.push_back(v.lead());
        const auto lhs = initial_ideal(buchberger(with_vars, o));
        const auto rhs = base + MonomialIdeal(2 * n, var_monos);
        ASSERT_EQ(lhs, rhs) << to_graph6(g) << " T=" << to_string(VertexSet(t));
      }
    }
}

TEST(InitialIdeal, CompleteGraphsGeneratedInDegreeTwo) {
  for (int n = 2; n <= 6; ++n)
    for (const TermOrder& o : {lex(n), drl(n)}) {
      const auto ini = initial_ideal(gb(complete_graph(n), o));
      EXPECT_EQ(ini.max_generator_degree(), 2);
      EXPECT_EQ(ini.gens().size(), static_cast<std::size_t>(n * (n - 1) / 2));
    }
}

TEST(GradedPiece, Examples) {
  const TermOrder o = lex(2);
  EXPECT_EQ(GradedSlice::of(edge_binomials(complete_graph(2), o), 4, 2).dimension(), 1u);
  EXPECT_EQ(GradedSlice::of(edge_binomials(path_graph(3)), 6, 2).dimension(), 2u);
  EXPECT_EQ(GradedSlice::of(vertex_variables({1}, 2), 4, 1).dimension(), 2u);
  EXPECT_THROW(SliceSpace(32, 12, 1000), CapExceeded);
}

TEST(GradedPiece, HilbertFunctionIsOrderIndependent) {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : enumerate_small_graphs(n)) {
      const auto gens = edge_binomials(g, lex(n));
      const auto ini_lex = initial_ideal(buchberger(gens, lex(n)));
      const auto ini_drl = initial_ideal(gb(g, drl(n)));
      for (int d = 0; d <= n + 2 && d <= 5; ++d) {
        const auto dim = GradedSlice::of(gens, 2 * n, d).dimension();
        EXPECT_EQ(dim, ini_lex.count_in_degree(d)) << to_graph6(g) << " d=" << d;
        EXPECT_EQ(dim, ini_drl.count_in_degree(d)) << to_graph6(g) << " d=" << d;
      }
    }
}

TEST(GradedPiece, SumAndIntersectionOnHandExamples) {
  // (x1) and (y1) in 2 variables, degree 2: (x1)_2 = {x1^2, x1y1}, (y1)_2 = {x1y1, y1^2}
  auto space = std::make_shared<const SliceSpace>(2, 2);
  const std::vector<Binomial> a{Binomial::monomial(mono("z1", 0))};
  const std::vector<Binomial> b{Binomial::monomial(mono("z2", 0))};
  const auto sa = GradedSlice::of(a, space);
  const auto sb = GradedSlice::of(b, space);
  EXPECT_EQ((sa + sb).dimension(), 3u);
  const std::vector<GradedSlice> both{sa, sb};
  EXPECT_EQ(intersection_dimension(both), 1u);
  // modular law: dim(A+B) + dim(A∩B) = dim A + dim B on binomial ideals
  for (int n = 3; n <= 4; ++n) {
    const auto gs = enumerate_small_graphs(n);
    for (std::size_t i = 0; i < gs.size(); i += 2)
      for (std::size_t j = 1; j < gs.size(); j += 3) {
        const TermOrder o = lex(n);
        const auto s = std::make_shared<const SliceSpace>(2 * n, 3);
        const auto x = GradedSlice::of(edge_binomials(gs[i], o), s);
        auto yg = edge_binomials(gs[j], o);
        const auto v = vertex_variables({1}, n);
        yg.insert(yg.end(), v.begin(), v.end());
        const auto y = GradedSlice::of(yg, s);
        const std::vector<GradedSlice> xy{x, y};
        EXPECT_EQ((x + y).dimension() + intersection_dimension(xy), x.dimension() + y.dimension());
        EXPECT_EQ(intersection_dimension(xy, 2), intersection_dimension(xy, 32003));
      }
  }
}

TEST(GradedPiece, MembershipMatchesNormalForm) {
  const int n = 4;
  const TermOrder o = lex(n);
  const Graph g = cycle_graph(4);
  const auto basis = gb(g, o);
  const auto slice = GradedSlice::of(edge_binomials(g, o), 2 * n, 3);
  for (const Monomial& m : monomials_of_degree(2 * n, 1))
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j) {
        const Binomial f = clique_binomials({i, j}, n, o)[0];
        const Binomial mf = Binomial::difference(m * f.lead(), m * *f.trail(), o);
        EXPECT_EQ(slice.contains(mf), ideal_contains(basis, mf));
      }
}

TEST(GradedSliceTest, LeadMonomialsMatchInitialIdeal) {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : enumerate_small_graphs(n))
      for (const TermOrder& o : {lex(n), drl(n)}) {
        const auto ini = initial_ideal(gb(g, o));
        for (int d = 1; d <= 3; ++d) {
          const auto slice = GradedSlice::of(edge_binomials(g, o), 2 * n, d);
          const auto leads = intersection_initial_monomials(std::span(&slice, 1), o);
          EXPECT_EQ(leads.size(), slice.dimension());
          EXPECT_EQ(leads.size(), ini.count_in_degree(d)) << to_graph6(g);
          for (const auto& m : leads) EXPECT_TRUE(ini.contains(m)) << to_graph6(g);
        }
      }
}

TEST(GradedSliceTest, LeadMonomialsOfAnIntersection) {
  // (x1) n (y1) = (x1 y1) in two variables: degree 2 leads {x1 y1}
  auto space = std::make_shared<const SliceSpace>(2, 2);
  const std::vector<Binomial> a{Binomial::monomial(Monomial::variable(0))};
  const std::vector<Binomial> b{Binomial::monomial(Monomial::variable(1))};
  const std::vector<GradedSlice> both{GradedSlice::of(a, space), GradedSlice::of(b, space)};
  const TermOrder o(OrderKind::lex, 2);
  const auto leads = intersection_initial_monomials(both, o);
  ASSERT_EQ(leads.size(), 1u);
  EXPECT_EQ(leads[0], Monomial::variable(0) * Monomial::variable(1));
  // J_{K2} n (x1, y1): the binomial itself is the only degree-2 element
  const auto k2 = edge_binomials(complete_graph(2), lex(2));
  const auto space4 = std::make_shared<const SliceSpace>(4, 2);
  const std::vector<GradedSlice> s{GradedSlice::of(k2, space4), GradedSlice::of(vertex_variables({1}, 2), space4)};
  EXPECT_EQ(intersection_initial_monomials(s, lex(2)), (std::vector<Monomial>{k2[0].lead()}));
}
