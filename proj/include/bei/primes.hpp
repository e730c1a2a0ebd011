#pragma once

// Minimal primes of binomial edge ideals: sets with the cut point property,
// the primes P_T(G), containment between them, and the cut sets of a join.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bei/error.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"

namespace bei {

inline constexpr int kCutSetDefaultMaxVertices = 12;

// T together with the components of G - T.
struct CutSet {
  VertexSet t;
  std::vector<VertexSet> parts;
  friend bool operator==(const CutSet&, const CutSet&) = default;
};

// Generators of P_T(G): x_i, y_i for i in T, and J of the complete graph on
// each part (parts of size one contribute nothing).
struct PrimeDescription {
  VertexSet variables;
  std::vector<VertexSet> cliques;
  friend bool operator==(const PrimeDescription&, const PrimeDescription&) = default;
};

inline std::vector<VertexSet> sorted_components_within(const Graph& g, VertexSet w) {
  auto parts = components_within(g, w);
  std::sort(parts.begin(), parts.end(), size_lex_less);
  return parts;
}

inline CutSet cut_set_of(const Graph& g, VertexSet t) {
  if (!t.subset_of(g.vertices())) throw PreconditionError("cut set outside the vertex set");
  return {t, sorted_components_within(g, g.vertices() - t)};
}

// Every i in T is a cut point of G restricted to ([n] - T) + i.
inline bool has_cut_point_property(const Graph& g, VertexSet t) {
  const VertexSet rest = g.vertices() - t;
  const int base = component_count_within(g, rest);
  bool ok = true;
  t.for_each([&](Vertex i) {
    if (ok && component_count_within(g, rest | VertexSet{i}) >= base) ok = false;
  });
  return ok;
}

// C(G), ordered by size then lexicographically; the empty set first.
inline std::vector<CutSet> cut_point_sets(const Graph& g, int cap = kCutSetDefaultMaxVertices) {
  const int n = g.order();
  if (n > cap) throw CapExceeded("cut_point_sets: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<VertexSet> ts;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (m == 0 || has_cut_point_property(g, VertexSet(m))) ts.push_back(VertexSet(m));
  std::sort(ts.begin(), ts.end(), size_lex_less);
  std::vector<CutSet> out;
  for (VertexSet t : ts) out.push_back(cut_set_of(g, t));
  return out;
}

inline PrimeDescription prime_of_cutset(const Graph& g, const CutSet& c) {
  const CutSet expected = cut_set_of(g, c.t);
  auto given = c.parts;
  std::sort(given.begin(), given.end(), size_lex_less);
  if (given != expected.parts) throw PreconditionError("prime_of_cutset: partition does not match G - T");
  return {c.t, expected.parts};
}

inline PrimeDescription prime_of(const Graph& g, VertexSet t) { return prime_of_cutset(g, cut_set_of(g, t)); }

// Generators of P_T(G) in the ring of an n-vertex graph.
inline std::vector<Binomial> prime_generators(const PrimeDescription& p, int n, const TermOrder& order) {
  auto gens = vertex_variables(p.variables, n);
  for (VertexSet c : p.cliques) {
    const auto cb = clique_binomials(c, n, order);
    gens.insert(gens.end(), cb.begin(), cb.end());
  }
  return gens;
}

// P_{T1} is contained in P_{T2}.
inline bool prime_containment(const Graph& g, const CutSet& t1, const CutSet& t2) {
  (void)g;
  if (!t1.t.subset_of(t2.t)) return false;
  for (VertexSet part : t1.parts) {
    const VertexSet free = part - t2.t;
    // all of `free` must sit inside one part of T2
    bool inside = free.size() <= 1;
    for (VertexSet q : t2.parts)
      if (free.subset_of(q)) inside = true;
    if (!inside) return false;
  }
  return true;
}

// Membership route for the same question: every generator of P_{T1}
// reduces to zero modulo a Groebner basis of P_{T2}.
inline bool prime_containment_algebraic(const Graph& g, const CutSet& t1, const CutSet& t2) {
  const int n = g.order();
  const auto order = TermOrder::for_graph(OrderKind::lex, n);
  const auto basis = buchberger(prime_generators(prime_of_cutset(g, t2), n, order), order);
  for (const Binomial& f : prime_generators(prime_of_cutset(g, t1), n, order))
    if (!ideal_contains(basis, f)) return false;
  return true;
}

struct JoinCutsetReport {
  bool equal = true;
  std::vector<VertexSet> direct;       // C(G1 * G2) enumerated
  std::vector<VertexSet> formula;      // from the components of G1 and G2
  std::vector<VertexSet> only_direct;
  std::vector<VertexSet> only_formula;
};

namespace detail {

// C of each component of g (labels of g), combined by taking all unions.
inline std::set<std::uint64_t> componentwise_cut_sets(const Graph& g, int shift, int cap) {
  std::set<std::uint64_t> acc{0};
  for (VertexSet comp : components(g)) {
    const auto vs = comp.to_vector();
    std::set<std::uint64_t> next;
    for (const CutSet& c : cut_point_sets(induced_subgraph(g, comp), cap)) {
      std::uint64_t mapped = 0;
      c.t.for_each([&](Vertex v) { mapped |= std::uint64_t{1} << (vs[v - 1] - 1 + shift); });
      for (auto a : acc) next.insert(a | mapped);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

// C(G1 * G2) against
//   {0} + (o_i C(G1i)) o {V2} + (o_i C(G2i)) o {V1}
// for disconnected G1, G2.
inline JoinCutsetReport verify_join_cutsets(const Graph& g1, const Graph& g2, int cap = kCutSetDefaultMaxVertices) {
  if (component_count_within(g1, g1.vertices()) < 2 || component_count_within(g2, g2.vertices()) < 2)
    throw PreconditionError("verify_join_cutsets: both graphs must be disconnected");
  const int n1 = g1.order(), n2 = g2.order();
  if (n1 + n2 > cap) throw CapExceeded("verify_join_cutsets: combined order exceeds cap");
  const Graph g = join(g1, g2);
  const std::uint64_t v1 = VertexSet::range(n1).bits();
  const std::uint64_t v2 = VertexSet::range(n1 + n2).bits() & ~v1;

  std::set<std::uint64_t> formula{0};
  for (auto a : detail::componentwise_cut_sets(g1, 0, cap)) formula.insert(a | v2);
  for (auto b : detail::componentwise_cut_sets(g2, n1, cap)) formula.insert(b | v1);

  JoinCutsetReport r;
  std::set<std::uint64_t> direct;
  for (const CutSet& c : cut_point_sets(g, cap)) direct.insert(c.t.bits());
  for (auto m : direct) r.direct.push_back(VertexSet(m));
  for (auto m : formula) r.formula.push_back(VertexSet(m));
  for (auto m : direct)
    if (!formula.count(m)) r.only_direct.push_back(VertexSet(m));
  for (auto m : formula)
    if (!direct.count(m)) r.only_formula.push_back(VertexSet(m));
  for (auto* v : {&r.direct, &r.formula, &r.only_direct, &r.only_formula}) std::sort(v->begin(), v->end(), size_lex_less);
  r.equal = r.only_direct.empty() && r.only_formula.empty();
  return r;
}

}  // namespace bei
