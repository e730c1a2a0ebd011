#pragma once

// Groebner bases of pure-difference binomial ideals (ideals generated by
// differences of two monomials and by monomials) in the ring
// K[x1..xn, y1..yn] of a graph.
//
// S-polynomials and reductions of pure-difference binomials are again
// pure-difference binomials or monomials, and the normal form of a binomial
// u - v is NF(u) - NF(v) where each term reduces to a single monomial (or to
// zero). No field arithmetic happens here, so the results hold in every
// characteristic.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bei/error.hpp"
#include "bei/graph.hpp"
#include "bei/monomial.hpp"

namespace bei {

// lead - trail with lead > trail, or a bare monomial when trail is empty.
class Binomial {
 public:
  static Binomial monomial(const Monomial& m) { return Binomial(m, std::nullopt); }

  // a - b, oriented so that the larger term leads. Throws on a == b.
  static Binomial difference(const Monomial& a, const Monomial& b, const TermOrder& order) {
    const int c = order.compare(a, b);
    if (c == 0) throw PreconditionError("binomial with equal terms is zero");
    return c > 0 ? Binomial(a, b) : Binomial(b, a);
  }

  // Generic two-term input: accepts c*m (c = +-1) or m1 - m2 up to sign.
  static Binomial from_terms(const std::vector<std::pair<long, Monomial>>& terms, const TermOrder& order) {
    if (terms.size() == 1 && (terms[0].first == 1 || terms[0].first == -1)) return monomial(terms[0].second);
    if (terms.size() == 2 && terms[0].first + terms[1].first == 0 &&
        (terms[0].first == 1 || terms[0].first == -1) && !(terms[0].second == terms[1].second))
      return difference(terms[0].second, terms[1].second, order);
    throw PreconditionError("not a pure-difference binomial");
  }

  const Monomial& lead() const { return lead_; }
  const std::optional<Monomial>& trail() const { return trail_; }
  bool is_monomial() const { return !trail_.has_value(); }
  int degree() const { return lead_.degree(); }

  // Re-orient for another term order.
  Binomial oriented(const TermOrder& order) const {
    return trail_ ? difference(lead_, *trail_, order) : *this;
  }

  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  Binomial(const Monomial& lead, std::optional<Monomial> trail) : lead_(lead), trail_(std::move(trail)) {}

  Monomial lead_;
  std::optional<Monomial> trail_;
};

inline std::string to_string(const Binomial& b, int vertices = 0) {
  std::string s = to_string(b.lead(), vertices);
  if (b.trail()) s += " - " + to_string(*b.trail(), vertices);
  return s;
}

// f_ij = x_i y_j - x_j y_i for every edge {i, j}, i < j.
inline std::vector<Binomial> edge_binomials(const Graph& g, const TermOrder& order) {
  const int n = g.order();
  if (2 * n > kMaxVariables) throw CapExceeded("edge_binomials: at most 16 vertices");
  std::vector<Binomial> out;
  for (const Edge& e : g.edges()) {
    const Monomial a = Monomial::variable(x_var(e.u, n)) * Monomial::variable(y_var(e.v, n));
    const Monomial b = Monomial::variable(x_var(e.v, n)) * Monomial::variable(y_var(e.u, n));
    out.push_back(Binomial::difference(a, b, order));
  }
  return out;
}

inline std::vector<Binomial> edge_binomials(const Graph& g) {
  return edge_binomials(g, TermOrder::for_graph(OrderKind::lex, g.order()));
}

// x_i, y_i for every i in T.
inline std::vector<Binomial> vertex_variables(VertexSet t, int n) {
  std::vector<Binomial> out;
  t.for_each([&](Vertex v) {
    out.push_back(Binomial::monomial(Monomial::variable(x_var(v, n))));
    out.push_back(Binomial::monomial(Monomial::variable(y_var(v, n))));
  });
  return out;
}

// All 2-minors f_uv with u < v inside `clique`.
inline std::vector<Binomial> clique_binomials(VertexSet clique, int n, const TermOrder& order) {
  std::vector<Binomial> out;
  const auto vs = clique.to_vector();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const Monomial p = Monomial::variable(x_var(vs[a], n)) * Monomial::variable(y_var(vs[b], n));
      const Monomial q = Monomial::variable(x_var(vs[b], n)) * Monomial::variable(y_var(vs[a], n));
      out.push_back(Binomial::difference(p, q, order));
    }
  return out;
}

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_skipped_product = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t pairs_reduced_to_zero = 0;
  std::size_t elements_added = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(TermOrder order, std::vector<Binomial> elements, GroebnerStats stats = {})
      : order_(order), elements_(std::move(elements)), stats_(stats) {}

  const TermOrder& order() const { return order_; }
  const std::vector<Binomial>& elements() const { return elements_; }
  const GroebnerStats& stats() const { return stats_; }
  std::size_t size() const { return elements_.size(); }

 private:
  TermOrder order_;
  std::vector<Binomial> elements_;
  GroebnerStats stats_;
};

namespace detail {

// Reduces a monomial to normal form; std::nullopt means it reduced to zero.
inline std::optional<Monomial> reduce_monomial(Monomial m, std::span<const Binomial> basis) {
  for (;;) {
    const Binomial* hit = nullptr;
    for (const Binomial& g : basis)
      if (g.lead().divides(m)) {
        hit = &g;
        break;
      }
    if (!hit) return m;
    if (hit->is_monomial()) return std::nullopt;
    m = (m / hit->lead()) * *hit->trail();
  }
}

inline std::optional<Binomial> reduce_terms(const std::optional<Monomial>& u, const std::optional<Monomial>& v,
                                            std::span<const Binomial> basis, const TermOrder& order) {
  const auto a = u ? reduce_monomial(*u, basis) : std::nullopt;
  const auto b = v ? reduce_monomial(*v, basis) : std::nullopt;
  if (!a && !b) return std::nullopt;
  if (!a) return Binomial::monomial(*b);
  if (!b) return Binomial::monomial(*a);
  if (*a == *b) return std::nullopt;
  Binomial r = Binomial::difference(*a, *b, order);
  assert(order.compare(r.lead(), *r.trail()) > 0);
  return r;
}

}  // namespace detail

// Remainder of f modulo a Groebner basis; std::nullopt is the zero remainder
// (f lies in the ideal).
inline std::optional<Binomial> normal_form(const Binomial& f, const GroebnerBasis& basis) {
  return detail::reduce_terms(f.lead(), f.trail(), basis.elements(), basis.order());
}

inline bool ideal_contains(const GroebnerBasis& basis, const Binomial& f) { return !normal_form(f, basis); }

// Buchberger's algorithm with the normal selection strategy, the product
// criterion and the chain criterion. Output is the reduced basis, sorted by
// (degree, lead monomial).
inline GroebnerBasis buchberger(std::span<const Binomial> gens, const TermOrder& order) {
  GroebnerStats stats;
  std::vector<Binomial> basis;

  struct Pair {
    int degree;
    Monomial lcm;
    int i;
    int j;
  };
  const auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<int, int>> pending;

  const auto add_element = [&](const Binomial& h) {
    const int k = static_cast<int>(basis.size());
    basis.push_back(h);
    ++stats.elements_added;
    for (int i = 0; i < k; ++i) {
      const Monomial l = lcm(basis[i].lead(), h.lead());
      queue.insert(Pair{l.degree(), l, i, k});
      pending.insert({i, k});
      ++stats.pairs_created;
    }
  };

  for (const Binomial& g0 : gens) {
    const Binomial g = g0.oriented(order);
    if (auto h = detail::reduce_terms(g.lead(), g.trail(), basis, order)) add_element(*h);
  }

  while (!queue.empty()) {
    const Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    const Binomial& a = basis[p.i];
    const Binomial& b = basis[p.j];
    if (coprime(a.lead(), b.lead())) {
      ++stats.pairs_skipped_product;
      continue;
    }
    bool chain = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].lead().divides(p.lcm)) continue;
      const auto key = [](int x, int y) { return std::pair<int, int>{std::min(x, y), std::max(x, y)}; };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) {
      ++stats.pairs_skipped_chain;
      continue;
    }
    std::optional<Monomial> u, v;
    if (a.trail()) u = (p.lcm / a.lead()) * *a.trail();
    if (b.trail()) v = (p.lcm / b.lead()) * *b.trail();
    if (auto h = detail::reduce_terms(u, v, basis, order)) {
      add_element(*h);
    } else {
      ++stats.pairs_reduced_to_zero;
    }
  }

  // Minimal basis: drop elements whose lead is divisible by another lead.
  std::vector<Binomial> minimal;
  std::vector<Binomial> sorted = basis;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Binomial& x, const Binomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return order.less(x.lead(), y.lead());
  });
  for (const Binomial& g : sorted) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const Binomial& m) { return m.lead().divides(g.lead()); });
    if (!redundant) minimal.push_back(g);
  }

  // Reduce trails against the other elements.
  std::vector<Binomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Binomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Binomial& g = minimal[i];
    if (!g.trail()) {
      reduced.push_back(g);
      continue;
    }
    const auto t = detail::reduce_monomial(*g.trail(), others);
    reduced.push_back(t ? Binomial::difference(g.lead(), *t, order) : Binomial::monomial(g.lead()));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Binomial& x, const Binomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return order.less(x.lead(), y.lead());
  });
  return GroebnerBasis(order, std::move(reduced), stats);
}

inline GroebnerBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& order) {
  return buchberger(std::span<const Binomial>(gens), order);
}

// Every S-polynomial of the basis reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& el = basis.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      const Monomial l = lcm(el[i].lead(), el[j].lead());
      std::optional<Monomial> u, v;
      if (el[i].trail()) u = (l / el[i].lead()) * *el[i].trail();
      if (el[j].trail()) v = (l / el[j].lead()) * *el[j].trail();
      if (detail::reduce_terms(u, v, el, basis.order())) return false;
    }
  return true;
}

inline MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const Binomial& b : basis.elements()) leads.push_back(b.lead());
  return MonomialIdeal(basis.order().num_vars(), std::move(leads));
}

// One element per line, "lead - trail".
inline std::string dump_basis(const GroebnerBasis& basis, int vertices) {
  std::string out;
  for (const Binomial& b : basis.elements()) out += to_string(b, vertices) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Graded pieces.
//
// The degree-d piece of an ideal generated by pure-difference binomials and
// monomials is spanned by the rows m*g (deg m = d - deg g). Row-reducing
// difference rows u - v amounts to merging u and v into one class; a
// monomial row makes its whole class lie in the ideal. The piece is then
// { f : sum of f over every class without a monomial row = 0 }, and its
// dimension is (#monomials) - (#classes without a monomial row), over every
// field.

inline constexpr std::size_t kSliceMaxMonomials = 4'000'000;

struct SliceSpace {
  int num_vars;
  int degree;
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, int, MonomialHash> index;

  SliceSpace(int vars, int d, std::size_t max_monomials = kSliceMaxMonomials) : num_vars(vars), degree(d) {
    if (monomial_count(vars, d) > max_monomials) throw CapExceeded("graded piece: too many monomials");
    monomials = monomials_of_degree(vars, d);
    index.reserve(monomials.size() * 2);
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], static_cast<int>(i));
  }

  int at(const Monomial& m) const { return index.at(m); }
  std::size_t size() const { return monomials.size(); }
};

class GradedSlice {
 public:
  GradedSlice(std::shared_ptr<const SliceSpace> space)
      : space_(std::move(space)), parent_(space_->size()), full_(space_->size(), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  static GradedSlice of(std::span<const Binomial> gens, std::shared_ptr<const SliceSpace> space) {
    GradedSlice s(std::move(space));
    const int d = s.space_->degree;
    for (const Binomial& g : gens) {
      const int e = g.degree();
      if (e > d) continue;
      for (const Monomial& m : monomials_of_degree(s.space_->num_vars, d - e)) {
        const int a = s.space_->at(m * g.lead());
        if (g.trail()) {
          s.unite(a, s.space_->at(m * *g.trail()));
        } else {
          s.full_[s.find(a)] = 1;
        }
      }
    }
    return s;
  }

  static GradedSlice of(std::span<const Binomial> gens, int num_vars, int d) {
    return of(gens, std::make_shared<const SliceSpace>(num_vars, d));
  }

  const SliceSpace& space() const { return *space_; }
  std::shared_ptr<const SliceSpace> space_ptr() const { return space_; }

  std::size_t dimension() const {
    std::size_t free_classes = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i) && !full_[i]) ++free_classes;
    return parent_.size() - free_classes;
  }

  // Membership of a degree-d pure-difference binomial or monomial.
  bool contains(const Binomial& f) const {
    const int a = find(space_->at(f.lead()));
    if (!f.trail()) return full_[a];
    const int b = find(space_->at(*f.trail()));
    return full_[a] || (a == b);
  }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool full_class(int root) const { return full_[root]; }

  friend GradedSlice operator+(const GradedSlice& a, const GradedSlice& b) {
    if (a.space_->num_vars != b.space_->num_vars || a.space_->degree != b.space_->degree)
      throw PreconditionError("graded slices live in different spaces");
    GradedSlice s = a;
    for (int i = 0; i < static_cast<int>(b.parent_.size()); ++i) s.unite(i, b.find(i));
    for (int i = 0; i < static_cast<int>(b.parent_.size()); ++i)
      if (b.full_[b.find(i)]) s.full_[s.find(i)] = 1;
    return s;
  }

 private:
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    full_[a] = full_[a] | full_[b];
  }

  std::shared_ptr<const SliceSpace> space_;
  mutable std::vector<int> parent_;
  std::vector<char> full_;
};

namespace detail {

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Rank of a dense matrix over GF(p); rows are modified in place.
inline std::size_t dense_rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols,
                                    std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = mod_inverse(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t f = rows[r][c];
      if (!f) continue;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

namespace detail {

// Classes of the relation generated by all slices together, members in
// increasing index order, together with the "sum over a free class = 0"
// constraint rows of every slice restricted to each class.
struct MergedClass {
  std::vector<int> members;
  std::vector<std::vector<std::uint32_t>> rows;
};

inline std::vector<MergedClass> merged_classes(std::span<const GradedSlice> slices) {
  if (slices.empty()) throw PreconditionError("intersection of no slices");
  const auto& space = slices[0].space();
  const int n = static_cast<int>(space.size());
  for (const auto& s : slices)
    if (&s.space() != &space && (s.space().num_vars != space.num_vars || s.space().degree != space.degree))
      throw PreconditionError("graded slices live in different spaces");

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& s : slices)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(s.find(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::vector<MergedClass> out;
  std::unordered_map<int, std::size_t> slot;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = slot.emplace(find(i), out.size());
    if (fresh) out.emplace_back();
    out[it->second].members.push_back(i);
  }
  for (auto& mc : out) {
    std::unordered_map<int, int> col_of;
    for (std::size_t c = 0; c < mc.members.size(); ++c) col_of[mc.members[c]] = static_cast<int>(c);
    for (const auto& s : slices) {
      std::unordered_map<int, std::size_t> row_of;
      for (int m : mc.members) {
        const int r = s.find(m);
        if (s.full_class(r)) continue;
        auto [it, fresh] = row_of.emplace(r, mc.rows.size());
        if (fresh) mc.rows.emplace_back(mc.members.size(), 0);
        mc.rows[it->second][col_of[m]] = 1;
      }
    }
  }
  return out;
}

}  // namespace detail

// dim of the intersection of several slices of the same space, over GF(p).
// Each slice is cut out by "sum over a free class = 0" constraints; the
// intersection is cut out by all of them together, and the constraint rank
// is computed independently on each class of the merged relation.
inline std::size_t intersection_dimension(std::span<const GradedSlice> slices, std::uint32_t p = 32003) {
  std::size_t rank = 0;
  for (auto& mc : detail::merged_classes(slices)) rank += detail::dense_rank_mod_p(mc.rows, mc.members.size(), p);
  return slices[0].space().size() - rank;
}

// Leading monomials (under `order`) of the intersection of the slices, i.e.
// the degree-d part of the initial ideal. A monomial m leads some element of
// the kernel of the constraint matrix C iff the column of m lies in the span
// of the columns of smaller monomials.
inline std::vector<Monomial> intersection_initial_monomials(std::span<const GradedSlice> slices,
                                                            const TermOrder& order, std::uint32_t p = 32003) {
  const auto classes = detail::merged_classes(slices);
  const auto& space = slices[0].space();
  std::vector<Monomial> leads;
  for (const auto& mc : classes) {
    std::vector<std::size_t> cols(mc.members.size());
    std::iota(cols.begin(), cols.end(), 0);
    std::sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
      return order.less(space.monomials[mc.members[a]], space.monomials[mc.members[b]]);
    });
    // echelon basis of the column vectors seen so far, keyed by pivot row
    std::vector<std::vector<std::uint32_t>> basis(mc.rows.size());
    for (std::size_t c : cols) {
      std::vector<std::uint32_t> v(mc.rows.size());
      for (std::size_t r = 0; r < mc.rows.size(); ++r) v[r] = mc.rows[r][c];
      bool independent = false;
      for (std::size_t r = 0; r < v.size(); ++r) {
        if (!v[r]) continue;
        if (basis[r].empty()) {
          const std::uint64_t inv = detail::mod_inverse(v[r], p);
          for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p);
          basis[r] = std::move(v);
          independent = true;
          break;
        }
        const std::uint64_t f = v[r];
        for (std::size_t k = r; k < v.size(); ++k)
          v[k] = static_cast<std::uint32_t>((v[k] + (p - f) * basis[r][k]) % p);
      }
      if (!independent) leads.push_back(space.monomials[mc.members[c]]);
    }
  }
  std::sort(leads.begin(), leads.end(), [&](const Monomial& a, const Monomial& b) { return order.less(b, a); });
  return leads;
}

}  // namespace bei
