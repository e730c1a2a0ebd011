#pragma once

// Algebraic cross-checks: regularity of initial ideals, certified regularity
// of J_G, bounded-degree checks of the prime decomposition and of initial
// ideal additivity, and the conjecture sweeps.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bei/classify.hpp"
#include "bei/error.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/log.hpp"
#include "bei/monres.hpp"
#include "bei/primes.hpp"

namespace bei {

inline constexpr int kOracleMaxVertices = 8;
inline constexpr int kDecompositionMaxVertices = 6;

// ---------------------------------------------------------------------------
// Initial ideals

inline MonomialIdeal initial_ideal_of(const Graph& g, const TermOrder& order) {
  if (order.num_vars() != 2 * g.order()) throw PreconditionError("term order does not match the graph");
  return initial_ideal(buchberger(edge_binomials(g, order), order));
}

inline BettiTable initial_betti_table(const Graph& g, const TermOrder& order, std::uint32_t p = 2,
                                      int max_vertices = kOracleMaxVertices) {
  if (g.order() > max_vertices)
    throw CapExceeded("initial ideal: n = " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(max_vertices));
  require_prime(p);
  return betti_table(initial_ideal_of(g, order), p, std::max(2 * max_vertices, 2));
}

// reg(ini_< J_G); kRegNoEdges when G has no edges.
inline int regularity_initial(const Graph& g, const TermOrder& order, std::uint32_t p = 2,
                              int max_vertices = kOracleMaxVertices) {
  if (g.edge_count() == 0) return kRegNoEdges;
  return initial_betti_table(g, order, p, max_vertices).reg();
}

inline int regularity_initial(const Graph& g, OrderKind kind = OrderKind::lex, std::uint32_t p = 2,
                              int max_vertices = kOracleMaxVertices) {
  return regularity_initial(g, TermOrder::for_graph(kind, g.order()), p, max_vertices);
}

// ---------------------------------------------------------------------------
// Certified regularity

struct RegularityResult {
  enum class Status { Exact, UpperBoundOnly };
  enum class Method { Structural, InitialIdeal, Both };

  int value = kRegNoEdges;
  Status status = Status::Exact;
  Method method = Method::Structural;
  JoinCertificate certificate;
  std::optional<int> structural;
  std::vector<std::pair<std::uint32_t, int>> initial;  // (characteristic, reg ini J)
  OrderKind order = OrderKind::lex;
  bool consistent = true;
};

inline std::string to_string(RegularityResult::Status s) {
  return s == RegularityResult::Status::Exact ? "exact" : "upper-bound-only";
}

inline std::string to_string(RegularityResult::Method m) {
  switch (m) {
    case RegularityResult::Method::Structural: return "structural";
    case RegularityResult::Method::InitialIdeal: return "initial-ideal";
    case RegularityResult::Method::Both: return "both";
  }
  return "?";
}

struct CertifyOptions {
  OrderKind order = OrderKind::lex;
  std::vector<std::uint32_t> characteristics{2};
  bool confirm = true;  // cross-check structural values on the initial ideal
  int max_vertices = kOracleMaxVertices;
};

inline RegularityResult regularity_certified(const Graph& g, const CertifyOptions& opt = {}) {
  if (opt.characteristics.empty()) throw PreconditionError("no characteristic given");
  for (auto p : opt.characteristics) require_prime(p);
  RegularityResult r;
  r.order = opt.order;
  auto s = structural_regularity(g);
  r.certificate = std::move(s.certificate);
  r.structural = s.value;

  const bool can_run = g.order() <= opt.max_vertices;
  if (!s.value && !can_run)
    throw CapExceeded("no structural answer and n = " + std::to_string(g.order()) + " exceeds the oracle cap");
  if (can_run && (opt.confirm || !s.value))
    for (auto p : opt.characteristics)
      r.initial.emplace_back(p, regularity_initial(g, opt.order, p, opt.max_vertices));

  for (const auto& [p, v] : r.initial)
    if (v != r.initial.front().second) r.consistent = false;

  if (s.value) {
    r.value = *s.value;
    r.method = r.initial.empty() ? RegularityResult::Method::Structural : RegularityResult::Method::Both;
    // reg J <= reg ini J always; equality for the structural compositions,
    // since the join and union rules hold for initial ideals as well.
    for (const auto& [p, v] : r.initial)
      if (v != r.value) r.consistent = false;
    return r;
  }
  r.value = r.initial.front().second;
  r.method = RegularityResult::Method::InitialIdeal;
  r.status = r.value <= 3 ? RegularityResult::Status::Exact : RegularityResult::Status::UpperBoundOnly;
  return r;
}

// ---------------------------------------------------------------------------
// Reports

struct VerificationReport {
  VerificationReport() = default;
  explicit VerificationReport(std::string c) : claim(std::move(c)) {}

  std::string claim;
  std::size_t instances = 0;
  std::vector<std::string> failures;  // witnesses
  std::vector<std::string> notes;     // skipped or undetermined instances
  double runtime_seconds = 0;

  bool passed() const { return failures.empty(); }

  void merge(const VerificationReport& o) {
    instances += o.instances;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    runtime_seconds += o.runtime_seconds;
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs f(0..count-1) on `jobs` threads; results in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int jobs, F&& f) {
  std::vector<T> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (int w = 0; w < std::min<int>(jobs, static_cast<int>(count)); ++w)
    workers.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          out[i] = f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

// Key for deterministic ordering of per-graph output.
inline std::string graph_key(const Graph& g) {
  const Graph c = g.order() <= kCanonicalMaxVertices ? canonical_representative(g) : g;
  return std::string(1, static_cast<char>('0' + std::min(g.order(), 70))) + to_graph6(c);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Prime decomposition in bounded degree

inline VerificationReport verify_primary_decomposition(const Graph& g, std::optional<int> max_degree = std::nullopt,
                                                       int max_vertices = kDecompositionMaxVertices) {
  detail::Stopwatch clock;
  const int n = g.order();
  if (n > max_vertices) throw CapExceeded("decomposition check: n = " + std::to_string(n) + " exceeds cap");
  const int D = max_degree.value_or(n + 2);
  VerificationReport rep{"primary-decomposition " + to_graph6(g) + " D=" + std::to_string(D)};

  const auto order = TermOrder::for_graph(OrderKind::lex, n);
  const auto jg = edge_binomials(g, order);
  std::set<std::uint64_t> minimal;
  for (const CutSet& c : cut_point_sets(g)) minimal.insert(c.t.bits());
  std::vector<std::vector<Binomial>> all_primes, min_primes;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto gens = prime_generators(prime_of(g, VertexSet(m)), n, order);
    if (minimal.count(m)) min_primes.push_back(gens);
    all_primes.push_back(std::move(gens));
  }

  for (int d = 1; d <= D; ++d) {
    const auto space = std::make_shared<const SliceSpace>(2 * n, d);
    const auto j = GradedSlice::of(jg, space);
    std::vector<GradedSlice> all, mins;
    for (const auto& gens : all_primes) all.push_back(GradedSlice::of(gens, space));
    for (const auto& gens : min_primes) mins.push_back(GradedSlice::of(gens, space));
    // J_G lies in every P_T, so equal dimensions mean equal pieces
    if (d == 2)
      for (std::size_t t = 0; t < all.size(); ++t)
        for (const Binomial& f : jg)
          if (!all[t].contains(f))
            rep.failures.push_back("f " + to_string(f, n) + " not in P_" + to_string(VertexSet(t)));
    const auto dj = j.dimension();
    const auto dmin = intersection_dimension(mins);
    const auto dall = intersection_dimension(all);
    ++rep.instances;
    if (dj != dmin || dmin != dall)
      rep.failures.push_back("degree " + std::to_string(d) + ": dim J = " + std::to_string(dj) +
                             ", dim over C(G) = " + std::to_string(dmin) + ", dim over all T = " +
                             std::to_string(dall));
  }
  rep.runtime_seconds = clock.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Join formula on initial ideals

struct JoinRegularitySides {
  int joined;    // reg ini J_{G1 * G2}
  int expected;  // max(reg ini J_{G1}, reg ini J_{G2}, 3), or 2 for two complete graphs
};

inline JoinRegularitySides join_regularity_sides(const Graph& g1, const Graph& g2, OrderKind kind = OrderKind::lex,
                                                 std::uint32_t p = 2) {
  if (g1.order() < 1 || g2.order() < 1) throw PreconditionError("join factors must be nonempty");
  if (g1.order() + g2.order() > kOracleMaxVertices) throw CapExceeded("join check: n1 + n2 exceeds cap");
  const int joined = regularity_initial(join(g1, g2), kind, p);
  if (is_complete(g1) && is_complete(g2)) return {joined, 2};
  return {joined, std::max({regularity_initial(g1, kind, p), regularity_initial(g2, kind, p), 3})};
}

inline VerificationReport verify_join_regularity(const Graph& g1, const Graph& g2, OrderKind kind = OrderKind::lex,
                                                 std::uint32_t p = 2) {
  detail::Stopwatch clock;
  VerificationReport rep{"join-regularity " + to_graph6(g1) + " * " + to_graph6(g2) + " " + to_string(kind) +
                         " p=" + std::to_string(p)};
  const auto sides = join_regularity_sides(g1, g2, kind, p);
  rep.instances = 1;
  if (sides.joined != sides.expected)
    rep.failures.push_back(to_graph6(g1) + " * " + to_graph6(g2) + ": reg ini = " + std::to_string(sides.joined) +
                           ", formula = " + std::to_string(sides.expected));
  rep.runtime_seconds = clock.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Additivity of initial ideals in bounded degree

// An ideal given as the intersection of the ideals generated by each list.
using IdealDescription = std::vector<std::vector<Binomial>>;

struct AdditivityDegree {
  int degree;
  std::size_t dim_i, dim_j, dim_meet, dim_sum;
  bool sum_equal;   // ini(I + J) = ini I + ini J in this degree
  bool meet_equal;  // ini(I n J) = ini I n ini J in this degree
};

struct AdditivityResult {
  std::vector<AdditivityDegree> degrees;
  bool sum_equal = true, meet_equal = true;
};

namespace detail {

inline std::vector<GradedSlice> slices_of(const IdealDescription& ideal, const std::shared_ptr<const SliceSpace>& sp) {
  if (ideal.empty()) throw PreconditionError("ideal description without generator lists");
  std::vector<GradedSlice> out;
  for (const auto& gens : ideal) out.push_back(GradedSlice::of(gens, sp));
  return out;
}

inline std::set<std::vector<std::uint8_t>> as_set(const std::vector<Monomial>& ms) {
  std::set<std::vector<std::uint8_t>> out;
  for (const auto& m : ms) out.emplace(m.exponents().begin(), m.exponents().end());
  return out;
}

}  // namespace detail

// Degree by degree up to D:
//   ini(I + J)_d, from the sum slice when I and J are both generated ideals,
//   else from dim(I + J) = dim I + dim J - dim(I n J);
//   ini(I n J)_d, from the leading monomials of the intersected slices.
inline AdditivityResult initial_additivity(const IdealDescription& I, const IdealDescription& J, int num_vars,
                                           const TermOrder& order, int D, std::uint32_t p = 32003) {
  if (order.num_vars() != num_vars) throw PreconditionError("term order does not match the ring");
  AdditivityResult res;
  for (int d = 1; d <= D; ++d) {
    const auto sp = std::make_shared<const SliceSpace>(num_vars, d);
    const auto si = detail::slices_of(I, sp), sj = detail::slices_of(J, sp);
    std::vector<GradedSlice> both = si;
    both.insert(both.end(), sj.begin(), sj.end());

    AdditivityDegree row{d, intersection_dimension(si, p), intersection_dimension(sj, p), intersection_dimension(both, p),
                         0, false, false};
    const auto li = detail::as_set(intersection_initial_monomials(si, order, p));
    const auto lj = detail::as_set(intersection_initial_monomials(sj, order, p));
    const auto lmeet = detail::as_set(intersection_initial_monomials(both, order, p));

    std::set<std::vector<std::uint8_t>> uni = li, inter;
    uni.insert(lj.begin(), lj.end());
    for (const auto& m : li)
      if (lj.count(m)) inter.insert(m);

    if (I.size() == 1 && J.size() == 1) {
      const GradedSlice sum = si[0] + sj[0];
      const auto lsum = detail::as_set(intersection_initial_monomials(std::span(&sum, 1), order, p));
      row.dim_sum = sum.dimension();
      row.sum_equal = lsum == uni;
    } else {
      row.dim_sum = row.dim_i + row.dim_j - row.dim_meet;
      row.sum_equal = row.dim_sum == uni.size();  // ini I + ini J is always inside ini(I + J)
    }
    row.meet_equal = lmeet == inter;
    res.sum_equal = res.sum_equal && row.sum_equal;
    res.meet_equal = res.meet_equal && row.meet_equal;
    res.degrees.push_back(row);
  }
  return res;
}

inline VerificationReport verify_initial_additivity(const IdealDescription& I, const IdealDescription& J, int num_vars,
                                                    const TermOrder& order, int D, std::uint32_t p = 32003) {
  detail::Stopwatch clock;
  VerificationReport rep{"initial-additivity D=" + std::to_string(D)};
  const auto res = initial_additivity(I, J, num_vars, order, D, p);
  for (const auto& row : res.degrees) {
    ++rep.instances;
    if (row.sum_equal != row.meet_equal)
      rep.failures.push_back("degree " + std::to_string(row.degree) + ": the two equalities do not co-occur");
    else if (!row.sum_equal)
      rep.failures.push_back("degree " + std::to_string(row.degree) + ": ini(I + J) != ini I + ini J");
  }
  rep.runtime_seconds = clock.seconds();
  return rep;
}

// The ideals from the proof of the initial-ideal join formula, for
// disconnected G1 on V1 = {1..n1} and G2 on V2 = {n1+1..n}:
//   Q  = (x_i, y_i : i in V1) + J_{G2}
//   Q' = J_{K_n} n ((x_i, y_i : i in V2) + J_{G1})
// with J_G = Q n Q' and Q + Q' = (x_i, y_i : i in V1) + J_{K_{V2}}.
struct JoinProofIdeals {
  int n;
  Graph joined;
  IdealDescription j_g, q, q_prime, q_sum, complete, v2_plus_g1;
};

inline JoinProofIdeals join_proof_ideals(const Graph& g1, const Graph& g2, const TermOrder& order) {
  const int n1 = g1.order(), n = g1.order() + g2.order();
  if (order.num_vars() != 2 * n) throw PreconditionError("term order does not match the join");
  const Graph g = join(g1, g2);
  const VertexSet v1 = VertexSet::range(n1), v2 = VertexSet::range(n) - v1;
  Graph on_v1(n), on_v2(n);
  for (const Edge& e : g.edges()) {
    if (v1.contains(e.u) && v1.contains(e.v)) on_v1.add_edge(e.u, e.v);
    if (v2.contains(e.u) && v2.contains(e.v)) on_v2.add_edge(e.u, e.v);
  }
  const auto cat = [](std::vector<Binomial> a, const std::vector<Binomial>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  JoinProofIdeals r{n, g, {}, {}, {}, {}, {}, {}};
  r.j_g = {edge_binomials(g, order)};
  r.q = {cat(vertex_variables(v1, n), edge_binomials(on_v2, order))};
  r.complete = {clique_binomials(VertexSet::range(n), n, order)};
  r.v2_plus_g1 = {cat(vertex_variables(v2, n), edge_binomials(on_v1, order))};
  r.q_prime = {r.complete[0], r.v2_plus_g1[0]};
  r.q_sum = {cat(vertex_variables(v1, n), clique_binomials(v2, n, order))};
  return r;
}

// Checks in degrees <= D the steps of the proof: J_G = Q n Q',
// ini Q' = ini J_{K_n} n ini((x_i, y_i : V2) + J_{G1}), ini(Q + Q') = ini Q + ini Q'
// and Q + Q' = (x_i, y_i : V1) + J_{K_{V2}}.
inline VerificationReport verify_join_proof(const Graph& g1, const Graph& g2, OrderKind kind, int D,
                                            std::uint32_t p = 32003) {
  detail::Stopwatch clock;
  if (component_count_within(g1, g1.vertices()) < 2 || component_count_within(g2, g2.vertices()) < 2)
    throw PreconditionError("join proof ideals: both graphs must be disconnected");
  const int n = g1.order() + g2.order();
  if (n > kDecompositionMaxVertices) throw CapExceeded("join proof ideals: n exceeds cap");
  const auto order = TermOrder::for_graph(kind, n);
  const auto ideals = join_proof_ideals(g1, g2, order);
  VerificationReport rep{"join-proof " + to_graph6(g1) + " * " + to_graph6(g2) + " D=" + std::to_string(D)};

  const auto a = initial_additivity(ideals.complete, ideals.v2_plus_g1, 2 * n, order, D, p);
  const auto b = initial_additivity(ideals.q, ideals.q_prime, 2 * n, order, D, p);
  for (int d = 1; d <= D; ++d) {
    const auto sp = std::make_shared<const SliceSpace>(2 * n, d);
    const auto j = GradedSlice::of(ideals.j_g[0], sp);
    auto parts = detail::slices_of(ideals.q, sp);
    const auto qp = detail::slices_of(ideals.q_prime, sp);
    parts.insert(parts.end(), qp.begin(), qp.end());
    const auto target = GradedSlice::of(ideals.q_sum[0], sp);
    const auto& ra = a.degrees[d - 1];
    const auto& rb = b.degrees[d - 1];
    const std::string at = "degree " + std::to_string(d) + ": ";
    rep.instances += 4;
    if (intersection_dimension(parts, p) != j.dimension()) rep.failures.push_back(at + "J_G != Q n Q'");
    if (!ra.meet_equal) rep.failures.push_back(at + "ini Q' != ini J_K n ini(vars V2 + J_G1)");
    if (!rb.sum_equal || !rb.meet_equal) rep.failures.push_back(at + "ini(Q + Q') != ini Q + ini Q'");
    if (rb.dim_sum != target.dimension()) rep.failures.push_back(at + "Q + Q' != vars V1 + J_K(V2)");
  }
  rep.runtime_seconds = clock.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Conjecture sweeps

enum class Conjecture { ehh_equality, sk_cliques, weakly_closed_ell };

inline std::string to_string(Conjecture c) {
  switch (c) {
    case Conjecture::ehh_equality: return "ehh_equality";
    case Conjecture::sk_cliques: return "sk_cliques";
    case Conjecture::weakly_closed_ell: return "weakly_closed_ell";
  }
  return "?";
}

inline Conjecture parse_conjecture(const std::string& s) {
  for (auto c : {Conjecture::ehh_equality, Conjecture::sk_cliques, Conjecture::weakly_closed_ell})
    if (to_string(c) == s) return c;
  throw PreconditionError("unknown conjecture '" + s + "'");
}

struct SweepOptions {
  std::uint32_t p = 2;
  int jobs = 1;
  int max_vertices = kOracleMaxVertices;
};

namespace detail {

struct GraphOutcome {
  std::string key;
  bool counted = false;
  std::optional<std::string> failure, note;
};

inline GraphOutcome check_conjecture(const Graph& g, Conjecture which, const SweepOptions& opt) {
  GraphOutcome o;
  o.key = graph_key(g);
  const std::string g6 = to_graph6(g);
  try {
    switch (which) {
      case Conjecture::ehh_equality: {
        const auto s = structural_regularity(g);
        if (!s.value || *s.value == kRegNoEdges) return o;
        const int ini = regularity_initial(g, OrderKind::lex, opt.p, opt.max_vertices);
        o.counted = true;
        if (ini != *s.value)
          o.failure = g6 + ": reg J = " + std::to_string(*s.value) + ", reg ini_lex J = " + std::to_string(ini);
        return o;
      }
      case Conjecture::sk_cliques: {
        if (g.edge_count() == 0) return o;
        const int ini = regularity_initial(g, OrderKind::lex, opt.p, opt.max_vertices);
        const int c = maximal_clique_count(g);
        o.counted = true;
        if (ini > c + 1)
          o.failure = g6 + ": reg ini_lex J = " + std::to_string(ini) + " > c(G) + 1 = " + std::to_string(c + 1);
        return o;
      }
      case Conjecture::weakly_closed_ell: {
        if (!is_connected(g) || g.edge_count() == 0 || !is_weakly_closed(g).weakly_closed) return o;
        const int ell1 = longest_induced_path_length(g) + 1;
        CertifyOptions co;
        co.characteristics = {opt.p};
        co.max_vertices = opt.max_vertices;
        const auto r = regularity_certified(g, co);
        o.counted = true;
        if (r.status == RegularityResult::Status::Exact) {
          if (r.value != ell1)
            o.failure = g6 + ": reg J = " + std::to_string(r.value) + ", l(G) + 1 = " + std::to_string(ell1);
        } else if (r.value > ell1) {
          // reg J lies in [l + 1, value]; not decided
          o.note = g6 + ": undetermined, l(G) + 1 = " + std::to_string(ell1) + " <= reg J <= " +
                   std::to_string(r.value);
        }
        return o;
      }
    }
  } catch (const CapExceeded& e) {
    o.note = g6 + ": skipped (" + e.what() + ")";
    log_message(LogLevel::info, "skipped " + g6 + ": " + e.what());
  }
  return o;
}

}  // namespace detail

inline VerificationReport verify_conjectures(const std::vector<Graph>& corpus, Conjecture which,
                                             const SweepOptions& opt = {}) {
  detail::Stopwatch clock;
  VerificationReport rep{to_string(which)};
  auto outcomes = detail::parallel_map<detail::GraphOutcome>(
      corpus.size(), opt.jobs, [&](std::size_t i) { return detail::check_conjecture(corpus[i], which, opt); });
  std::stable_sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  for (const auto& o : outcomes) {
    rep.instances += o.counted;
    if (o.failure) rep.failures.push_back(*o.failure);
    if (o.note) rep.notes.push_back(*o.note);
  }
  rep.runtime_seconds = clock.seconds();
  return rep;
}

}  // namespace bei
