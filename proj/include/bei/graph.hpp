#pragma once

// Simple graphs on vertices 1..n, their text encodings, small-graph
// enumeration, and the combinatorial measurements used by the regularity
// classifier (components, induced paths, cliques, dominating sets,
// weakly-closed labelings).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bei/error.hpp"

namespace bei {

using Vertex = int;  // 1-based

inline constexpr int kMaxVertices = 64;
inline constexpr int kGraph6MaxVertices = 62;

// Subset of [n] stored as a bitmask; bit v-1 represents vertex v.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <class Range>
  static VertexSet of(const Range& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  // {1, ..., n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1u; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << (v - 1); }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr Vertex min() const { return std::countr_zero(bits_) + 1; }
  constexpr Vertex max() const { return 64 - std::countl_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b) + 1));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Order by size, then lexicographically on the sorted element lists.
inline bool size_lex_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return va < vb;
}

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw PreconditionError("graph order must be in 0..64");
  }
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }
  template <class Range>
  static Graph from_edges(int n, const Range& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loops are not allowed");
    adj_[u - 1] |= std::uint64_t{1} << (v - 1);
    adj_[v - 1] |= std::uint64_t{1} << (u - 1);
  }
  void remove_edge(Vertex u, Vertex v) {
    adj_[u - 1] &= ~(std::uint64_t{1} << (v - 1));
    adj_[v - 1] &= ~(std::uint64_t{1} << (u - 1));
  }

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u - 1] >> (v - 1)) & 1u; }
  // N(v)
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v - 1]); }
  // N[v]
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }
  int degree(Vertex v) const { return std::popcount(adj_[v - 1]); }

  int edge_count() const {
    int total = 0;
    for (auto row : adj_) total += std::popcount(row);
    return total / 2;
  }

  // Edges {i, j} with i < j in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex i = 1; i <= n_; ++i)
      for (Vertex j = i + 1; j <= n_; ++j)
        if (adjacent(i, j)) out.push_back({i, j});
    return out;
  }

  Graph complement() const {
    Graph c(n_);
    const auto all = VertexSet::range(n_).bits();
    for (int i = 0; i < n_; ++i) c.adj_[i] = all & ~adj_[i] & ~(std::uint64_t{1} << i);
    return c;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v < 1 || v > n_) throw PreconditionError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// ---------------------------------------------------------------------------
// Stock graphs

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n);
  return g;
}

// K_{1,k} with center 1.
inline Graph star_graph(int k) {
  Graph g(k + 1);
  for (Vertex v = 2; v <= k + 1; ++v) g.add_edge(1, v);
  return g;
}

inline bool is_complete(const Graph& g) { return g.edge_count() * 2 == g.order() * (g.order() - 1); }

inline VertexSet isolated_vertices(const Graph& g) {
  VertexSet s;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) == 0) s.insert(v);
  return s;
}

// ---------------------------------------------------------------------------
// Structural operations

enum class ComposeMode { join, disjoint_union };

// G1 on 1..n1, G2 shifted onto n1+1..n1+n2.
inline Graph compose(const Graph& g1, const Graph& g2, ComposeMode mode) {
  const int n1 = g1.order();
  Graph g(n1 + g2.order());
  for (const Edge& e : g1.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) g.add_edge(e.u + n1, e.v + n1);
  if (mode == ComposeMode::join)
    for (Vertex a = 1; a <= n1; ++a)
      for (Vertex b = 1; b <= g2.order(); ++b) g.add_edge(a, b + n1);
  return g;
}

inline Graph join(const Graph& g1, const Graph& g2) { return compose(g1, g2, ComposeMode::join); }
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return compose(g1, g2, ComposeMode::disjoint_union);
}

// Relabels W onto 1..|W| preserving relative order.
inline Graph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices())) throw PreconditionError("induced_subgraph: vertex set not contained in [n]");
  const auto vs = w.to_vector();
  Graph h(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.adjacent(vs[a], vs[b])) h.add_edge(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1));
  return h;
}

// Connected components of G restricted to `within`, unordered.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp{left.min()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next = next | g.neighbors(v); });
      next = (next & left) - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

inline int component_count_within(const Graph& g, VertexSet within) {
  return static_cast<int>(components_within(g, within).size());
}

// Components of G (or of its complement), sorted by (size, smallest vertex).
inline std::vector<VertexSet> components(const Graph& g, bool of_complement = false) {
  auto parts = of_complement ? components_within(g.complement(), g.vertices()) : components_within(g, g.vertices());
  std::sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.min() < b.min();
  });
  return parts;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && component_count_within(g, g.vertices()) == 1; }

// ---------------------------------------------------------------------------
// graph6 (short form, n <= 62)

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxVertices) throw CapExceeded("graph6 short form supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  const auto byte = [](char c) { return static_cast<unsigned char>(c); };
  if (byte(text[0]) == 126) throw ParseError("graph6: long-form header (n > 62) is not supported", 0);
  if (byte(text[0]) < 63 || byte(text[0]) > 126) throw ParseError("graph6: malformed header byte", 0);
  const int n = byte(text[0]) - 63;
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < 1 + nbytes) throw ParseError("graph6: truncated bit vector", text.size());
  if (text.size() > 1 + nbytes) throw ParseError("graph6: trailing garbage", 1 + nbytes);
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    const unsigned c = byte(text[1 + k]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", 1 + k);
    const unsigned value = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (value >> b) & 1u;
      if (bit >= nbits) {
        if (set) throw ParseError("graph6: nonzero padding bits", 1 + k);
        continue;
      }
      if (set) {
        // column-major upper triangle: bit index -> (i, j), i < j
        std::size_t j = 1;
        std::size_t base = 0;
        while (base + j <= bit) {
          base += j;
          ++j;
        }
        const std::size_t i = bit - base;
        g.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Plain edge list: first line "n", then one "u v" pair per line (1-based).
// Several graphs may share a file, separated by blank lines. Lines starting
// with '#' are comments.

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << "\n";
  for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

inline std::vector<Graph> parse_edge_lists(std::string_view text) {
  std::vector<Graph> out;
  std::optional<Graph> current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (current) out.push_back(std::move(*current));
      current.reset();
      if (end == text.size()) break;
      continue;
    }
    if (line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::istringstream is(line);
    long a = 0;
    long b = 0;
    std::string rest;
    if (!current) {
      if (!(is >> a) || (is >> rest)) throw ParseError("edge list: expected vertex count", line_no);
      if (a < 0 || a > kMaxVertices) throw ParseError("edge list: vertex count outside 0..64", line_no);
      current.emplace(static_cast<int>(a));
    } else {
      if (!(is >> a >> b) || (is >> rest)) throw ParseError("edge list: expected \"u v\"", line_no);
      if (a < 1 || b < 1 || a > current->order() || b > current->order() || a == b)
        throw ParseError("edge list: invalid edge", line_no);
      current->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (end == text.size()) break;
  }
  if (current) out.push_back(std::move(*current));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form: the lexicographically minimal graph6 bit string over all
// vertex permutations, found by branch and bound on the column-major prefix.

inline constexpr int kCanonicalMaxVertices = 10;

struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;  // graph6 bit string, first bit most significant
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

struct CanonSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<Vertex> perm;
  std::vector<Vertex> best_perm;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;

  // prefix holds the bits of columns 1..k-1 (k vertices placed), `len` bits.
  void search(int k, std::uint64_t prefix, int len, VertexSet used) {
    if (k == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (used.contains(v)) continue;
      std::uint64_t p = prefix;
      for (int i = 0; i < k; ++i) p = (p << 1) | (g.adjacent(perm[i], v) ? 1u : 0u);
      const int plen = len + k;
      if (have_best && plen > 0 && p > (best >> (total_bits - plen))) continue;
      perm[k] = v;
      VertexSet u2 = used;
      u2.insert(v);
      search(k + 1, p, plen, u2);
    }
  }
};

}  // namespace detail

// Returns the canonical form and the permutation realizing it
// (perm[k] = original vertex placed at canonical label k+1).
inline std::pair<CanonicalForm, std::vector<Vertex>> canonical_labeling(const Graph& g,
                                                                         int cap = kCanonicalMaxVertices) {
  const int n = g.order();
  if (n > cap || n > 11) throw CapExceeded("canonical form: n exceeds cap " + std::to_string(cap));
  detail::CanonSearch s{g, n, n * (n - 1) / 2, std::vector<Vertex>(n), {}, 0, false};
  if (n == 0) return {CanonicalForm{0, 0}, {}};
  s.search(0, 0, 0, VertexSet{});
  return {CanonicalForm{n, s.best}, s.best_perm};
}

inline CanonicalForm canonical_form(const Graph& g, int cap = kCanonicalMaxVertices) {
  return canonical_labeling(g, cap).first;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  // new label k+1 <- old vertex perm[k]
  std::vector<Vertex> inv(g.order() + 1);
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = static_cast<Vertex>(k + 1);
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(inv[e.u], inv[e.v]);
  return h;
}

inline Graph canonical_representative(const Graph& g) { return relabel(g, canonical_labeling(g).second); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

inline constexpr int kEnumerateMaxVertices = 7;

// One representative per isomorphism class (the canonical relabeling), in
// increasing canonical bit-string order. Built by vertex augmentation of the
// (n-1)-vertex classes.
inline std::vector<Graph> enumerate_small_graphs(int n, bool connected_only = false) {
  if (n < 1 || n > kEnumerateMaxVertices) throw PreconditionError("enumerate_small_graphs: n must be in 1..7");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> next;
    for (const Graph& base : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
        Graph g(m);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        VertexSet(nb).for_each([&](Vertex v) { g.add_edge(v, m); });
        auto [form, perm] = canonical_labeling(g);
        if (seen.insert(form.bits).second) next.emplace_back(form.bits, relabel(g, perm));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [bits, g] : next) level.push_back(std::move(g));
  }
  if (connected_only) std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  return level;
}

// ---------------------------------------------------------------------------
// Measurements

// l(G): number of edges of a longest induced path (0 when G has no edges).
inline int longest_induced_path_length(const Graph& g) {
  int best = 0;
  const int n = g.order();
  // path_mask excludes the current end; every new vertex must avoid N(path_mask).
  std::function<void(Vertex, VertexSet, int)> extend = [&](Vertex end, VertexSet interior, int len) {
    best = std::max(best, len);
    if (best == n - 1) return;
    VertexSet forbidden = interior;
    forbidden.insert(end);
    VertexSet blocked;
    interior.for_each([&](Vertex u) { blocked = blocked | g.neighbors(u); });
    const VertexSet cand = g.neighbors(end) - forbidden - blocked;
    cand.for_each([&](Vertex w) {
      VertexSet inner = interior;
      inner.insert(end);
      extend(w, inner, len + 1);
    });
  };
  for (Vertex v = 1; v <= n && best < n - 1; ++v) extend(v, VertexSet{}, 0);
  return best;
}

// Inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted by
// (size, lexicographic).
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      if (!r.empty()) out.push_back(r);
      return;
    }
    Vertex pivot = (p | x).min();
    int best = -1;
    (p | x).for_each([&](Vertex u) {
      const int c = (p & g.neighbors(u)).size();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    (p - g.neighbors(pivot)).for_each([&](Vertex v) {
      VertexSet r2 = r;
      r2.insert(v);
      bk(r2, p & g.neighbors(v), x & g.neighbors(v));
      p.erase(v);
      x.insert(v);
    });
  };
  bk(VertexSet{}, g.vertices(), VertexSet{});
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

inline int maximal_clique_count(const Graph& g) { return static_cast<int>(maximal_cliques(g).size()); }

inline constexpr int kWeaklyClosedMaxVertices = 10;

struct ClosednessResult {
  bool weakly_closed = false;
  // labeling[v-1] is the label given to vertex v
  std::optional<std::vector<Vertex>> weakly_closed_labeling;
  bool closed = false;
  std::optional<std::vector<Vertex>> closed_labeling;
};

namespace detail {

// Depth-first labeling search: order[pos] is the vertex receiving label pos+1.
template <class Accept>
std::optional<std::vector<Vertex>> search_labeling(const Graph& g, Accept accept) {
  const int n = g.order();
  std::vector<Vertex> order;
  order.reserve(n);
  std::function<bool(VertexSet)> rec = [&](VertexSet used) -> bool {
    if (static_cast<int>(order.size()) == n) return true;
    for (Vertex v = 1; v <= n; ++v) {
      if (used.contains(v)) continue;
      if (!accept(order, v)) continue;
      order.push_back(v);
      VertexSet u2 = used;
      u2.insert(v);
      if (rec(u2)) return true;
      order.pop_back();
    }
    return false;
  };
  if (!rec(VertexSet{})) return std::nullopt;
  std::vector<Vertex> labeling(n);
  for (int pos = 0; pos < n; ++pos) labeling[order[pos] - 1] = pos + 1;
  return labeling;
}

}  // namespace detail

// Weakly closed: some labeling with, for every edge {i,j} with j > i+1 and
// every i < k < j, {i,k} or {j,k} an edge. Closed: for edges {i,j},{i,k}
// with i < j, i < k we need {j,k}; for {i,k},{j,k} with i < k, j < k we
// need {i,j}.
inline ClosednessResult is_weakly_closed(const Graph& g, int cap = kWeaklyClosedMaxVertices) {
  if (g.order() > cap) throw CapExceeded("is_weakly_closed: n exceeds cap " + std::to_string(cap));
  ClosednessResult res;
  res.weakly_closed_labeling = detail::search_labeling(g, [&](const std::vector<Vertex>& order, Vertex w) {
    const int j = static_cast<int>(order.size());
    for (int i = 0; i + 1 < j; ++i) {
      if (!g.adjacent(order[i], w)) continue;
      for (int k = i + 1; k < j; ++k)
        if (!g.adjacent(order[i], order[k]) && !g.adjacent(w, order[k])) return false;
    }
    return true;
  });
  res.weakly_closed = res.weakly_closed_labeling.has_value();
  res.closed_labeling = detail::search_labeling(g, [&](const std::vector<Vertex>& order, Vertex w) {
    const int p = static_cast<int>(order.size());
    for (int a = 0; a < p; ++a) {
      if (!g.adjacent(order[a], w)) continue;
      for (int b = 0; b < p; ++b) {
        if (b == a) continue;
        // two earlier neighbours of the newest vertex must be adjacent
        if (g.adjacent(order[b], w) && !g.adjacent(order[a], order[b])) return false;
        // earlier i=a adjacent to w and to a later j=b  =>  {b, w} needed
        if (b > a && g.adjacent(order[a], order[b]) && !g.adjacent(order[b], w)) return false;
      }
    }
    return true;
  });
  res.closed = res.closed_labeling.has_value();
  return res;
}

// Minimum connected dominating set; ties broken by the lexicographically
// smallest vertex set.
inline VertexSet min_connected_dominating_set(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("min_connected_dominating_set: graph must be connected");
  const int n = g.order();
  std::vector<Vertex> pick;
  std::optional<VertexSet> found;
  std::function<bool(int, int)> choose = [&](int start, int left) -> bool {
    if (left == 0) {
      const VertexSet x = VertexSet::of(pick);
      VertexSet dominated = x;
      x.for_each([&](Vertex v) { dominated = dominated | g.neighbors(v); });
      if (dominated == g.vertices() && component_count_within(g, x) == 1) {
        found = x;
        return true;
      }
      return false;
    }
    for (Vertex v = start; v <= n - left + 1; ++v) {
      pick.push_back(v);
      if (choose(v + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= n; ++k)
    if (choose(1, k)) return *found;
  return g.vertices();
}

// ---------------------------------------------------------------------------
// Stock-graph recognition

struct GraphClass {
  enum class Tag { CompleteK, EmptyKc, Path, Cycle, Star, General };
  Tag tag = Tag::General;
  int size = 0;  // r, t, k as appropriate
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

inline std::string to_string(const GraphClass& c) {
  const auto k = std::to_string(c.size);
  switch (c.tag) {
    case GraphClass::Tag::CompleteK: return "K" + k;
    case GraphClass::Tag::EmptyKc: return "K" + k + "^c";
    case GraphClass::Tag::Path: return "P" + k;
    case GraphClass::Tag::Cycle: return "C" + k;
    case GraphClass::Tag::Star: return "K1," + k;
    case GraphClass::Tag::General: return "general";
  }
  return "general";
}

inline bool is_path(const Graph& g) {
  const int n = g.order();
  if (n == 0 || g.edge_count() != n - 1 || !is_connected(g)) return false;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

inline bool is_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.edge_count() != n || !is_connected(g)) return false;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// Precedence: complete, edgeless, path, cycle, star.
inline GraphClass classify_stock(const Graph& g) {
  using Tag = GraphClass::Tag;
  const int n = g.order();
  if (n >= 1 && is_complete(g)) return {Tag::CompleteK, n};
  if (g.edge_count() == 0) return {Tag::EmptyKc, n};
  if (is_path(g)) return {Tag::Path, n};
  if (is_cycle(g)) return {Tag::Cycle, n};
  if (g.edge_count() == n - 1 && is_connected(g)) {
    for (Vertex v = 1; v <= n; ++v)
      if (g.degree(v) == n - 1) return {Tag::Star, n - 1};
  }
  return {Tag::General, n};
}

}  // namespace bei
