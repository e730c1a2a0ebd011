#pragma once

// Regularity of binomial edge ideals from graph structure: join/union
// decomposition, the regularity classes 2 / 3 / >= 4, exact values for
// graphs assembled from complete graphs, paths and edgeless graphs, the
// Cohen-Macaulay and extremal Gorenstein patterns, and graph generators.

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bei/error.hpp"
#include "bei/graph.hpp"

namespace bei {

// reg(J_G) for a graph without edges (J_G = 0). Acts as minus infinity in max().
inline constexpr int kRegNoEdges = INT_MIN;

inline std::string reg_to_string(std::optional<int> reg) {
  if (!reg) return "unknown";
  if (*reg == kRegNoEdges) return "no-edges";
  return std::to_string(*reg);
}

enum class RegClass { NoEdges, Two, Three, AtLeastFour };

inline std::string to_string(RegClass c) {
  switch (c) {
    case RegClass::NoEdges: return "no-edges";
    case RegClass::Two: return "two";
    case RegClass::Three: return "three";
    case RegClass::AtLeastFour: return "at-least-four";
  }
  return "?";
}

// K_r + K_s + t isolated vertices, r >= s, and r, s in {0} or >= 2.
struct Block {
  int r = 0;
  int s = 0;
  int t = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

inline std::string to_string(const Block& b) {
  std::vector<std::string> parts;
  if (b.r) parts.push_back("K" + std::to_string(b.r));
  if (b.s) parts.push_back("K" + std::to_string(b.s));
  if (b.t == 1) parts.push_back("K1");
  else if (b.t > 1) parts.push_back("K" + std::to_string(b.t) + "^c");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out.empty() ? "K0" : out;
}

// Block form of g, if g is a disjoint union of at most two cliques with at
// least two vertices each, plus isolated vertices.
inline std::optional<Block> block_form(const Graph& g) {
  Block b;
  std::vector<int> cliques;
  for (VertexSet c : components(g)) {
    if (c.size() == 1) {
      ++b.t;
      continue;
    }
    bool complete = true;
    c.for_each([&](Vertex v) { complete = complete && (c - VertexSet{v}).subset_of(g.neighbors(v)); });
    if (!complete) return std::nullopt;
    cliques.push_back(c.size());
  }
  if (cliques.size() > 2) return std::nullopt;
  std::sort(cliques.rbegin(), cliques.rend());
  if (!cliques.empty()) b.r = cliques[0];
  if (cliques.size() > 1) b.s = cliques[1];
  return b;
}

inline int block_regularity(const Block& b) {
  if (b.r == 0) return kRegNoEdges;
  return b.s == 0 ? 2 : 3;
}

// Recursive decomposition with structural regularity predictions.
struct JoinCertificate {
  enum class Kind { Leaf, Join, Union };
  Kind kind = Kind::Leaf;
  VertexSet vertices;                  // labels in the decomposed graph
  std::optional<Block> block;          // Leaf: block form, if any
  GraphClass shape;                    // Leaf: stock shape
  Graph leaf;                          // Leaf: induced subgraph, relabeled 1..k
  std::vector<JoinCertificate> children;
  std::optional<int> predicted_reg;    // nullopt: unknown; kRegNoEdges: no edges

  bool is_general_leaf() const { return kind == Kind::Leaf && !block; }
};

inline std::string to_string(JoinCertificate::Kind k) {
  switch (k) {
    case JoinCertificate::Kind::Leaf: return "leaf";
    case JoinCertificate::Kind::Join: return "join";
    case JoinCertificate::Kind::Union: return "union";
  }
  return "?";
}

// Compact one-line rendering, e.g. "join(K1, P3 + P3)[5]".
inline std::string describe(const JoinCertificate& c) {
  std::string out;
  if (c.kind == JoinCertificate::Kind::Leaf) {
    out = c.block ? to_string(*c.block) : to_string(c.shape);
  } else {
    out = c.kind == JoinCertificate::Kind::Join ? "join(" : "union(";
    for (std::size_t i = 0; i < c.children.size(); ++i) out += (i ? ", " : "") + describe(c.children[i]);
    out += ")";
  }
  return out + "[" + reg_to_string(c.predicted_reg) + "]";
}

namespace detail {

// Sort key for sibling certificates: size, then canonical form when small
// enough to compute, then smallest vertex.
inline bool sibling_less(const Graph& g, VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.size() <= kCanonicalMaxVertices) {
    const auto ca = canonical_form(induced_subgraph(g, a));
    const auto cb = canonical_form(induced_subgraph(g, b));
    if (ca != cb) return ca < cb;
  }
  return a.min() < b.min();
}

inline void sort_siblings(const Graph& g, std::vector<VertexSet>& parts) {
  std::sort(parts.begin(), parts.end(), [&](VertexSet a, VertexSet b) { return sibling_less(g, a, b); });
}

inline JoinCertificate decompose_within(const Graph& g, VertexSet w) {
  JoinCertificate c;
  c.vertices = w;
  const Graph h = induced_subgraph(g, w);
  if (auto b = block_form(h)) {
    c.leaf = h;
    c.block = b;
    c.shape = classify_stock(h);
    c.predicted_reg = block_regularity(*b);
    return c;
  }
  auto parts = components_within(g, w);
  if (parts.size() > 1) {
    c.kind = JoinCertificate::Kind::Union;
    sort_siblings(g, parts);
    int sum = 0, with_edges = 0;
    bool known = true;
    for (VertexSet p : parts) {
      c.children.push_back(decompose_within(g, p));
      const auto& r = c.children.back().predicted_reg;
      if (!r) known = false;
      else if (*r != kRegNoEdges) {
        sum += *r;
        ++with_edges;
      }
    }
    if (known) c.predicted_reg = with_edges ? sum - with_edges + 1 : kRegNoEdges;
    return c;
  }
  auto co_parts = components_within(g.complement(), w);
  if (co_parts.size() > 1) {
    c.kind = JoinCertificate::Kind::Join;
    sort_siblings(g, co_parts);
    const VertexSet first = co_parts.front();
    c.children.push_back(decompose_within(g, first));
    c.children.push_back(decompose_within(g, w - first));
    const auto& a = c.children[0];
    const auto& b = c.children[1];
    const auto complete = [](const JoinCertificate& x) { return x.block && is_complete(x.leaf); };
    if (complete(a) && complete(b)) c.predicted_reg = 2;
    else if (a.predicted_reg && b.predicted_reg) c.predicted_reg = std::max({*a.predicted_reg, *b.predicted_reg, 3});
    return c;
  }
  c.leaf = h;
  c.shape = classify_stock(h);
  if (c.shape.tag == GraphClass::Tag::Path) c.predicted_reg = c.shape.size;
  return c;
}

}  // namespace detail

inline JoinCertificate join_decompose(const Graph& g) { return detail::decompose_within(g, g.vertices()); }

// Rebuilds the graph a certificate describes (on the original labels).
inline Graph reconstruct(const JoinCertificate& c, int n) {
  Graph out(n);
  std::function<void(const JoinCertificate&)> rec = [&](const JoinCertificate& x) {
    if (x.kind == JoinCertificate::Kind::Leaf) {
      const auto vs = x.vertices.to_vector();
      for (const Edge& e : x.leaf.edges()) out.add_edge(vs[e.u - 1], vs[e.v - 1]);
      return;
    }
    for (const auto& ch : x.children) rec(ch);
    if (x.kind == JoinCertificate::Kind::Join)
      x.children[0].vertices.for_each([&](Vertex a) {
        x.children[1].vertices.for_each([&](Vertex b) { out.add_edge(a, b); });
      });
  };
  rec(c);
  return out;
}

struct StructuralResult {
  std::optional<int> value;  // nullopt: not determined structurally
  JoinCertificate certificate;
};

// Exact reg(J_G) when G reduces, through isolated-vertex stripping, union
// additivity and the join formula, to complete graphs, paths and edgeless
// graphs.
inline StructuralResult structural_regularity(const Graph& g) {
  StructuralResult r{std::nullopt, join_decompose(g)};
  r.value = r.certificate.predicted_reg;
  return r;
}

namespace detail {

inline RegClass regularity_class_within(const Graph& g, VertexSet w) {
  VertexSet core;
  w.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(w)) core.insert(v);
  });
  if (core.empty()) return RegClass::NoEdges;
  const Graph h = induced_subgraph(g, core);
  if (is_complete(h)) return RegClass::Two;
  const auto parts = components_within(g, core);
  if (parts.size() > 1) {
    if (parts.size() == 2 && std::all_of(parts.begin(), parts.end(), [&](VertexSet p) {
          return is_complete(induced_subgraph(g, p));
        }))
      return RegClass::Three;
    return RegClass::AtLeastFour;
  }
  const auto co_parts = components_within(g.complement(), core);
  if (co_parts.size() < 2) return RegClass::AtLeastFour;
  const VertexSet first = *std::min_element(co_parts.begin(), co_parts.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.min() < b.min();
  });
  const auto c1 = regularity_class_within(g, first);
  const auto c2 = regularity_class_within(g, core - first);
  return (c1 != RegClass::AtLeastFour && c2 != RegClass::AtLeastFour) ? RegClass::Three : RegClass::AtLeastFour;
}

}  // namespace detail

inline RegClass regularity_class(const Graph& g) { return detail::regularity_class_within(g, g.vertices()); }

// ---------------------------------------------------------------------------
// Cohen-Macaulay / extremal Gorenstein patterns (graphs without isolated vertices)

struct CmGorensteinResult {
  bool cm_reg3 = false;
  bool extremal_gorenstein = false;
  std::string pattern;  // "K2 + K3", "K1*(K2 + K3)" or "none"
};

inline CmGorensteinResult classify_cm_gorenstein(const Graph& g) {
  if (!isolated_vertices(g).empty()) throw PreconditionError("classify_cm_gorenstein: graph has isolated vertices");
  CmGorensteinResult out;
  out.pattern = "none";
  const auto two_cliques = [](const Graph& h) -> std::optional<std::pair<int, int>> {
    const auto parts = components(h);
    if (parts.size() != 2) return std::nullopt;
    for (VertexSet p : parts)
      if (!is_complete(induced_subgraph(h, p))) return std::nullopt;
    return std::pair{parts[1].size(), parts[0].size()};
  };
  if (auto rs = two_cliques(g); rs && rs->second >= 2) {
    out.cm_reg3 = true;
    out.pattern = "K" + std::to_string(rs->first) + " + K" + std::to_string(rs->second);
    out.extremal_gorenstein = rs->first == 2 && rs->second == 2;
    return out;
  }
  const int n = g.order();
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) != n - 1) continue;
    if (auto rs = two_cliques(induced_subgraph(g, g.vertices() - VertexSet{v}))) {
      out.cm_reg3 = true;
      out.pattern = "K1*(K" + std::to_string(rs->first) + " + K" + std::to_string(rs->second) + ")";
      out.extremal_gorenstein = rs->first == 1 && rs->second == 1;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

enum class ThresholdStep { isolated, dominating };

// Vertex k of the result is the k-th letter of the word; a dominating letter
// joins the new vertex to all earlier ones.
inline Graph build_threshold(const std::vector<ThresholdStep>& word) {
  if (word.empty()) throw PreconditionError("threshold graph: empty creation word");
  if (word.size() > static_cast<std::size_t>(kMaxVertices)) throw CapExceeded("threshold graph: word too long");
  Graph g(static_cast<int>(word.size()));
  for (std::size_t k = 1; k < word.size(); ++k)
    if (word[k] == ThresholdStep::dominating)
      for (Vertex u = 1; u <= static_cast<Vertex>(k); ++u) g.add_edge(u, static_cast<Vertex>(k + 1));
  return g;
}

struct Counterexample {
  Graph graph;
  int predicted_reg;  // sum t_i - q + 1
  int ell_plus_1;     // longest induced path length + 1 = max t_i
};

// K1 * (P_{t_1} + ... + P_{t_q}); the cone vertex is 1.
inline Counterexample build_counterexample(const std::vector<int>& t) {
  if (t.size() < 2) throw PreconditionError("counterexample: need q >= 2 paths");
  for (int ti : t)
    if (ti < 3) throw PreconditionError("counterexample: path sizes must be >= 3");
  const int total = std::accumulate(t.begin(), t.end(), 0);
  if (total + 1 > kMaxVertices) throw CapExceeded("counterexample: more than 64 vertices");
  Graph paths(0);
  for (int ti : t) paths = disjoint_union(paths, path_graph(ti));
  const int q = static_cast<int>(t.size());
  return {join(Graph(1), paths), total - q + 1, *std::max_element(t.begin(), t.end())};
}

}  // namespace bei
