#pragma once

// Graded Betti tables of monomial ideals.
//
// Squarefree ideals go through Hochster's formula
//   beta_{i,s}(I) = dim H~_{|s|-i-2}(D_s; GF(p)),
// D the Stanley-Reisner complex and D_s its restriction to the subset s.
// Other ideals are polarized first.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bei/error.hpp"
#include "bei/monomial.hpp"

namespace bei {

inline constexpr int kHochsterDefaultMaxVariables = 16;
inline constexpr int kHochsterHardMaxVariables = 24;

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
}

// Faces are bitmasks over the ground set {0..m-1}.
class SimplicialComplex {
 public:
  // The void complex (no faces at all).
  explicit SimplicialComplex(int ground = 0) : ground_(ground) { check_ground(ground); }

  SimplicialComplex(int ground, std::vector<std::uint32_t> facets) : ground_(ground), facets_(std::move(facets)) {
    check_ground(ground);
    const std::uint32_t all = ground == 32 ? ~0u : (1u << ground) - 1;
    for (auto f : facets_)
      if (f & ~all) throw PreconditionError("facet outside the ground set");
    std::sort(facets_.begin(), facets_.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a < b;
    });
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    std::vector<std::uint32_t> kept;
    for (auto f : facets_)
      if (std::none_of(kept.begin(), kept.end(), [f](std::uint32_t k) { return (f & ~k) == 0; })) kept.push_back(f);
    std::sort(kept.begin(), kept.end());
    facets_ = std::move(kept);
  }

  int ground() const { return ground_; }
  const std::vector<std::uint32_t>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  bool contains(std::uint32_t face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](std::uint32_t f) { return (face & ~f) == 0; });
  }

  // Dimension; -1 for {emptyset}, -2 for the void complex.
  int dimension() const {
    int d = -2;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  static void check_ground(int ground) {
    if (ground < 0 || ground > kMaxVariables) throw CapExceeded("simplicial complex: ground set too large");
  }

  int ground_;
  std::vector<std::uint32_t> facets_;
};

namespace detail {

inline std::uint32_t full_mask(int m) { return m >= 32 ? ~0u : (1u << m) - 1; }

// in_ideal[s] = 1 iff some generator support is contained in s.
inline std::vector<char> ideal_membership_table(int m, const std::vector<std::uint32_t>& supports) {
  std::vector<char> t(std::size_t{1} << m, 0);
  for (auto s : supports) t[s] = 1;
  for (std::uint32_t s = 1; s < t.size(); ++s) {
    if (t[s]) continue;
    for (std::uint32_t r = s; r; r &= r - 1)
      if (t[s & ~(r & -r)]) {
        t[s] = 1;
        break;
      }
  }
  return t;
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Sparse column over GF(p): (row, coefficient), rows ascending.
using SparseColumn = std::vector<std::pair<int, std::uint32_t>>;

inline void add_scaled(SparseColumn& target, const SparseColumn& src, std::uint64_t factor, std::uint32_t p,
                       SparseColumn& scratch) {
  scratch.clear();
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < src.size()) {
    if (b == src.size() || (a < target.size() && target[a].first < src[b].first)) {
      scratch.push_back(target[a++]);
    } else if (a == target.size() || src[b].first < target[a].first) {
      scratch.emplace_back(src[b].first, static_cast<std::uint32_t>(src[b].second * factor % p));
      ++b;
    } else {
      const auto v = static_cast<std::uint32_t>((target[a].second + src[b].second * factor) % p);
      if (v) scratch.emplace_back(target[a].first, v);
      ++a;
      ++b;
    }
  }
  target.swap(scratch);
}

// Reduced homology ranks H~_{-1}, ..., H~_{k-1} of the complex whose faces
// are the subsets t of `ground` with is_face(t). The empty set must be a face.
// `index` is scratch space addressed by face masks.
template <class IsFace>
std::vector<std::uint64_t> reduced_homology(std::uint32_t ground, IsFace is_face, std::uint32_t p,
                                            std::vector<int>& index) {
  const int k = std::popcount(ground);
  std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(k) + 1);
  std::uint32_t t = 0;
  for (;;) {
    if (is_face(t)) {
      auto& bucket = faces[std::popcount(t)];
      index[t] = static_cast<int>(bucket.size());
      bucket.push_back(t);
    }
    if (t == ground) break;
    t = (t - ground) & ground;
  }
  int top = k;
  while (top > 0 && faces[top].empty()) --top;

  // rank of the boundary map from size-s faces to size-(s-1) faces, s = top..1,
  // with clearing: a face that is a pivot of the map above reduces to zero.
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  std::vector<char> cleared, next_cleared;
  std::vector<int> pivot_owner;
  std::vector<SparseColumn> reduced;
  SparseColumn col, scratch;
  for (int s = top; s >= 1; --s) {
    const auto& cols = faces[s];
    const auto& rows = faces[s - 1];
    cleared.swap(next_cleared);
    cleared.resize(cols.size(), 0);
    next_cleared.assign(rows.size(), 0);
    pivot_owner.assign(rows.size(), -1);
    reduced.assign(cols.size(), {});
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cleared[c]) continue;
      col.clear();
      int sign_pos = 0;
      for (std::uint32_t bits = cols[c]; bits; bits &= bits - 1, ++sign_pos) {
        const std::uint32_t low = bits & (~bits + 1);
        const std::uint32_t coef = (sign_pos % 2 == 0 || p == 2) ? 1u : p - 1;
        col.emplace_back(index[cols[c] & ~low], coef);
      }
      std::sort(col.begin(), col.end());
      while (!col.empty()) {
        const int piv = col.back().first;
        const int owner = pivot_owner[piv];
        if (owner < 0) break;
        const SparseColumn& oc = reduced[owner];
        const std::uint64_t factor =
            static_cast<std::uint64_t>(p - col.back().second) * inverse_mod(oc.back().second, p) % p;
        add_scaled(col, oc, factor, p, scratch);
      }
      if (col.empty()) continue;
      pivot_owner[col.back().first] = static_cast<int>(c);
      next_cleared[col.back().first] = 1;
      reduced[c] = col;
      ++r;
    }
    rank[s] = r;
  }
  // faces[s] with s = j+1 gives H~_j, j = -1..k-1
  std::vector<std::uint64_t> h(static_cast<std::size_t>(k) + 1, 0);
  for (int s = 0; s <= top; ++s) {
    const std::uint64_t f = faces[s].size();
    const std::uint64_t out = s >= 1 ? rank[s] : 0;
    const std::uint64_t in = s + 1 <= top ? rank[s + 1] : 0;
    h[s] = f - out - in;
  }
  return h;
}

}  // namespace detail

// Reduced homology over GF(p): entry j is dim H~_{j-1}, for j-1 = -1..dim.
// The void complex has no homology (empty list).
inline std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& k, std::uint32_t p) {
  require_prime(p);
  if (k.is_void()) return {};
  if (k.ground() > kHochsterHardMaxVariables) throw CapExceeded("homology: ground set too large");
  std::uint32_t ground = 0;
  for (auto f : k.facets()) ground |= f;
  std::vector<int> index(std::size_t{1} << std::max(1u, static_cast<unsigned>(std::bit_width(ground))), -1);
  auto h = detail::reduced_homology(
      ground, [&](std::uint32_t t) { return k.contains(t); }, p, index);
  h.resize(static_cast<std::size_t>(k.dimension()) + 2);
  return h;
}

// Squarefree monomial ideal -> Stanley-Reisner complex on its variables.
inline SimplicialComplex stanley_reisner(const MonomialIdeal& I, int max_vars = kHochsterHardMaxVariables) {
  const int m = I.num_vars();
  if (m > max_vars) throw CapExceeded("Stanley-Reisner complex: too many variables");
  if (!I.is_squarefree()) throw PreconditionError("Stanley-Reisner complex needs a squarefree ideal");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.gens()) supports.push_back(g.support());
  if (std::find(supports.begin(), supports.end(), 0u) != supports.end()) return SimplicialComplex(m);
  const auto in_ideal = detail::ideal_membership_table(m, supports);
  std::vector<std::uint32_t> facets;
  const std::uint32_t all = detail::full_mask(m);
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (!in_ideal[s]) {
      bool maximal = true;
      for (std::uint32_t rest = all & ~s; rest; rest &= rest - 1)
        if (!in_ideal[s | (rest & (~rest + 1))]) {
          maximal = false;
          break;
        }
      if (maximal) facets.push_back(s);
    }
    if (s == all) break;
  }
  return SimplicialComplex(m, std::move(facets));
}

// Polarization: x_i^e becomes x_{i,1} * ... * x_{i,e}. Returns the squarefree
// ideal; the standard grading (total degree) is unchanged.
inline MonomialIdeal polarize(const MonomialIdeal& I) {
  std::vector<int> width(static_cast<std::size_t>(I.num_vars()), 0), offset(width.size(), 0);
  for (const auto& g : I.gens())
    for (int i = 0; i < I.num_vars(); ++i) width[i] = std::max(width[i], g[i]);
  int total = 0;
  for (std::size_t i = 0; i < width.size(); ++i) {
    offset[i] = total;
    total += std::max(width[i], 1);
  }
  if (total > kMaxVariables) throw CapExceeded("polarization: too many variables");
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    Monomial m;
    for (int i = 0; i < I.num_vars(); ++i)
      for (int e = 0; e < g[i]; ++e) m.set(offset[i] + e, 1);
    gens.push_back(m);
  }
  return MonomialIdeal(total, std::move(gens));
}

// Ranks beta_{i,j}(I) of the minimal graded free resolution of the ideal I.
class BettiTable {
 public:
  explicit BettiTable(std::uint32_t characteristic = 2) : characteristic_(characteristic) {}

  std::uint32_t characteristic() const { return characteristic_; }
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::uint64_t rank(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }
  void add(int i, int j, std::uint64_t r) {
    if (r) entries_[{i, j}] += r;
  }

  std::uint64_t total_rank(int i) const {
    std::uint64_t t = 0;
    for (const auto& [ij, r] : entries_)
      if (ij.first == i) t += r;
    return t;
  }

  int reg() const {
    if (empty()) throw PreconditionError("regularity of an empty Betti table");
    int r = entries_.begin()->first.second - entries_.begin()->first.first;
    for (const auto& [ij, v] : entries_) r = std::max(r, ij.second - ij.first);
    return r;
  }

  int pd() const {
    if (empty()) throw PreconditionError("projective dimension of an empty Betti table");
    int d = 0;
    for (const auto& [ij, v] : entries_) d = std::max(d, ij.first);
    return d;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

 private:
  std::uint32_t characteristic_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

struct BettiInvariants {
  int reg;
  int pd;
  std::uint64_t last_total_rank;
};

inline BettiInvariants invariants_from_betti(const BettiTable& b) {
  if (b.empty()) throw PreconditionError("invariants of an empty Betti table");
  return {b.reg(), b.pd(), b.total_rank(b.pd())};
}

// Macaulay2-style display: rows j-i, columns i.
inline std::string to_string(const BettiTable& b) {
  if (b.empty()) return "(zero ideal)\n";
  int lo = b.entries().begin()->first.second, hi = lo;
  for (const auto& [ij, r] : b.entries()) {
    lo = std::min(lo, ij.second - ij.first);
    hi = std::max(hi, ij.second - ij.first);
  }
  const int pd = b.pd();
  std::ostringstream out;
  out << "char " << b.characteristic() << "\n       ";
  for (int i = 0; i <= pd; ++i) out << std::string(6 - std::to_string(i).size(), ' ') << i;
  out << "\ntotal: ";
  for (int i = 0; i <= pd; ++i) {
    const auto s = std::to_string(b.total_rank(i));
    out << std::string(s.size() < 6 ? 6 - s.size() : 1, ' ') << s;
  }
  out << "\n";
  for (int row = lo; row <= hi; ++row) {
    const auto label = std::to_string(row) + ": ";
    out << std::string(label.size() < 7 ? 7 - label.size() : 0, ' ') << label;
    for (int i = 0; i <= pd; ++i) {
      const auto r = b.rank(i, row + i);
      const std::string s = r ? std::to_string(r) : ".";
      out << std::string(s.size() < 6 ? 6 - s.size() : 1, ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

namespace detail {

struct HochsterScan {
  int m;
  std::uint32_t p;
  std::vector<std::uint32_t> supports;
  std::vector<char> in_ideal;
  std::vector<int> index;
  std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> memo;

  // union of the generator supports inside s
  std::uint32_t closure(std::uint32_t s) const {
    std::uint32_t c = 0;
    for (auto g : supports)
      if ((g & ~s) == 0) c |= g;
    return c;
  }

  // Groups of s linked by generator supports inside s.
  std::vector<std::uint32_t> linked_parts(std::uint32_t s) const {
    std::vector<std::uint32_t> parts;
    for (auto g : supports) {
      if (g & ~s) continue;
      std::uint32_t merged = g;
      std::vector<std::uint32_t> keep;
      for (auto q : parts) {
        if (q & merged) merged |= q;
        else keep.push_back(q);
      }
      keep.push_back(merged);
      parts.swap(keep);
    }
    return parts;
  }

  // H~ of D_s as a polynomial: entry j is dim H~_{j-1}(D_s).
  std::vector<std::uint64_t> homology(std::uint32_t s) {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    const auto parts = linked_parts(s);
    std::vector<std::uint64_t> h;
    if (parts.size() > 1) {
      // D_s is the join of the D_part; shifted Poincare polynomials multiply.
      h = {1};
      for (auto q : parts) {
        const auto hq = homology(q);
        std::vector<std::uint64_t> prod(h.size() + hq.size() - 1, 0);
        for (std::size_t a = 0; a < h.size(); ++a)
          for (std::size_t b = 0; b < hq.size(); ++b) prod[a + b] += h[a] * hq[b];
        h = std::move(prod);
      }
    } else {
      const int k = std::popcount(s);
      std::uint64_t delta_faces = 0;
      for (std::uint32_t t = 0;; t = (t - s) & s) {
        delta_faces += !in_ideal[t];
        if (t == s) break;
      }
      const std::uint64_t dual_faces = (std::uint64_t{1} << k) - delta_faces;
      if (delta_faces <= dual_faces) {
        h = reduced_homology(
            s, [&](std::uint32_t t) { return !in_ideal[t]; }, p, index);
      } else {
        // Alexander dual inside s: H~_a(D_s) = H~_{k-a-3}(dual).
        const auto hd = reduced_homology(
            s, [&](std::uint32_t t) { return static_cast<bool>(in_ideal[s & ~t]); }, p, index);
        h.assign(static_cast<std::size_t>(k) + 1, 0);
        for (int a = -1; a <= k - 1; ++a) {
          const int b = k - a - 3;
          if (b >= -1 && b + 1 < static_cast<int>(hd.size())) h[a + 1] = hd[b + 1];
        }
      }
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    memo.emplace(s, h);
    return h;
  }
};

}  // namespace detail

// Betti table of I over GF(p). Non-squarefree input is polarized first.
inline BettiTable betti_table(const MonomialIdeal& I, std::uint32_t p = 2,
                              int max_vars = kHochsterDefaultMaxVariables) {
  require_prime(p);
  if (max_vars > kHochsterHardMaxVariables) throw CapExceeded("Hochster scan: cap above hard limit");
  if (!I.is_squarefree()) return betti_table(polarize(I), p, max_vars);
  BettiTable table(p);
  if (I.is_zero()) return table;

  // Work only on variables that occur in some generator; the others are
  // cone points and never contribute.
  std::uint32_t used = 0;
  for (const auto& g : I.gens()) used |= g.support();
  std::vector<int> compact(kMaxVariables, -1);
  int m = 0;
  for (int v = 0; v < kMaxVariables; ++v)
    if ((used >> v) & 1u) compact[v] = m++;
  if (m > max_vars) throw CapExceeded("Hochster scan: " + std::to_string(m) + " variables exceeds cap");

  detail::HochsterScan scan;
  scan.m = m;
  scan.p = p;
  for (const auto& g : I.gens()) {
    std::uint32_t s = 0;
    for (std::uint32_t bits = g.support(); bits; bits &= bits - 1) s |= 1u << compact[std::countr_zero(bits)];
    scan.supports.push_back(s);
  }
  if (scan.supports.front() == 0) {  // unit ideal
    table.add(0, 0, 1);
    return table;
  }
  scan.in_ideal = detail::ideal_membership_table(m, scan.supports);
  scan.index.assign(std::size_t{1} << m, -1);

  const std::uint32_t all = detail::full_mask(m);
  for (std::uint32_t s = 1; s <= all; ++s) {
    if (scan.in_ideal[s] && scan.closure(s) == s) {
      const auto h = scan.homology(s);
      const int k = std::popcount(s);
      for (std::size_t j = 0; j < h.size(); ++j) {
        // H~_{j-1}(D_s) feeds beta_{i,k} with k-i-2 = j-1
        const int i = k - static_cast<int>(j) - 1;
        if (h[j] && i >= 0) table.add(i, k, h[j]);
      }
    }
    if (s == all) break;
  }
  return table;
}

}  // namespace bei
