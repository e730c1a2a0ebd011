#pragma once

// Monomials over at most 32 variables, term orders, and monomial ideals.
//
// For the ring of a graph on n vertices, variable index i-1 is x_i and
// n+i-1 is y_i.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "bei/error.hpp"

namespace bei {

inline constexpr int kMaxVariables = 32;

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int index) {
    Monomial m;
    m.set(index, 1);
    return m;
  }

  int operator[](int index) const { return exp_[index]; }
  void set(int index, int e) {
    if (index < 0 || index >= kMaxVariables) throw PreconditionError("variable index out of range");
    if (e < 0 || e > 255) throw PreconditionError("exponent out of range");
    deg_ = static_cast<std::uint16_t>(deg_ - exp_[index] + e);
    exp_[index] = static_cast<std::uint8_t>(e);
  }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < kMaxVariables; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  bool is_squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](std::uint8_t e) { return e <= 1; });
  }

  // Bitmask of variables with positive exponent.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < kMaxVariables; ++i)
      if (exp_[i]) s |= std::uint32_t{1} << i;
    return s;
  }

  static Monomial from_support(std::uint32_t mask) {
    Monomial m;
    for (int i = 0; i < kMaxVariables; ++i)
      if ((mask >> i) & 1u) m.set(i, 1);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVariables; ++i) {
      const int e = a.exp_[i] + b.exp_[i];
      if (e > 255) throw CapExceeded("monomial exponent overflow");
      m.exp_[i] = static_cast<std::uint8_t>(e);
    }
    m.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
    return m;
  }

  // a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVariables; ++i) m.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
    m.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    int d = 0;
    for (int i = 0; i < kMaxVariables; ++i) {
      m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      d += m.exp_[i];
    }
    m.deg_ = static_cast<std::uint16_t>(d);
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    int d = 0;
    for (int i = 0; i < kMaxVariables; ++i) {
      m.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
      d += m.exp_[i];
    }
    m.deg_ = static_cast<std::uint16_t>(d);
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVariables; ++i)
      if (a.exp_[i] && b.exp_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

  const std::array<std::uint8_t, kMaxVariables>& exponents() const { return exp_; }

 private:
  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Variable names: x1..xn, y1..yn when `vertices` > 0, otherwise z1..zm.
inline std::string variable_name(int index, int vertices) {
  if (vertices > 0)
    return index < vertices ? "x" + std::to_string(index + 1) : "y" + std::to_string(index - vertices + 1);
  return "z" + std::to_string(index + 1);
}

inline std::string to_string(const Monomial& m, int vertices = 0) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += variable_name(i, vertices);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

inline int x_var(int vertex, int /*n*/) { return vertex - 1; }
inline int y_var(int vertex, int n) { return n + vertex - 1; }

enum class OrderKind { lex, degrevlex };

// Variable precedence. x_block_first: x1 > ... > xn > y1 > ... > yn.
// interleaved: x1 > y1 > x2 > y2 > ...
enum class Precedence { x_block_first, interleaved };

class TermOrder {
 public:
  TermOrder(OrderKind kind, int num_vars, Precedence prec = Precedence::x_block_first)
      : kind_(kind), num_vars_(num_vars), prec_(prec) {
    if (num_vars < 0 || num_vars > kMaxVariables) throw CapExceeded("term order: too many variables");
    if (prec == Precedence::interleaved && num_vars % 2 != 0)
      throw PreconditionError("interleaved precedence needs an even variable count");
    for (int r = 0; r < num_vars; ++r) {
      if (prec == Precedence::x_block_first) {
        rank_to_var_[r] = static_cast<std::uint8_t>(r);
      } else {
        const int half = num_vars / 2;
        rank_to_var_[r] = static_cast<std::uint8_t>(r % 2 == 0 ? r / 2 : half + r / 2);
      }
    }
  }

  // Order for the ring of a graph on n vertices.
  static TermOrder for_graph(OrderKind kind, int n, Precedence prec = Precedence::x_block_first) {
    return TermOrder(kind, 2 * n, prec);
  }

  OrderKind kind() const { return kind_; }
  int num_vars() const { return num_vars_; }
  Precedence precedence() const { return prec_; }

  // <0, 0, >0 as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == OrderKind::lex) {
      for (int r = 0; r < num_vars_; ++r) {
        const int v = rank_to_var_[r];
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      }
      return 0;
    }
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int r = num_vars_ - 1; r >= 0; --r) {
      const int v = rank_to_var_[r];
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  OrderKind kind_;
  int num_vars_;
  Precedence prec_;
  std::array<std::uint8_t, kMaxVariables> rank_to_var_{};
};

inline std::string to_string(OrderKind k) { return k == OrderKind::lex ? "lex" : "degrevlex"; }

// All monomials of total degree d in the first `num_vars` variables, in
// lexicographic exponent order.
inline std::vector<Monomial> monomials_of_degree(int num_vars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == num_vars - 1 || num_vars == 0) {
      if (num_vars == 0) {
        if (left == 0) out.push_back(cur);
        return;
      }
      cur.set(var, left);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.set(var, e);
      rec(var + 1, left - e);
    }
    cur.set(var, 0);
  };
  rec(0, d);
  return out;
}

inline std::uint64_t binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Number of monomials of degree d in m variables.
inline std::uint64_t monomial_count(int m, int d) { return d < 0 ? 0 : binomial_coefficient(m + d - 1, d); }

// Monomial ideal with an inclusion-minimal generating set.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int num_vars, std::vector<Monomial> gens) : num_vars_(num_vars), gens_(std::move(gens)) {
    if (num_vars < 0 || num_vars > kMaxVariables) throw CapExceeded("monomial ideal: too many variables");
    minimalize();
  }

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
  }

  int max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  // Number of degree-d monomials lying in the ideal.
  std::uint64_t count_in_degree(int d) const {
    std::uint64_t c = 0;
    for (const Monomial& m : monomials_of_degree(num_vars_, d)) c += contains(m);
    return c;
  }

  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return MonomialIdeal(std::max(a.num_vars_, b.num_vars_), std::move(g));
  }

  // Generator sets compare as sets (the ideal is determined by them).
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.num_vars_ == b.num_vars_ && a.gens_ == b.gens_;
  }

 private:
  void minimalize() {
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.exponents() > b.exponents();
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    std::vector<Monomial> kept;
    for (const Monomial& g : gens_) {
      const bool redundant =
          std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
      if (!redundant) kept.push_back(g);
    }
    gens_ = std::move(kept);
  }

  int num_vars_ = 0;
  std::vector<Monomial> gens_;
};

inline std::string to_string(const MonomialIdeal& I, int vertices = 0) {
  std::string out = "(";
  for (std::size_t i = 0; i < I.gens().size(); ++i) {
    if (i) out += ", ";
    out += to_string(I.gens()[i], vertices);
  }
  return out + ")";
}

}  // namespace bei
