#pragma once

// Test-only helpers: monomial parsing and lead-term extraction.

#include <set>
#include <sstream>
#include <string>

#include "bei/groebner.hpp"

namespace bei::testing {

// "x1*y2^2" in the ring of an n-vertex graph; "z3" addresses variable 3
// directly. "1" is the unit monomial.
inline Monomial mono(const std::string& text, int n) {
  Monomial m;
  if (text == "1") return m;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    int e = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      e = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    const int idx = std::stoi(tok.substr(1));
    int var = 0;
    if (tok[0] == 'x') var = idx - 1;
    else if (tok[0] == 'y') var = n + idx - 1;
    else var = idx - 1;
    m.set(var, m[var] + e);
  }
  return m;
}

inline std::set<std::string> leads_of(const GroebnerBasis& basis, int n) {
  std::set<std::string> out;
  for (const auto& b : basis.elements()) out.insert(to_string(b.lead(), n));
  return out;
}

}  // namespace bei::testing
