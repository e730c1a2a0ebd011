#pragma once

// JSON views of the result types (nlohmann::json).

#include "json.hpp"

#include "bei/classify.hpp"
#include "bei/graph.hpp"
#include "bei/monres.hpp"
#include "bei/oracle.hpp"
#include "bei/primes.hpp"

namespace bei {

using Json = nlohmann::ordered_json;

// Regularity values: integers, "no-edges", or null for unknown.
inline Json reg_json(std::optional<int> r) {
  if (!r) return nullptr;
  if (*r == kRegNoEdges) return "no-edges";
  return *r;
}

inline Json vertex_set_json(VertexSet s) { return s.to_vector(); }

inline Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", edges}};
}

inline Json to_json(const JoinCertificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"vertices", vertex_set_json(c.vertices)}};
  if (c.kind == JoinCertificate::Kind::Leaf) {
    j["block"] = c.block ? Json(to_string(*c.block)) : Json(nullptr);
    j["shape"] = to_string(c.shape);
  } else {
    Json kids = Json::array();
    for (const auto& k : c.children) kids.push_back(to_json(k));
    j["children"] = kids;
  }
  j["predicted_reg"] = reg_json(c.predicted_reg);
  return j;
}

inline Json to_json(const CutSet& c) {
  Json parts = Json::array();
  for (VertexSet p : c.parts) parts.push_back(vertex_set_json(p));
  return {{"T", vertex_set_json(c.t)}, {"parts", parts}};
}

inline Json to_json(const PrimeDescription& p) {
  Json parts = Json::array();
  for (VertexSet c : p.cliques) parts.push_back(vertex_set_json(c));
  return {{"T", vertex_set_json(p.variables)}, {"parts", parts}};
}

inline Json to_json(const BettiTable& b) {
  Json entries = Json::array();
  for (const auto& [ij, r] : b.entries()) entries.push_back({ij.first, ij.second, r});
  Json j{{"characteristic", b.characteristic()}, {"entries", entries}};
  j["reg"] = b.empty() ? Json(nullptr) : Json(b.reg());
  j["pd"] = b.empty() ? Json(nullptr) : Json(b.pd());
  return j;
}

inline Json to_json(const RegularityResult& r) {
  Json initial = Json::array();
  for (const auto& [p, v] : r.initial) initial.push_back({{"characteristic", p}, {"reg", reg_json(v)}});
  return {{"value", reg_json(r.value)},
          {"status", to_string(r.status)},
          {"method", to_string(r.method)},
          {"structural", reg_json(r.structural)},
          {"initial", initial},
          {"order", to_string(r.order)},
          {"consistent", r.consistent},
          {"certificate", to_json(r.certificate)}};
}

inline Json to_json(const CmGorensteinResult& r) {
  return {{"cm_reg3", r.cm_reg3}, {"extremal_gorenstein", r.extremal_gorenstein}, {"pattern", r.pattern}};
}

inline Json to_json(const JoinCutsetReport& r) {
  const auto sets = [](const std::vector<VertexSet>& v) {
    Json a = Json::array();
    for (VertexSet s : v) a.push_back(vertex_set_json(s));
    return a;
  };
  return {{"equal", r.equal},
          {"direct", sets(r.direct)},
          {"formula", sets(r.formula)},
          {"only_direct", sets(r.only_direct)},
          {"only_formula", sets(r.only_formula)}};
}

inline Json to_json(const VerificationReport& r) {
  return {{"claim", r.claim},
          {"instances", r.instances},
          {"passed", r.passed()},
          {"failures", r.failures},
          {"notes", r.notes},
          {"runtime_seconds", r.runtime_seconds}};
}

}  // namespace bei
