#pragma once

#include <string>

#include <json.hpp>

#include "turan/construct.hpp"
#include "turan/embedding.hpp"
#include "turan/formulas.hpp"
#include "turan/forest.hpp"
#include "turan/graph.hpp"
#include "turan/oracle.hpp"

namespace turan {

// {"n": int, "edges": [[u,v],...]} with u < v, lexicographically sorted.
inline nlohmann::json graph_to_json(const SmallGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline SmallGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph json: expected {\"n\": ..., \"edges\": [...]}");
  SmallGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("graph json: bad edge entry");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

inline nlohmann::json evaluation_to_json(const TuranEvaluation& ev) {
  nlohmann::json j = {{"value", ev.value},
                      {"theorem", theorem_name(ev.theorem)},
                      {"c", ev.c},
                      {"asymptotic_caveat", ev.asymptotic_caveat}};
  if (ev.argmax_i) {
    j["argmax_i"] = *ev.argmax_i;
    j["maximizing_indices"] = ev.maximizing_indices;
  }
  if (!ev.f_doubled.empty()) j["f_doubled"] = ev.f_doubled;
  if (!ev.attained.empty()) {
    nlohmann::json att = nlohmann::json::array();
    for (auto v : ev.attained) att.push_back(v == Order4Variant::G1 ? "g1" : "g2");
    j["attained"] = std::move(att);
    j["uniqueness"] = ev.uniqueness;
  }
  return j;
}

inline nlohmann::json descriptor_to_json(const ConstructionDescriptor& d) {
  return {{"family", family_name(d.family)},
          {"n", d.n},
          {"universal_count", d.universal_count},
          {"remainder", remainder_name(d.remainder_kind)},
          {"remainder_degree", d.remainder_degree},
          {"parameters", d.parameters}};
}

inline nlohmann::json embedding_to_json(const ForestSpec& spec, const Embedding& emb) {
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t i = 0; i < emb.assignments.size(); ++i) {
    const auto& c = spec.components()[i];
    comps.push_back({{"component", (c.kind == TreeKind::Path ? "P" : "S") +
                                       std::to_string(c.size)},
                     {"vertices", emb.assignments[i]}});
  }
  return comps;
}

// Oracle schema: payload fields are byte-stable for a fixed config; all
// run-dependent counters live under "stats".
inline nlohmann::json oracle_result_to_json(const ForestSpec& spec, const OracleResult& res) {
  nlohmann::json extremal = nlohmann::json::array();
  for (const auto& [label, graph] : res.extremal) extremal.push_back(encode_graph6(graph));
  nlohmann::json j = {{"spec", render_forest(spec)},
                      {"n", res.n},
                      {"max_edges", res.max_edges},
                      {"extremal", std::move(extremal)},
                      {"timed_out", res.timed_out}};
  j["stats"] = {{"nodes_explored", res.nodes_explored},
                {"pruned_by_bound", res.pruned_by_bound},
                {"pruned_by_containment", res.pruned_by_containment},
                {"elapsed_seconds", res.elapsed_seconds}};
  return j;
}

inline nlohmann::json verification_to_json(const ForestSpec& spec,
                                           const VerificationReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows) {
    nlohmann::json row = {{"n", r.n},
                          {"formula", r.formula_value},
                          {"construction", r.construction_edges},
                          {"verdict", verdict_name(r.verdict)}};
    if (r.oracle_value) row["oracle"] = *r.oracle_value;
    if (r.construction_unique) row["construction_unique"] = *r.construction_unique;
    if (r.timed_out) row["timed_out"] = true;
    rows.push_back(std::move(row));
  }
  nlohmann::json j = {{"spec", render_forest(spec)}, {"rows", std::move(rows)}};
  if (rep.detected_threshold) {
    j["detected_threshold"] = *rep.detected_threshold;
    j["equality_interval"] = {*rep.detected_threshold, rep.oracle_scan_limit};
  }
  return j;
}

inline nlohmann::json conjecture_to_json(const ConjectureReport& rep) {
  return {{"spec", render_forest(rep.forest)},
          {"e_F", rep.e_f},
          {"k", rep.k},
          {"witness_n", rep.witness_n},
          {"witness_edges", rep.witness.edge_count()},
          {"witness_graph6", encode_graph6(rep.witness)},
          {"avg_degree", {rep.avg_degree_num, rep.avg_degree_den}}};
}

}  // namespace turan
