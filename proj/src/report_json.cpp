// Copyright 2026 The distgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distgraph/report_json.hpp"

#include <stdexcept>
#include <string>

#include "distgraph/graph6.hpp"

namespace distgraph {

Json to_json(const ExtendedNat& x) {
  if (x.is_infinite()) return "infinity";
  return x.value();
}

Json to_json(const MetricsReport& r) {
  Json hist = Json::object();
  for (const auto& [deg, count] : r.degree_histogram) hist[std::to_string(deg)] = count;
  return Json{{"diameter", to_json(r.diameter)},
              {"girth", to_json(r.girth)},
              {"triangle_count", r.triangle_count},
              {"max_degree", r.max_degree},
              {"degree_histogram", hist},
              {"component_count", r.component_count},
              {"two_connected", r.two_connected}};
}

Json to_json(const PatternReport& r) {
  Json witnesses = Json::object();
  for (const auto& [key, vs] : r.witnesses) witnesses[key] = vs;
  return Json{{"has_c4_subgraph", r.has_c4_subgraph},
              {"has_diamond", r.has_diamond},
              {"triangles_pairwise_disjoint", r.triangles_pairwise_disjoint},
              {"has_induced_claw", r.has_induced_claw},
              {"has_c5c3_subgraph", r.has_c5c3_subgraph},
              {"witnesses", witnesses}};
}

Json to_json(const EdgeIdentityReport& r) {
  return Json{{"e_line", r.e_line},
              {"e_gamma2", r.e_gamma2},
              {"e", r.e},
              {"triangles", r.triangles},
              {"pairs_total", r.pairs_total},
              {"codegree_nonadjacent_sum", r.codegree_nonadjacent_sum},
              {"far_pairs", r.far_pairs},
              {"c4_free", r.c4_free},
              {"general_form_rhs", r.general_form_rhs()},
              {"general_form_holds", r.general_form_holds()},
              {"corrected_rhs", r.corrected_rhs()},
              {"corrected_form_holds", r.corrected_form_holds()},
              {"c4_free_form_holds", r.c4_free_form_holds()}};
}

Json to_json(const SrgParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

Json to_json(const SrgHitCheck& c) {
  return Json{{"params", to_json(c.params)},
              {"t", c.t ? Json(*c.t) : Json(nullptr)},
              {"parameters_match", c.parameters_match},
              {"self_complementary", c.self_complementary},
              {"order_sum_of_two_squares", c.order_sum_of_two_squares}};
}

Json to_json(const SearchFilter& f) {
  return Json{{"connected_only", f.connected_only},
              {"min_n", f.min_n},
              {"regular_degree", f.regular_degree ? Json(*f.regular_degree) : Json(nullptr)},
              {"require_c4_free", f.require_c4_free},
              {"require_diamond_free", f.require_diamond_free},
              {"require_disjoint_triangles", f.require_disjoint_triangles}};
}

namespace {

Json certificate_body(const SearchCertificate& c) {
  return Json{{"n", c.n},
              {"filter", to_json(c.filter)},
              {"classes_scanned", c.classes_scanned},
              {"hits", c.hits},
              {"degenerate_hits", c.degenerate_hits},
              {"wall_time", c.wall_time},
              {"shard_count", c.shard_count},
              {"tool_version", c.tool_version}};
}

Json report_body(const VerificationReport& r) {
  Json per_n = Json::array();
  for (const ClassCount& c : r.classes_per_n) {
    per_n.push_back(Json{{"n", c.n}, {"classes", c.classes}});
  }
  Json srg = Json::array();
  for (const auto& [hit, check] : r.strongly_regular_hits) {
    srg.push_back(Json{{"graph6", hit}, {"check", to_json(check)}});
  }
  return Json{{"claim_id", r.claim_id},
              {"kind", report_kind_name(r.kind)},
              {"max_n", r.max_n},
              {"status", status_name(r.status)},
              {"expected_hits", r.expected_hits},
              {"actual_hits", r.actual_hits},
              {"counterexamples", r.counterexamples},
              {"missing_hits", r.missing_hits},
              {"classes_per_n", per_n},
              {"c4_free_identity_checked", r.c4_free_identity_checked},
              {"c4_free_identity_failures", r.c4_free_identity_failures},
              {"strongly_regular_hits", srg},
              {"certificate", certificate_body(r.certificate)}};
}

}  // namespace

Json certificate_json(const SearchCertificate& c) {
  Json j{{"schema", kCertificateSchema}};
  j.update(certificate_body(c));
  return j;
}

Json verification_json(const VerificationReport& r) {
  Json j{{"schema", kVerificationSchema}};
  j.update(report_body(r));
  return j;
}

Json conjecture_json(const std::pair<VerificationReport, VerificationReport>& r) {
  return Json{{"schema", kConjectureSchema},
              {"kind", "evidence"},
              {"note", "exhaustive scan up to max_n; evidence, not proof"},
              {"reports", Json::array({report_body(r.first), report_body(r.second)})}};
}

Json cayley_json(const DistanceIdentityReport& r, const GroupTable& g,
                 const ConnectionSet& s) {
  return Json{{"schema", kCayleySchema},
              {"group_order", g.order()},
              {"connection_set", s.elements()},
              {"connection_set_used", r.connection_set_used},
              {"holds", r.holds},
              {"distance_graph", encode_graph6(r.distance_graph)},
              {"predicted", encode_graph6(r.predicted)}};
}

Json analysis_json(const Graph& g) {
  const SelfDistanceResult self = is_self_two_distance(g);
  const Graph g2 = distance_graph(g, 2);
  const auto srg = srg_parameters(g);
  Json self_json{{"holds", self.holds},
                 {"degenerate", self.holds && g.edge_count() == 0},
                 {"gamma2", encode_graph6(g2)},
                 {"witness", self.witness ? Json(*self.witness) : Json(nullptr)}};
  return Json{{"schema", kAnalysisSchema},
              {"graph6", encode_graph6(g)},
              {"n", g.order()},
              {"edges", g.edge_count()},
              {"metrics", to_json(metrics(g))},
              {"patterns", to_json(pattern_report(g))},
              {"self_two_distance", self_json},
              {"srg_parameters", srg ? to_json(*srg) : Json(nullptr)},
              {"edge_identity", to_json(edge_identity_report(g))}};
}

SearchFilter filter_from_json(const Json& j) {
  SearchFilter f;
  f.connected_only = j.at("connected_only").get<bool>();
  f.min_n = j.at("min_n").get<int>();
  if (!j.at("regular_degree").is_null()) f.regular_degree = j.at("regular_degree").get<int>();
  f.require_c4_free = j.at("require_c4_free").get<bool>();
  f.require_diamond_free = j.at("require_diamond_free").get<bool>();
  f.require_disjoint_triangles = j.at("require_disjoint_triangles").get<bool>();
  return f;
}

SearchCertificate certificate_from_json(const Json& j) {
  if (j.value("schema", std::string()) != kCertificateSchema) {
    throw std::invalid_argument("not a search certificate document");
  }
  SearchCertificate c;
  c.n = j.at("n").get<int>();
  c.filter = filter_from_json(j.at("filter"));
  c.classes_scanned = j.at("classes_scanned").get<std::uint64_t>();
  c.hits = j.at("hits").get<std::vector<std::string>>();
  c.degenerate_hits = j.at("degenerate_hits").get<std::vector<std::string>>();
  c.wall_time = j.at("wall_time").get<double>();
  c.shard_count = j.at("shard_count").get<int>();
  c.tool_version = j.at("tool_version").get<std::string>();
  return c;
}

Json without_timing(Json j) {
  if (j.is_object()) {
    j.erase("wall_time");
    j.erase("shard_count");
  }
  if (j.is_object() || j.is_array()) {
    for (auto it = j.begin(); it != j.end(); ++it) *it = without_timing(*it);
  }
  return j;
}

}  // namespace distgraph
