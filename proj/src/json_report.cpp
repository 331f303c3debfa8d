#include "certdom/json_report.hpp"

namespace certdom {

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const SolveResult& r) {
  Json j;
  j["value"] = r.value;
  j["certificate"] = to_json(r.certificate);
  j["proven"] = r.proven;
  j["stats"] = {
      {"nodes_expanded", r.stats.nodes_expanded},
      {"forced_vertices", r.stats.forced_vertices},
      {"components_split", r.stats.components_split},
      {"closed_form_hits", r.stats.closed_form_hits},
  };
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["gamma"] = r.gamma;
  j["gamma_cer"] = r.gamma_cer;
  j["s1_size"] = r.s1_size;
  j["s2_size"] = r.s2_size;
  j["strong_support_leaf_count"] = r.strong_support_leaf_count;
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds}});
  }
  j["bounds"] = bounds;
  Json eq;
  eq["holds"] = r.equality_gamma.holds;
  eq["searched"] = r.equality_gamma.searched;
  eq["lemma43_witness"] = r.equality_gamma.lemma43_witness ? to_json(*r.equality_gamma.lemma43_witness) : Json();
  j["equality_gamma"] = eq;
  return j;
}

Json to_json(const ModificationReport& r) {
  Json j;
  j["base_value"] = r.base_value;
  Json records = Json::array();
  for (const auto& m : r.records) {
    records.push_back({
        {"kind", to_string(m.kind)},
        {"detail", m.detail},
        {"new_value", m.new_value},
        {"delta", m.delta},
        {"bound", to_string(m.bound)},
    });
  }
  j["records"] = records;
  j["violations"] = r.violations();
  return j;
}

Json to_json(const NGReport& r) {
  Json j;
  j["n"] = r.n;
  j["gcer_g"] = r.gcer_g;
  j["gcer_gbar"] = r.gcer_gbar;
  j["sum"] = r.sum;
  j["product"] = r.product;
  j["regime"] = to_string(r.regime);
  j["corona_in_g_or_complement"] = r.corona_in_g_or_complement;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"theorem", c.theorem}, {"bound", c.bound}, {"holds", c.holds}});
  j["checks"] = checks;
  return j;
}

Json to_json(const DD2Pair& p) {
  Json j;
  j["d"] = to_json(p.d);
  j["d2"] = to_json(p.d2);
  return j;
}

Json to_json(const StructureClass& c) { return to_string(c); }

}  // namespace certdom
