#include "schubert/report_json.hpp"

namespace schubert {

namespace {

template <typename E>
Json expansion_json(const E& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms)
    terms.push_back({{"w", w.to_string()}, {"coefficient", to_string(c)}});
  return {{"basis", std::string(basis_name(e.basis))}, {"terms", std::move(terms)}};
}

Json terms_json(const std::vector<ReportTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms)
    out.push_back({{"label", t.label},
                   {"multiplier", t.multiplier.str()},
                   {"value", to_string(t.value)},
                   {"contribution", to_string(t.contribution())}});
  return out;
}

std::string_view comparison_name(Comparison c) {
  switch (c) {
    case Comparison::equal:
      return "equal";
    case Comparison::congruent:
      return "congruent";
    case Comparison::positive:
      return "positive";
  }
  return "?";
}

}  // namespace

Json to_json(const Expansion& e) { return expansion_json(e); }
Json to_json(const BetaExpansion& e) { return expansion_json(e); }

Json to_json(const RelationReport& r) {
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  Json out = {{"identity", r.identity},
              {"inputs", std::move(inputs)},
              {"lhs", terms_json(r.lhs)},
              {"rhs", terms_json(r.rhs)},
              {"lhs_total", to_string(r.lhs_total)},
              {"rhs_total", to_string(r.rhs_total)},
              {"comparison", std::string(comparison_name(r.comparison))}};
  if (!r.moduli.empty()) {
    Json moduli = Json::array();
    for (const auto& m : r.moduli) moduli.push_back(m.str());
    out["moduli"] = std::move(moduli);
  }
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p));
    out["parts"] = std::move(parts);
  }
  out["notes"] = r.notes;
  out["status"] = std::string(status_name(r.status));
  out["holds"] = r.holds();
  return out;
}

Json to_json(const Violation& v) {
  return {{"u", v.u.to_string()},
          {"v", v.v.to_string()},
          {"left", v.left.to_string()},
          {"right", v.right.to_string()},
          {"w", v.w.to_string()},
          {"coefficient", v.coefficient.str()},
          {"persists_under_1x", v.persists},
          {"expansion", to_json(v.expansion)}};
}

Json to_json(const PairResult& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"u", r.u.to_string()},
          {"v", r.v.to_string()},
          {"max_coefficient", r.max_coefficient.str()},
          {"terms", r.terms},
          {"pieri", r.pieri},
          {"violations", std::move(violations)}};
}

Json to_json(const SweepReport& r, bool include_timing) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  Json out = {{"conjecture", std::string(conjecture_name(r.conjecture))},
              {"n", r.n},
              {"candidates", r.candidates},
              {"unordered_pairs", r.unordered_pairs},
              {"pairs_examined", r.ordered_pairs},
              {"predicted_pairs", r.predicted_ordered_pairs()},
              {"pieri_pairs", r.pieri_pairs},
              {"max_coefficient", r.max_coefficient.str()},
              {"violations", std::move(violations)}};
  if (include_timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

}  // namespace schubert
