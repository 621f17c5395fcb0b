#include "wzk/json_io.hpp"

namespace wzk {

using nlohmann::json;

json weight_json(const Weight& w) {
  return json{{"type", to_string(w.type)}, {"coeffs", w.coeffs}};
}

json shape_json(const TensorShape& s) {
  return json{{"type", to_string(s.type)},
              {"p", s.p},
              {"k", s.k},
              {"i", s.i},
              {"case", std::string(to_string(s.shape))},
              {"lambda0", s.lambda0.coeffs},
              {"lambda1", s.lambda1.coeffs}};
}

json decision_json(const Decision& d) {
  json trace = json::array();
  for (const auto& [fact, value] : d.trace)
    trace.push_back(json{{"fact", fact}, {"value", value}});
  return json{{"has_zero_weight", d.has_zero_weight},
              {"case", d.case_label},
              {"trace", std::move(trace)}};
}

json weight_set_json(const DominantWeightSet& s) {
  json weights = json::array();
  for (const Weight& w : s.weights) weights.push_back(w.coeffs);
  return json{{"type", to_string(s.type)},
              {"weights", std::move(weights)},
              {"notes", s.notes}};
}

json sweep_report_json(const SweepReport& r) {
  return json{{"type", to_string(r.type)},
              {"p", r.p},
              {"instances", r.instances},
              {"zero_weight_count", r.zero_weight_count},
              {"shape_mismatches", r.shape_mismatches},
              {"oracle_mismatches", r.oracle_mismatches},
              {"direct_mismatches", r.direct_mismatches},
              {"pass", r.pass()},
              {"seconds", r.seconds},
              {"disagreements", r.examples}};
}

json check_report_json(const CheckReport& r) {
  return json{{"name", r.name},     {"pass", r.pass},
              {"checked", r.checked}, {"failed", r.failed},
              {"seconds", r.seconds}, {"failures", r.failures}};
}

}  // namespace wzk
