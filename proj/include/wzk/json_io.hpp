#pragma once

#include "json.hpp"
#include "wzk/criteria.hpp"
#include "wzk/oracle.hpp"
#include "wzk/sweep.hpp"

namespace wzk {

nlohmann::json weight_json(const Weight& w);
nlohmann::json shape_json(const TensorShape& s);
nlohmann::json decision_json(const Decision& d);
nlohmann::json weight_set_json(const DominantWeightSet& s);
nlohmann::json sweep_report_json(const SweepReport& r);
nlohmann::json check_report_json(const CheckReport& r);

}  // namespace wzk
