#pragma once

#include <string>

#include "json.hpp"
#include "tsibc/accessibility.hpp"
#include "tsibc/cone.hpp"
#include "tsibc/decider.hpp"
#include "tsibc/oracle.hpp"
#include "tsibc/query.hpp"
#include "tsibc/scg.hpp"

namespace tsibc {

using Json = nlohmann::ordered_json;

Json ext_time_to_json(ExtTime t);
Json vertex_to_json(const Scg& g, const TemporalVertex& v);
Json path_to_json(const Scg& g, const PathF& p);
Json witness_to_json(const Scg& g, const Witness& w);
Json adjustment_to_json(const Scg& g, const AdjustmentSet& a);
Json verdict_to_json(const Scg& g, const IbcVerdict& v);
Json thresholds_to_json(const Scg& g, const NcProfile& p);
Json accessibility_to_json(const Scg& g, const AccessibilityProfile& a);
Json ftcg_to_json(const Ftcg& f);

// {"interventions": [...], "effects": [...]}; entries are "S@T" strings or
// {"series": S, "time": T} objects.
Json query_to_json(const Scg& g, const CausalQuery& q);
CausalQuery query_from_json(const Scg& g, const Json& j);
CausalQuery parse_query_file(const Scg& g, const std::string& text);

}  // namespace tsibc
