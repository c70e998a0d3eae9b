#include "tsibc/json_io.hpp"

#include "tsibc/errors.hpp"

namespace tsibc {

Json ext_time_to_json(ExtTime t) {
    if (t.finite()) return t.value();
    return t.str();
}

Json vertex_to_json(const Scg& g, const TemporalVertex& v) {
    Json j;
    j["series"] = g.name(v.series);
    j["time"] = v.time;
    return j;
}

Json path_to_json(const Scg& g, const PathF& p) {
    Json out = Json::array();
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
        Json j = vertex_to_json(g, p.vertices[k]);
        if (k < p.arrows.size()) j["arrow"] = p.arrows[k] == Arrow::Backward ? "<-" : "->";
        out.push_back(std::move(j));
    }
    return out;
}

Json witness_to_json(const Scg& g, const Witness& w) {
    Json j;
    j["kind"] = w.kind == Witness::Kind::Fork ? "fork" : "directed";
    j["rule"] = w.rule;
    j["intervention"] = vertex_to_json(g, w.intervention);
    j["effect"] = vertex_to_json(g, w.effect);
    if (w.fork) j["fork"] = vertex_to_json(g, *w.fork);
    if (!w.sketch.empty()) j["path"] = path_to_json(g, w.sketch);
    return j;
}

Json adjustment_to_json(const Scg& g, const AdjustmentSet& a) {
    static const char* kinds[] = {"complement-of-cd", "A0", "A1", "A-gamma"};
    Json j;
    j["kind"] = kinds[static_cast<int>(a.kind)];
    if (a.kind == AdjustmentKind::Agamma) j["gamma"] = a.gamma;
    j["description"] = describe_adjustment(g, a);
    Json parts = Json::array();
    for (const auto& part : a.parts) {
        Json p;
        Json last = Json::object();
        for (std::size_t s = 0; s < part.last.size(); ++s)
            last[g.name(static_cast<SeriesIdx>(s))] = ext_time_to_json(part.last[s]);
        p["last"] = std::move(last);
        Json ex = Json::array();
        for (const auto& v : part.exclusions) ex.push_back(vertex_to_json(g, v));
        p["exclusions"] = std::move(ex);
        parts.push_back(std::move(p));
    }
    j["parts"] = std::move(parts);
    return j;
}

Json verdict_to_json(const Scg& g, const IbcVerdict& v) {
    Json j;
    j["identifiable"] = v.identifiable;
    j["assumptions"] = Json{{"consistency", v.consistency}};
    Json pruned = Json::array();
    for (const auto& p : v.pruned) pruned.push_back(vertex_to_json(g, p));
    j["pruned"] = std::move(pruned);
    if (v.witness) j["witness"] = witness_to_json(g, *v.witness);
    if (v.adjustment) j["adjustment"] = adjustment_to_json(g, *v.adjustment);
    if (v.formula) j["formula"] = *v.formula;
    return j;
}

Json thresholds_to_json(const Scg& g, const NcProfile& p) {
    Json j = Json::object();
    for (std::size_t s = 0; s < p.series_count(); ++s)
        j[g.name(static_cast<SeriesIdx>(s))] = ext_time_to_json(p.threshold(static_cast<SeriesIdx>(s)));
    return j;
}

Json accessibility_to_json(const Scg& g, const AccessibilityProfile& a) {
    Json j;
    Json anchors = Json::array();
    for (const auto& v : a.anchors) anchors.push_back(vertex_to_json(g, v));
    j["anchors"] = std::move(anchors);
    if (a.forbidden)
        j["forbidden"] = Json{{"from", g.name(a.forbidden->from)}, {"to", g.name(a.forbidden->to)}};
    Json ceilings = Json::object();
    for (std::size_t s = 0; s < a.ceilings.size(); ++s)
        ceilings[g.name(static_cast<SeriesIdx>(s))] = ext_time_to_json(a.ceilings[s]);
    j["ceilings"] = std::move(ceilings);
    return j;
}

Json ftcg_to_json(const Ftcg& f) {
    Json j;
    j["window"] = Json::array({f.window().lo, f.window().hi});
    Json edges = Json::array();
    for (const auto& [a, b] : f.edges()) edges.push_back(Json::array({f.label(a), f.label(b)}));
    j["edges"] = std::move(edges);
    return j;
}

Json query_to_json(const Scg& g, const CausalQuery& q) {
    Json j;
    Json xs = Json::array(), ys = Json::array();
    for (const auto& x : q.interventions) xs.push_back(vertex_to_json(g, x));
    for (const auto& y : q.effects) ys.push_back(vertex_to_json(g, y));
    j["interventions"] = std::move(xs);
    j["effects"] = std::move(ys);
    return j;
}

namespace {

TemporalVertex entry_vertex(const Scg& g, const Json& e) {
    if (e.is_string()) return parse_temporal(g, e.get<std::string>());
    if (e.is_object() && e.contains("series") && e.contains("time") && e["series"].is_string() &&
        e["time"].is_number_integer())
        return {g.index(e["series"].get<std::string>()), e["time"].get<std::int64_t>()};
    throw InvalidQuery("query entries must be \"S@T\" strings or {series, time} objects");
}

}  // namespace

CausalQuery query_from_json(const Scg& g, const Json& j) {
    if (!j.is_object()) throw InvalidQuery("query must be a JSON object");
    CausalQuery q;
    for (const char* key : {"interventions", "effects"}) {
        if (!j.contains(key)) continue;
        if (!j[key].is_array()) throw InvalidQuery(std::string(key) + " must be an array");
        auto& dst = std::string_view(key) == "effects" ? q.effects : q.interventions;
        for (const auto& e : j[key]) dst.push_back(entry_vertex(g, e));
    }
    q.validate(g);
    return q;
}

CausalQuery parse_query_file(const Scg& g, const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, e.what());
    }
    return query_from_json(g, j);
}

}  // namespace tsibc
