#include "singwords/json_io.hpp"

namespace singwords {

using nlohmann::json;

json json_envelope(const std::string& command) {
    json j;
    j["schema_version"] = kJsonSchemaVersion;
    j["command"] = command;
    return j;
}

json to_json(const Classification& c) {
    json j;
    j["verdict"] = c.verdict == Verdict::singular ? "singular" : "reversible";
    if (c.witness) {
        j["witness"] = {{"u", c.witness->u.text()},
                        {"v", c.witness->v.text()},
                        {"w", c.witness->w.text()}};
    }
    return j;
}

json to_json(const ExtremalResult& r) {
    json j;
    j["objective"] = objective_name(r.objective);
    j["value"] = r.value.to_string();
    j["arrangements"] = r.argext;
    j["unique"] = r.unique_up_to_reversal;
    return j;
}

json to_json(const MarkoffResult& r) {
    json j;
    j["verdict"] = r.holds ? "holds" : "violation";
    if (r.violation) {
        j["witness"] = {{"occurrence", r.violation->occurrence},
                        {"difference_index", r.violation->difference},
                        {"outward_left", std::string(1, r.violation->outward_left)},
                        {"outward_right", std::string(1, r.violation->outward_right)}};
    }
    return j;
}

static const char* ordering_name(Ordering o) {
    switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
    }
    return "?";
}

json to_json(const WindowVerdict& v) {
    json j;
    j["verdict"] = v.violation_found ? "definite-violation" : "no-violation-within";
    j["radius"] = v.radius;
    if (v.witness) {
        j["witness"] = {{"v_begin", v.witness->v_begin},
                        {"v_end", v.witness->v_end},
                        {"v_vs_reversal", ordering_name(v.witness->v_vs_reversal)},
                        {"u_vs_w", ordering_name(v.witness->u_vs_w)}};
    }
    return j;
}

static json to_json(const ConditionVerdict& c) {
    json j;
    j["verdict"] = c.holds ? "pass" : "fail";
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (c.surrogate) j["surrogate"] = true;
    return j;
}

json to_json(const HReport& r) {
    json j;
    j["h0"] = to_json(r.h0);
    j["h1"] = to_json(r.h1);
    j["h1"]["span"] = r.h1_span;
    j["h2"] = to_json(r.h2);
    j["h3"] = to_json(r.h3);
    j["h4"] = to_json(r.h4);
    j["h5"] = to_json(r.h5);
    j["interval_property"] = to_json(r.interval_property);
    j["idoc_hypothesis"] = to_json(r.idoc_hypothesis);
    return j;
}

json to_json(const ConjectureReport& r) {
    json j;
    j["vectors_checked"] = r.vectors_checked;
    json viol = json::array();
    for (const auto& v : r.violations) {
        viol.push_back({{"vector", {v.vector[0], v.vector[1], v.vector[2]}},
                        {"reason", v.reason}});
    }
    j["violations"] = viol;
    return j;
}

} // namespace singwords
