#include "fuzztop/serialize.hpp"

#include "fuzztop/errors.hpp"

namespace fuzztop {

json to_json(const Grade& g) { return g.str(); }

json to_json(const FuzzySet& a) {
    json out = json::array();
    for (const auto& g : a.grades()) out.push_back(g.str());
    return out;
}

json to_json(const FuzzyPoint& p) { return {{"element", p.element}, {"degree", p.degree.str()}}; }

json to_json(const MapVerdict& v) {
    json out = {{"holds", v.holds}};
    if (v.witness) {
        out["witness"] = {{"open", to_json(v.witness->open)}, {"transformed", to_json(v.witness->transformed)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const MapReport& r) {
    return {{"open_map", r.open_map.holds},
            {"continuous", r.continuous.holds},
            {"witnesses", {{"open_map", to_json(r.open_map)["witness"]},
                           {"continuous", to_json(r.continuous)["witness"]}}}};
}

namespace {

json pair_json(const std::optional<std::pair<FuzzySet, FuzzySet>>& p) {
    if (!p) return nullptr;
    return json::array({to_json(p->first), to_json(p->second)});
}

}  // namespace

json to_json(const PropertyReport& r) {
    json t0 = json::object();
    json t0_witness = json::object();
    for (auto mode : kT0Modes) {
        const auto& v = r.t0_in(mode);
        t0[std::string(to_string(mode))] = v.holds;
        t0_witness[std::string(to_string(mode))] =
            v.unseparated ? json::array({to_json(v.unseparated->first), to_json(v.unseparated->second)})
                          : json(nullptr);
    }
    json subcover = json::array();
    for (const auto& u : r.compact.subcover) subcover.push_back(to_json(u));
    json regular_witness = nullptr;
    if (r.regular.failure) {
        regular_witness = {{"element", r.regular.failure->first}, {"closed", to_json(r.regular.failure->second)}};
    }
    return {{"compact", r.compact.holds},
            {"connected", r.connected.holds},
            {"t0", t0},
            {"regular", r.regular.holds},
            {"normal", r.normal.holds},
            {"lindelof", r.lindelof.holds},
            {"witnesses",
             {{"connected", pair_json(r.connected.disconnection)},
              {"t0", t0_witness},
              {"regular", regular_witness},
              {"normal", pair_json(r.normal.unseparated)}}},
            {"justifications",
             {{"compact", {{"reason", r.compact.justification}, {"subcover", subcover}}},
              {"lindelof", r.lindelof.justification}}}};
}

json to_json(const EqualityVerdict& v) {
    return {{"equal", v.equal},
            {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
            {"witness_side", v.witness ? json(v.witness_side) : json(nullptr)},
            {"reason", v.reason}};
}

json to_json(const ExplicitTopology& t) {
    json opens = json::array();
    for (const auto& u : t.opens()) opens.push_back(to_json(u));
    return {{"provenance", std::string(to_string(t.provenance()))}, {"size", t.size()}, {"opens", opens}};
}

FuzzySet fuzzy_set_from_json(const json& j) {
    if (!j.is_array()) throw InputError("fuzzy set must be a JSON array of grade strings");
    std::vector<Grade> grades;
    for (const auto& g : j) {
        if (!g.is_string()) throw InputError("grades must be strings such as \"1/2\"");
        grades.push_back(Grade::parse(g.get<std::string>()));
    }
    return FuzzySet(std::move(grades));
}

namespace {

std::size_t as_index(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw InputError(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

}  // namespace

InstanceFile parse_instance(const json& doc) {
    if (!doc.is_object()) throw InputError("instance must be a JSON object");
    if (!doc.contains("carrier") || !doc.contains("f")) {
        throw InputError("instance needs \"carrier\" and \"f\"");
    }
    const auto& c = doc["carrier"];
    std::optional<Carrier> carrier;
    if (c.is_array()) {
        std::vector<std::string> labels;
        for (const auto& l : c) {
            if (!l.is_string()) throw InputError("carrier labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        carrier.emplace(std::move(labels));
    } else {
        carrier.emplace(as_index(c, "carrier size"));
    }
    const auto& fj = doc["f"];
    if (!fj.is_array()) throw InputError("\"f\" must be an array of carrier indices");
    std::vector<std::size_t> map;
    for (const auto& y : fj) map.push_back(as_index(y, "f entry"));
    InstanceFile out{EndoFunction(std::move(*carrier), std::move(map)), std::nullopt, std::nullopt};
    if (doc.contains("window")) {
        out.window = as_index(doc["window"], "window");
        if (*out.window == 0) throw InputError("window must be at least 1");
    }
    if (doc.contains("tau3")) {
        const auto& t = doc["tau3"];
        if (!t.is_object() || !t.contains("x0") || !t.contains("k")) {
            throw InputError("\"tau3\" must be {\"x0\": int, \"k\": int}");
        }
        const auto x0 = as_index(t["x0"], "tau3.x0");
        const auto k = as_index(t["k"], "tau3.k");
        if (x0 >= out.f.size()) throw InputError("tau3.x0 outside carrier");
        if (k == 0) throw InputError("tau3.k must be positive");
        if (!profile(out.f).injective) {
            throw PreconditionError("tau3 requires a one-to-one map; f = " + out.f.str() + " is not injective");
        }
        out.tau3 = std::pair{x0, static_cast<unsigned>(k)};
    }
    return out;
}

InstanceFile parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("instance is not valid JSON: ") + e.what());
    }
    return parse_instance(doc);
}

}  // namespace fuzztop
