#pragma once

// JSON bindings for the wire formats: assignments, labeled examples, pointed
// Kripke models, bases, clones and classifier verdicts.

#include <json.hpp>

#include "clonekit/classifier.hpp"
#include "clonekit/teachlearn.hpp"

namespace clonekit {

using nlohmann::json;

inline json to_json(const assignment& a) {
    json j = json::object();
    for (const auto& [k, v] : a) j[k] = v;
    return j;
}

inline assignment assignment_from_json(const json& j) {
    expect(j.is_object(), errc::bad_input, "assignment must be a JSON object");
    assignment a;
    for (auto it = j.begin(); it != j.end(); ++it) {
        expect(it.value().is_number_integer() || it.value().is_boolean(), errc::bad_input,
               "assignment values must be bits");
        a[it.key()] = it.value().is_boolean() ? (it.value().get<bool>() ? 1 : 0)
                                              : (it.value().get<int>() ? 1 : 0);
    }
    return a;
}

inline json to_json(const named_clone& c) {
    json j = {{"family", family_name(c.family)}};
    if (c.degree) j["degree"] = *c.degree;
    return j;
}

inline json to_json(const pointed_model& pm) {
    json rel = json::array();
    const auto& m = pm.model;
    for (std::size_t u = 0; u < m.worlds.size(); ++u)
        for (int v : m.succ[u]) rel.push_back({m.worlds[u], m.worlds[v]});
    json val = json::object();
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
        json vars = json::array();
        for (const auto& p : m.val[w]) vars.push_back(p);
        val[m.worlds[w]] = vars;
    }
    return {{"worlds", m.worlds}, {"rel", rel}, {"val", val}, {"point", pm.world}};
}

inline pointed_model pointed_model_from_json(const json& j) {
    expect(j.is_object() && j.contains("worlds") && j.contains("rel"), errc::bad_input,
           "model needs worlds and rel");
    std::vector<std::string> worlds = j.at("worlds").get<std::vector<std::string>>();
    auto index = [&](const std::string& w) {
        for (std::size_t i = 0; i < worlds.size(); ++i)
            if (worlds[i] == w) return static_cast<int>(i);
        fail(errc::unknown_world, "model references unknown world '" + w + "'");
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("rel")) {
        expect(e.is_array() && e.size() == 2, errc::bad_input, "rel entries are pairs");
        edges.push_back({index(e[0].get<std::string>()), index(e[1].get<std::string>())});
    }
    std::vector<std::set<std::string>> val(worlds.size());
    if (j.contains("val"))
        for (auto it = j.at("val").begin(); it != j.at("val").end(); ++it) {
            int w = index(it.key());
            for (const auto& p : it.value()) val[w].insert(p.get<std::string>());
        }
    pointed_model pm{kripke_model::make(worlds, edges, val),
                     j.contains("point") ? j.at("point").get<std::string>()
                                         : worlds.front()};
    pm.model.world_index(pm.world);   // validates
    return pm;
}

inline json to_json(const labeled_example& ex) {
    if (ex.kind == labeled_example::payload::prop)
        return {{"assignment", to_json(ex.v)}, {"label", ex.label}};
    return {{"model", to_json(ex.pm)}, {"label", ex.label}};
}

inline json to_json(const teaching_set& ts) {
    json j = json::array();
    for (const auto& ex : ts) j.push_back(to_json(ex));
    return j;
}

inline labeled_example example_from_json(const json& j) {
    expect(j.is_object() && j.contains("label"), errc::bad_input,
           "example needs a label");
    int label = j.at("label").get<int>();
    if (j.contains("assignment"))
        return labeled_example::of(assignment_from_json(j.at("assignment")), label);
    expect(j.contains("model"), errc::bad_input, "example needs assignment or model");
    return labeled_example::of(pointed_model_from_json(j.at("model")), label);
}

inline teaching_set teaching_set_from_json(const json& j) {
    expect(j.is_array(), errc::bad_input, "teaching set must be a JSON array");
    teaching_set ts;
    for (const auto& e : j) ts.push_back(example_from_json(e));
    return ts;
}

inline json to_json(const verdict& v) {
    json j = {{"class", cclass_name(v.cls)},
              {"completeness", completeness_name(v.comp)},
              {"citation", v.citation}};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline json to_json(const sat_result& r) {
    json j = {{"status", r.satisfiable ? "satisfiable" : "unsatisfiable"},
              {"method", r.method}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

// Basis text: comma-separated catalog names, threshold(n,m), or arity:hex
// function literals.
inline basis parse_basis(const std::string& text, const config& cfg = default_config()) {
    basis b;
    std::size_t i = 0;
    int literal_count = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        int depth = 0;
        while (j < text.size() && (depth > 0 || text[j] != ',')) {
            if (text[j] == '(') ++depth;
            if (text[j] == ')') --depth;
            ++j;
        }
        std::string item = text.substr(i, j - i);
        while (!item.empty() && item.back() == ' ') item.pop_back();
        i = j;
        if (item.empty()) continue;
        if (item.find(':') != std::string::npos) {
            b.add(parse_fn_literal(item, cfg), "f" + std::to_string(literal_count++));
        } else if (auto open = item.find('('); open != std::string::npos) {
            std::string name = item.substr(0, open);
            expect(item.back() == ')', errc::syntax_error, "expected ')' in '" + item + "'");
            std::string params = item.substr(open + 1, item.size() - open - 2);
            auto comma = params.find(',');
            expect(comma != std::string::npos, errc::syntax_error,
                   "threshold needs two parameters");
            int n = 0, m = 0;
            try {
                n = std::stoi(params.substr(0, comma));
                m = std::stoi(params.substr(comma + 1));
            } catch (...) {
                fail(errc::syntax_error, "bad threshold parameters in '" + item + "'");
            }
            b.add(named(name, n, m, cfg), "T" + std::to_string(n) + "_" + std::to_string(m));
        } else {
            b.add(named(item, cfg), item);
        }
    }
    return b;
}

inline json basis_to_json(const basis& b) {
    json j = json::array();
    for (const auto& e : b.entries)
        j.push_back({{"name", e.name}, {"fn", print_fn_literal(e.fn)}});
    return j;
}

} // namespace clonekit
