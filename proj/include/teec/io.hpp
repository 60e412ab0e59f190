// JSON (de)serialization for instances and solutions.
#pragma once

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "teec/model.hpp"

namespace teec {

namespace detail {

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw error(msg);
}

}  // namespace detail

// Parse an instance document.  Edges need not be pre-sorted; user labels equal
// to 0 force a +1 shift of every label (0 is reserved for synthetic
// start-terminal edges) which is recorded in the result.
inline Instance load_instance(const nlohmann::json& doc) {
    using detail::require;
    require(doc.is_object(), "instance document must be a JSON object");
    require(doc.contains("directed") && doc["directed"].is_boolean(), "missing boolean field: directed");
    require(doc.contains("vertices") && doc["vertices"].is_array(), "missing array field: vertices");
    require(doc.contains("edges") && doc["edges"].is_array(), "missing array field: edges");

    Instance inst;
    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) {
        require(v.is_string(), "vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    std::map<std::string, int> index;
    for (int i = 0; i < (int)names.size(); ++i) {
        auto [it, fresh] = index.emplace(names[i], i);
        if (!fresh) throw error("duplicate vertex name: " + names[i]);
    }

    bool has_zero = false;
    std::vector<TemporalEdge> edges;
    std::set<std::string> ids;
    for (const auto& je : doc["edges"]) {
        require(je.is_object(), "edges must be objects");
        for (const char* f : {"id", "u", "v"})
            require(je.contains(f) && je[f].is_string(), std::string("edge missing string field: ") + f);
        require(je.contains("t") && je["t"].is_number_integer(), "edge missing integer field: t");
        TemporalEdge e;
        e.name = je["id"].get<std::string>();
        if (!ids.insert(e.name).second) throw error("duplicate edge id: " + e.name);
        auto lookup = [&](const std::string& s) {
            auto it = index.find(s);
            require(it != index.end(), "unknown vertex in edge " + e.name + ": " + s);
            return it->second;
        };
        e.u = lookup(je["u"].get<std::string>());
        e.v = lookup(je["v"].get<std::string>());
        e.t = je["t"].get<int>();
        require(e.t >= 0, "negative label on edge: " + e.name);
        if (e.t == 0) has_zero = true;
        edges.push_back(std::move(e));
    }
    if (has_zero) {
        inst.label_shift = 1;
        for (auto& e : edges) e.t += 1;
    }
    inst.graph = TemporalGraph(doc["directed"].get<bool>(), std::move(names), std::move(edges));

    if (doc.contains("kind") && !doc["kind"].is_null()) {
        std::string k = doc["kind"].get<std::string>();
        if (k == "path")
            inst.kind = Kind::Path;
        else if (k == "trail")
            inst.kind = Kind::Trail;
        else if (k == "walk")
            inst.kind = Kind::Walk;
        else
            throw error("unknown kind: " + k);
    }
    if (doc.contains("strict") && !doc["strict"].is_null())
        inst.strictness = doc["strict"].get<bool>() ? Strictness::Strict : Strictness::NonStrict;

    if (doc.contains("k") && !doc["k"].is_null()) {
        require(doc["k"].is_number_integer(), "k must be an integer or null");
        inst.k = doc["k"].get<int>();
        require(inst.k >= 0, "k must be non-negative");
        inst.budget = Budget::Decision;
    } else {
        inst.budget = Budget::Minimize;
    }

    bool has_starts = doc.contains("start_terminals") && !doc["start_terminals"].is_null();
    bool has_ends = doc.contains("end_terminals") && !doc["end_terminals"].is_null();
    require(has_starts == has_ends, "start_terminals and end_terminals must be given together");
    if (has_starts) {
        TerminalSpec ts;
        auto read = [&](const nlohmann::json& arr, std::vector<int>& out) {
            require(arr.is_array(), "terminals must be arrays of vertex names");
            for (const auto& s : arr) {
                require(s.is_string(), "terminals must be vertex names");
                auto id = inst.graph.find_vertex(s.get<std::string>());
                require(id.has_value(), "unknown terminal vertex: " + s.get<std::string>());
                out.push_back(*id);
            }
        };
        read(doc["start_terminals"], ts.starts);
        read(doc["end_terminals"], ts.ends);
        require(ts.starts.size() == ts.ends.size(), "terminal multisets must have equal size");
        if (inst.budget == Budget::Decision)
            require(inst.k == (int)ts.starts.size(), "k must equal the number of start terminals");
        else {
            inst.budget = Budget::Decision;
            inst.k = (int)ts.starts.size();
        }
        inst.terminals = std::move(ts);
    }
    return inst;
}

inline Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open instance file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw error("malformed JSON in " + path + ": " + e.what());
    }
    return load_instance(doc);
}

// Inverse of load_instance: emits original (unshifted) labels so that
// load(serialize(x)) == x.
inline nlohmann::json serialize_instance(const Instance& inst) {
    nlohmann::json doc;
    doc["directed"] = inst.graph.directed();
    doc["vertices"] = inst.graph.vertex_names();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : inst.graph.edges()) {
        edges.push_back({{"id", e.name},
                         {"u", inst.graph.vertex_name(e.u)},
                         {"v", inst.graph.vertex_name(e.v)},
                         {"t", e.t - inst.label_shift}});
    }
    doc["edges"] = std::move(edges);
    doc["kind"] = kind_name(inst.kind);
    doc["strict"] = inst.strictness == Strictness::Strict;
    if (inst.budget == Budget::Decision)
        doc["k"] = inst.k;
    else
        doc["k"] = nullptr;
    if (inst.terminals) {
        auto names = [&](const std::vector<int>& vs) {
            nlohmann::json arr = nlohmann::json::array();
            for (int v : vs) arr.push_back(inst.graph.vertex_name(v));
            return arr;
        };
        doc["start_terminals"] = names(inst.terminals->starts);
        doc["end_terminals"] = names(inst.terminals->ends);
    } else {
        doc["start_terminals"] = nullptr;
        doc["end_terminals"] = nullptr;
    }
    return doc;
}

inline nlohmann::json serialize_cover(const TemporalGraph& g, const Cover& cover) {
    nlohmann::json journeys = nlohmann::json::array();
    for (const auto& j : cover) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : j) {
            steps.push_back({{"edge", g.edge(s.edge).name},
                             {"from", g.vertex_name(s.from)},
                             {"to", g.vertex_name(s.to)}});
        }
        journeys.push_back(std::move(steps));
    }
    return nlohmann::json{{"journeys", std::move(journeys)}};
}

// Parse a solution document against its graph.
inline Cover load_cover(const TemporalGraph& g, const nlohmann::json& doc) {
    using detail::require;
    require(doc.is_object() && doc.contains("journeys") && doc["journeys"].is_array(),
            "solution document must contain a journeys array");
    std::map<std::string, int> by_name;
    for (int i = 0; i < g.m(); ++i) by_name[g.edge(i).name] = i;
    Cover cover;
    for (const auto& jj : doc["journeys"]) {
        require(jj.is_array(), "each journey must be an array of steps");
        Journey j;
        for (const auto& js : jj) {
            require(js.is_object(), "steps must be objects");
            for (const char* f : {"edge", "from", "to"})
                require(js.contains(f) && js[f].is_string(), std::string("step missing field: ") + f);
            Step s;
            auto it = by_name.find(js["edge"].get<std::string>());
            require(it != by_name.end(), "unknown edge in solution: " + js["edge"].get<std::string>());
            s.edge = it->second;
            auto from = g.find_vertex(js["from"].get<std::string>());
            auto to = g.find_vertex(js["to"].get<std::string>());
            require(from && to, "unknown vertex in solution step");
            s.from = *from;
            s.to = *to;
            j.push_back(s);
        }
        cover.push_back(std::move(j));
    }
    return cover;
}

inline Cover load_cover_file(const TemporalGraph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open solution file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw error("malformed JSON in " + path + ": " + e.what());
    }
    return load_cover(g, doc);
}

}  // namespace teec
