// Core temporal graph model: a static vertex set plus time-labeled (multi)edges,
// kept sorted by label (the edgestream).  Journeys, covers and the problem
// instance wrapper live here too.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace teec {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a solver or oracle exceeds a configured resource guard.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { Path, Trail, Walk };
enum class Strictness { Strict, NonStrict };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Path: return "path";
        case Kind::Trail: return "trail";
        default: return "walk";
    }
}

inline const char* strictness_name(Strictness s) {
    return s == Strictness::Strict ? "strict" : "non-strict";
}

// One temporal edge.  `u`,`v` are dense vertex indices; for undirected graphs
// the pair is stored as given but means {u,v}.  `name` is the external id.
struct TemporalEdge {
    int u = -1;
    int v = -1;
    int t = 0;
    std::string name;
};

class TemporalGraph {
public:
    TemporalGraph() = default;

    TemporalGraph(bool directed, std::vector<std::string> vertex_names,
                  std::vector<TemporalEdge> edges)
        : directed_(directed), vertex_names_(std::move(vertex_names)), edges_(std::move(edges)) {
        for (int i = 0; i < (int)vertex_names_.size(); ++i) {
            auto [it, fresh] = vertex_index_.emplace(vertex_names_[i], i);
            if (!fresh) throw error("duplicate vertex name: " + vertex_names_[i]);
        }
        for (auto& e : edges_) {
            if (e.u < 0 || e.u >= n() || e.v < 0 || e.v >= n())
                throw error("edge endpoint out of range: " + e.name);
            if (e.u == e.v) throw error("self-loop rejected: " + e.name);
            if (e.t < 0) throw error("negative label on edge: " + e.name);
        }
        // Edgestream order: stable sort keeps input order among equal labels.
        std::stable_sort(edges_.begin(), edges_.end(),
                         [](const TemporalEdge& a, const TemporalEdge& b) { return a.t < b.t; });
        for (const auto& e : edges_) tmax_ = std::max(tmax_, e.t);
        rebuild_groups();
    }

    bool directed() const { return directed_; }
    int n() const { return (int)vertex_names_.size(); }
    int m() const { return (int)edges_.size(); }
    int tmax() const { return tmax_; }

    const std::vector<TemporalEdge>& edges() const { return edges_; }
    const TemporalEdge& edge(int i) const { return edges_[i]; }
    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }

    std::optional<int> find_vertex(const std::string& name) const {
        auto it = vertex_index_.find(name);
        if (it == vertex_index_.end()) return std::nullopt;
        return it->second;
    }

    // Label groups: [begin,end) index ranges into the edgestream, one per
    // distinct label, ascending.
    struct Group {
        int label;
        int begin;
        int end;
    };
    const std::vector<Group>& groups() const { return groups_; }

    // Edge indices of the snapshot at exactly label t.
    std::vector<int> snapshot(int t) const {
        std::vector<int> out;
        for (const auto& g : groups_) {
            if (g.label != t) continue;
            for (int i = g.begin; i < g.end; ++i) out.push_back(i);
        }
        return out;
    }

private:
    void rebuild_groups() {
        groups_.clear();
        int i = 0;
        while (i < m()) {
            int j = i;
            while (j < m() && edges_[j].t == edges_[i].t) ++j;
            groups_.push_back({edges_[i].t, i, j});
            i = j;
        }
    }

    bool directed_ = false;
    std::vector<std::string> vertex_names_;
    std::map<std::string, int> vertex_index_;
    std::vector<TemporalEdge> edges_;
    std::vector<Group> groups_;
    int tmax_ = 0;
};

// Temporal degree bookkeeping, built in one pass over the edgestream.
// Prefix/suffix counts answer deg_le / deg_gt by binary search.
class DegreeProfile {
public:
    explicit DegreeProfile(const TemporalGraph& g) : g_(&g) {
        int n = g.n();
        deg_.assign(n, 0);
        din_.assign(n, 0);
        dout_.assign(n, 0);
        labels_.assign(n, {});
        inc_.assign(n, {});
        for (int i = 0; i < g.m(); ++i) {
            const auto& e = g.edge(i);
            deg_[e.u]++;
            deg_[e.v]++;
            dout_[e.u]++;
            din_[e.v]++;
            labels_[e.u].push_back(e.t);
            labels_[e.v].push_back(e.t);
            inc_[e.u].push_back(i);
            inc_[e.v].push_back(i);
        }
    }

    int deg(int v) const { return deg_[v]; }
    int deg_in(int v) const { return din_[v]; }
    int deg_out(int v) const { return dout_[v]; }

    // Multiset of labels on edges incident to v, ascending.
    const std::vector<int>& labels(int v) const { return labels_[v]; }

    // Number of incident edges with label <= t.
    int deg_le(int v, int t) const {
        const auto& L = labels_[v];
        return (int)(std::upper_bound(L.begin(), L.end(), t) - L.begin());
    }
    // Number of incident edges with label > t.
    int deg_gt(int v, int t) const { return deg_[v] - deg_le(v, t); }

    // Edge indices incident to v, edgestream order.
    const std::vector<int>& incident(int v) const { return inc_[v]; }

    // Neighbors of v at exactly label t (with multiplicity).
    std::vector<int> neighbors_at(int v, int t) const {
        std::vector<int> out;
        for (int i : inc_[v]) {
            const auto& e = g_->edge(i);
            if (e.t != t) continue;
            out.push_back(e.u == v ? e.v : e.u);
        }
        return out;
    }

private:
    const TemporalGraph* g_;
    std::vector<int> deg_, din_, dout_;
    std::vector<std::vector<int>> labels_;
    std::vector<std::vector<int>> inc_;
};

// A graph is proper when no vertex has two incident edges at the same label.
inline bool is_proper(const TemporalGraph& g) {
    std::vector<std::pair<int, int>> seen;  // (vertex, label)
    seen.reserve(2 * g.m());
    for (const auto& e : g.edges()) {
        seen.emplace_back(e.u, e.t);
        seen.emplace_back(e.v, e.t);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// One step of a journey: edge index plus the traversal orientation.
// For directed graphs from/to always equal the edge's (u,v).
struct Step {
    int edge;
    int from;
    int to;
};

using Journey = std::vector<Step>;
using Cover = std::vector<Journey>;

struct TerminalSpec {
    std::vector<int> starts;  // multiset of vertex indices
    std::vector<int> ends;
};

enum class Budget { Decision, Minimize };

// A full problem instance: graph + variant + budget, as read from disk.
struct Instance {
    TemporalGraph graph;
    Kind kind = Kind::Walk;
    Strictness strictness = Strictness::NonStrict;
    Budget budget = Budget::Decision;
    int k = 1;  // meaningful when budget == Decision
    std::optional<TerminalSpec> terminals;
    // Labels were shifted up by this amount at load time (a user edge carried
    // label 0, which is reserved for synthetic start-terminal edges).
    int label_shift = 0;
};

}  // namespace teec
