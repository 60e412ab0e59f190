#pragma once

// Single-journey (k = 1) exact cover.  Strict journeys use at most one edge
// per label, so the whole edgestream must chain up in label order.  Non-strict
// journeys traverse each snapshot as an Eulerian trail; snapshots are glued by
// propagating the set of endpoints the journey can stand on between labels.

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "teec/flow_euler.hpp"
#include "teec/model.hpp"

namespace teec {

namespace detail {

// Eulerian-trail classification of one snapshot.
struct SnapClass {
    bool ok = false;
    bool circuit = false;                        // start anywhere on support, end = start
    std::vector<int> support;                    // vertices with incident edges, ascending
    std::vector<std::pair<int, int>> startend;   // forced (start,end) pairs when !circuit
};

inline SnapClass classify_snapshot(const TemporalGraph& g, int begin, int end) {
    SnapClass sc;
    std::set<int> verts;
    for (int i = begin; i < end; ++i) {
        verts.insert(g.edge(i).u);
        verts.insert(g.edge(i).v);
    }
    sc.support.assign(verts.begin(), verts.end());

    // Weak connectivity over the support.
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> adj(g.n());
    for (int i = begin; i < end; ++i) {
        adj[g.edge(i).u].push_back(g.edge(i).v);
        adj[g.edge(i).v].push_back(g.edge(i).u);
    }
    std::vector<int> stack{sc.support.front()};
    comp[sc.support.front()] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (comp[w] < 0) {
                comp[w] = 0;
                stack.push_back(w);
            }
    }
    for (int v : sc.support)
        if (comp[v] < 0) return sc;  // disconnected: no single trail

    if (g.directed()) {
        std::vector<int> excess(g.n(), 0);
        for (int i = begin; i < end; ++i) {
            excess[g.edge(i).u] += 1;
            excess[g.edge(i).v] -= 1;
        }
        int src = -1, snk = -1;
        for (int v : sc.support) {
            if (excess[v] == 0) continue;
            if (excess[v] == 1 && src < 0)
                src = v;
            else if (excess[v] == -1 && snk < 0)
                snk = v;
            else
                return sc;
        }
        if (src < 0 && snk < 0) {
            sc.circuit = true;
        } else if (src >= 0 && snk >= 0) {
            sc.startend.push_back({src, snk});
        } else {
            return sc;
        }
    } else {
        std::vector<int> deg(g.n(), 0);
        for (int i = begin; i < end; ++i) {
            deg[g.edge(i).u] += 1;
            deg[g.edge(i).v] += 1;
        }
        std::vector<int> odd;
        for (int v : sc.support)
            if (deg[v] % 2) odd.push_back(v);
        if (odd.empty()) {
            sc.circuit = true;
        } else if (odd.size() == 2) {
            sc.startend.push_back({odd[0], odd[1]});
            sc.startend.push_back({odd[1], odd[0]});
        } else {
            return sc;
        }
    }
    sc.ok = true;
    return sc;
}

// Snapshot as a simple path graph: returns the traversal orders that visit
// every edge while touching each vertex once, or empty if it is not a path.
inline std::vector<std::vector<Step>> snapshot_path_traversals(const TemporalGraph& g,
                                                               int begin, int end) {
    std::vector<std::vector<Step>> out;
    std::set<int> verts;
    std::vector<std::vector<std::pair<int, int>>> adj(g.n());  // (edge, other)
    for (int i = begin; i < end; ++i) {
        const auto& e = g.edge(i);
        verts.insert(e.u);
        verts.insert(e.v);
        adj[e.u].push_back({i, e.v});
        adj[e.v].push_back({i, e.u});
    }
    if ((int)verts.size() != end - begin + 1) return out;  // cycle or disconnected
    std::vector<int> ends;
    for (int v : verts) {
        if (adj[v].size() > 2) return out;
        if (adj[v].size() == 1) ends.push_back(v);
    }
    if (end - begin >= 1 && ends.size() != 2) return out;  // disconnected pieces

    for (int head : ends) {
        std::vector<Step> steps;
        int at = head, prev_edge = -1;
        bool legal = true;
        while ((int)steps.size() < end - begin) {
            int nxt = -1, to = -1;
            for (auto [ei, w] : adj[at])
                if (ei != prev_edge) {
                    nxt = ei;
                    to = w;
                    break;
                }
            if (nxt < 0) {
                legal = false;
                break;
            }
            if (g.directed() && g.edge(nxt).u != at) legal = false;  // against arrow
            steps.push_back({nxt, at, to});
            prev_edge = nxt;
            at = to;
        }
        if (legal && (int)steps.size() == end - begin) out.push_back(std::move(steps));
    }
    // A disconnected snapshot with exactly two degree-1 vertices (path + cycle)
    // fails the vertex-count test above, so reaching here means both
    // traversals cover everything.
    return out;
}

struct K1Branch {
    int endpoint = -1;
    bool started = false;
    std::set<int> visited;
    std::set<std::pair<int, int>> statics;
    Journey steps;
};

inline std::pair<int, int> static_key(const TemporalGraph& g, const TemporalEdge& e) {
    if (g.directed()) return {e.u, e.v};
    return {std::min(e.u, e.v), std::max(e.u, e.v)};
}

// Try to extend a branch by one edge in the given orientation.
inline bool k1_extend(const TemporalGraph& g, Kind kind, K1Branch& b, int ei, int from, int to) {
    const auto& e = g.edge(ei);
    if (b.started && b.endpoint != from) return false;
    if (kind == Kind::Path) {
        if (!b.started) b.visited.insert(from);
        if (b.visited.count(to)) return false;
        b.visited.insert(to);
    } else if (kind == Kind::Trail) {
        auto key = static_key(g, e);
        if (b.statics.count(key)) return false;
        b.statics.insert(key);
    }
    b.steps.push_back({ei, from, to});
    b.endpoint = to;
    b.started = true;
    return true;
}

inline std::optional<Cover> k1_strict(const TemporalGraph& g, Kind kind,
                                      const std::optional<TerminalSpec>& term) {
    for (const auto& gr : g.groups())
        if (gr.end - gr.begin >= 2) return std::nullopt;  // two edges would share a label

    std::vector<K1Branch> branches(1);
    if (term) {
        branches[0].started = true;
        branches[0].endpoint = term->starts[0];
        if (kind == Kind::Path) branches[0].visited.insert(term->starts[0]);
    }
    for (const auto& gr : g.groups()) {
        int ei = gr.begin;
        const auto& e = g.edge(ei);
        std::vector<K1Branch> next;
        for (const auto& b : branches) {
            std::vector<std::pair<int, int>> orients{{e.u, e.v}};
            if (!g.directed()) orients.push_back({e.v, e.u});
            for (auto [from, to] : orients) {
                K1Branch nb = b;
                if (k1_extend(g, kind, nb, ei, from, to)) next.push_back(std::move(nb));
            }
        }
        branches = std::move(next);
        if (branches.empty()) return std::nullopt;
    }
    for (const auto& b : branches) {
        if (!b.started) continue;  // m == 0 with a terminal journey: handled below
        if (term && b.endpoint != term->ends[0]) continue;
        return Cover{b.steps};
    }
    return std::nullopt;
}

inline std::optional<Cover> k1_nonstrict_walk(const TemporalGraph& g,
                                              const std::optional<TerminalSpec>& term) {
    const auto& groups = g.groups();
    std::vector<SnapClass> cls;
    cls.reserve(groups.size());
    for (const auto& gr : groups) {
        cls.push_back(classify_snapshot(g, gr.begin, gr.end));
        if (!cls.back().ok) return std::nullopt;
    }

    // Forward endpoint sets.  reach[i] = possible positions after group i.
    std::vector<std::set<int>> reach(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& sc = cls[i];
        auto admit = [&](int start) -> bool {
            if (i == 0) return !term || start == term->starts[0];
            return reach[i - 1].count(start) > 0;
        };
        if (sc.circuit) {
            for (int v : sc.support)
                if (admit(v)) reach[i].insert(v);
        } else {
            for (auto [s, e] : sc.startend)
                if (admit(s)) reach[i].insert(e);
        }
        if (reach[i].empty()) return std::nullopt;
    }

    // Pick a final endpoint and chain starts backwards.
    int chosen = -1;
    if (term) {
        if (!reach.back().count(term->ends[0])) return std::nullopt;
        chosen = term->ends[0];
    } else {
        chosen = *reach.back().begin();
    }
    std::vector<int> start_of(groups.size(), -1);
    for (int i = (int)groups.size() - 1; i >= 0; --i) {
        const auto& sc = cls[i];
        if (sc.circuit) {
            start_of[i] = chosen;
        } else {
            for (auto [s, e] : sc.startend) {
                if (e != chosen) continue;
                if (i == 0 ? (!term || s == term->starts[0]) : reach[i - 1].count(s) > 0) {
                    start_of[i] = s;
                    break;
                }
            }
        }
        chosen = start_of[i];
    }

    std::vector<MEdge> medges;
    medges.reserve(g.m());
    for (const auto& e : g.edges()) medges.push_back({e.u, e.v});
    Journey walk;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        std::vector<int> which;
        for (int j = groups[i].begin; j < groups[i].end; ++j) which.push_back(j);
        auto trail = eulerian_from((int)g.n(), medges, which, g.directed(), start_of[i]);
        if (!trail) throw error("internal: snapshot classified trailable but trail failed");
        for (const auto& st : *trail) walk.push_back(st);
    }
    return Cover{std::move(walk)};
}

inline std::optional<Cover> k1_nonstrict_path(const TemporalGraph& g,
                                              const std::optional<TerminalSpec>& term) {
    std::vector<K1Branch> branches(1);
    if (term) {
        branches[0].started = true;
        branches[0].endpoint = term->starts[0];
        branches[0].visited.insert(term->starts[0]);
    }
    for (const auto& gr : g.groups()) {
        auto traversals = snapshot_path_traversals(g, gr.begin, gr.end);
        if (traversals.empty()) return std::nullopt;
        std::vector<K1Branch> next;
        for (const auto& b : branches) {
            for (const auto& tr : traversals) {
                int head = tr.front().from;
                if (b.started && head != b.endpoint) continue;
                K1Branch nb = b;
                bool fits = true;
                if (!nb.started) nb.visited.insert(head);
                for (const auto& st : tr) {
                    if (nb.visited.count(st.to)) {
                        fits = false;
                        break;
                    }
                    nb.visited.insert(st.to);
                }
                if (!fits) continue;
                for (const auto& st : tr) nb.steps.push_back(st);
                nb.endpoint = tr.back().to;
                nb.started = true;
                next.push_back(std::move(nb));
            }
        }
        branches = std::move(next);
        if (branches.empty()) return std::nullopt;
    }
    for (const auto& b : branches) {
        if (!b.started) continue;
        if (term && b.endpoint != term->ends[0]) continue;
        return Cover{b.steps};
    }
    return std::nullopt;
}

}  // namespace detail

// Decide whether one journey of the given kind covers every edge, and build it.
// With terminals the journey must run from starts[0] to ends[0].
inline std::optional<Cover> solve_k1(const TemporalGraph& g, Kind kind, Strictness strictness,
                                     const std::optional<TerminalSpec>& term = std::nullopt) {
    if (term && term->starts.size() != 1) throw error("solve_k1: expected one terminal pair");
    if (g.m() == 0) {
        if (term) return std::nullopt;  // a terminal journey may not stay empty
        return Cover{};
    }
    if (kind == Kind::Trail) {
        // A trail may use each static edge once, and a full cover uses them all.
        std::set<std::pair<int, int>> seen;
        for (const auto& e : g.edges())
            if (!seen.insert(detail::static_key(g, e)).second) return std::nullopt;
    }
    if (strictness == Strictness::Strict) return detail::k1_strict(g, kind, term);
    switch (kind) {
        case Kind::Path:
            return detail::k1_nonstrict_path(g, term);
        case Kind::Trail:
        case Kind::Walk:
            return detail::k1_nonstrict_walk(g, term);
    }
    return std::nullopt;
}

}  // namespace teec
