// Static multigraph primitives: Hierholzer traversal (cycle splicing) and
// unit-capacity edge-disjoint paths via BFS augmentation.
#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "teec/model.hpp"

namespace teec {

// A static multigraph edge; interpreted as a->b when the graph is directed.
struct MEdge {
    int a = -1;
    int b = -1;
};

// Hierholzer's algorithm over the edge subset `which`, starting at `start`.
// Produces a trail using every listed edge exactly once, or nullopt when no
// such trail from `start` exists.  Steps reference original edge indices.
inline std::optional<std::vector<Step>> eulerian_from(int n, const std::vector<MEdge>& edges,
                                                      const std::vector<int>& which, bool directed,
                                                      int start) {
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge index, other end)
    for (int ei : which) {
        adj[edges[ei].a].push_back({ei, edges[ei].b});
        if (!directed) adj[edges[ei].b].push_back({ei, edges[ei].a});
    }
    std::vector<int> cursor(n, 0);
    std::vector<bool> used(edges.size(), false);

    // Stack of (vertex, edge taken to reach it); retreating emits edges.
    std::vector<std::pair<int, int>> stack{{start, -1}};
    std::vector<std::pair<int, int>> emitted;  // (vertex reached, via edge)
    while (!stack.empty()) {
        int v = stack.back().first;
        bool advanced = false;
        while (cursor[v] < (int)adj[v].size()) {
            auto [ei, w] = adj[v][cursor[v]];
            if (used[ei]) {
                cursor[v]++;
                continue;
            }
            used[ei] = true;
            cursor[v]++;
            stack.push_back({w, ei});
            advanced = true;
            break;
        }
        if (!advanced) {
            emitted.push_back(stack.back());
            stack.pop_back();
        }
    }

    std::vector<Step> out;
    out.reserve(which.size());
    // emitted is the trail reversed; the final element is the start marker.
    for (int i = (int)emitted.size() - 1; i >= 1; --i) {
        int from = emitted[i].first;
        int to = emitted[i - 1].first;
        int ei = emitted[i - 1].second;
        out.push_back({ei, from, to});
    }
    if ((int)out.size() != (int)which.size()) return std::nullopt;
    // Validate the chain: misuse (wrong start vertex, disconnected subset)
    // surfaces as a broken or incomplete sequence.
    int at = start;
    for (const auto& s : out) {
        if (s.from != at) return std::nullopt;
        const MEdge& e = edges[s.edge];
        if (directed && (s.from != e.a || s.to != e.b)) return std::nullopt;
        if (!directed && !((s.from == e.a && s.to == e.b) || (s.from == e.b && s.to == e.a)))
            return std::nullopt;
        at = s.to;
    }
    return out;
}

// Convenience: all edges.
inline std::optional<std::vector<Step>> eulerian_from(int n, const std::vector<MEdge>& edges,
                                                      bool directed, int start) {
    std::vector<int> which(edges.size());
    for (int i = 0; i < (int)edges.size(); ++i) which[i] = i;
    return eulerian_from(n, edges, which, directed, start);
}

// |sources| pairwise edge-disjoint undirected paths from distinct `sources` to
// distinct `sinks` nodes, or nullopt when the cut is too small.  Unit
// capacities; augmentation is BFS in node-id order, so results are
// deterministic.  Each returned path is a Step sequence over `edges`.
inline std::optional<std::vector<std::vector<Step>>> edge_disjoint_paths(
    int n, const std::vector<MEdge>& edges, const std::vector<int>& sources,
    const std::vector<int>& sinks) {
    int m = (int)edges.size();
    // Arc 2i: a->b, arc 2i+1: b->a.  Flow pushed on one arc raises the other's
    // residual, which is exactly the undirected unit-capacity behaviour.
    std::vector<int> cap(2 * m, 1);
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (arc, head)
    for (int i = 0; i < m; ++i) {
        adj[edges[i].a].push_back({2 * i, edges[i].b});
        adj[edges[i].b].push_back({2 * i + 1, edges[i].a});
    }
    std::vector<bool> is_sink(n, false);
    for (int t : sinks) is_sink[t] = true;

    for (std::size_t si = 0; si < sources.size(); ++si) {
        // BFS from this source through positive-residual arcs to any free sink.
        std::vector<int> pre_arc(n, -1), pre_node(n, -1);
        std::vector<bool> seen(n, false);
        std::deque<int> q;
        q.push_back(sources[si]);
        seen[sources[si]] = true;
        int reached = -1;
        while (!q.empty() && reached < 0) {
            int v = q.front();
            q.pop_front();
            if (is_sink[v]) {
                reached = v;
                break;
            }
            for (auto [arc, w] : adj[v]) {
                if (cap[arc] <= 0 || seen[w]) continue;
                seen[w] = true;
                pre_arc[w] = arc;
                pre_node[w] = v;
                q.push_back(w);
            }
        }
        if (reached < 0) return std::nullopt;
        is_sink[reached] = false;  // each sink absorbs one path
        for (int v = reached; pre_node[v] != -1; v = pre_node[v]) {
            cap[pre_arc[v]] -= 1;
            cap[pre_arc[v] ^ 1] += 1;
        }
    }

    // Decompose net flow into paths.  net > 0 on arc 2i means a->b.
    std::vector<int> net(m, 0);
    for (int i = 0; i < m; ++i) net[i] = 1 - cap[2 * i];  // +1, 0, or -1
    std::vector<bool> consumed(m, false);
    std::vector<std::vector<Step>> paths;
    for (int s : sources) {
        std::vector<Step> path;
        int at = s;
        while (true) {
            int chosen = -1, to = -1;
            for (auto [arc, w] : adj[at]) {
                int ei = arc / 2;
                if (consumed[ei]) continue;
                bool fwd = (arc % 2) == 0;
                if ((fwd && net[ei] == 1) || (!fwd && net[ei] == -1)) {
                    chosen = ei;
                    to = w;
                    break;
                }
            }
            if (chosen < 0) break;
            consumed[chosen] = true;
            path.push_back({chosen, at, to});
            at = to;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace teec
