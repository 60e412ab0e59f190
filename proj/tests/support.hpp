#pragma once

// Shared helpers for the test suite: compact instance builders, a seeded RNG
// with stable cross-platform draws, and a brute-force cover enumerator that is
// deliberately independent of the solver code paths (it partitions edges first
// and then looks for valid orderings, rather than growing journeys).

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "teec/model.hpp"
#include "teec/verify.hpp"

namespace ts {

using teec::Budget;
using teec::Cover;
using teec::Instance;
using teec::Journey;
using teec::Kind;
using teec::Step;
using teec::Strictness;
using teec::TemporalEdge;
using teec::TemporalGraph;
using teec::TerminalSpec;

inline TemporalGraph make_graph(bool directed, int n,
                                const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<TemporalEdge> es;
    int id = 0;
    for (auto [u, v, t] : edges) es.push_back({u, v, t, "e" + std::to_string(id++)});
    return TemporalGraph(directed, std::move(names), std::move(es));
}

inline Instance make_instance(TemporalGraph g, Kind kind, Strictness s, int k,
                              std::optional<TerminalSpec> term = std::nullopt) {
    Instance inst;
    inst.graph = std::move(g);
    inst.kind = kind;
    inst.strictness = s;
    inst.budget = Budget::Decision;
    inst.k = k;
    inst.terminals = std::move(term);
    return inst;
}

// mt19937 with explicit modulo draws: identical sequences everywhere, which
// keeps frozen expectations portable.
struct Rng {
    std::mt19937 eng;
    explicit Rng(unsigned seed) : eng(seed) {}
    int below(int n) { return (int)(eng() % (unsigned)n); }
    int in(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
    bool coin() { return below(2) == 1; }
};

inline TemporalGraph random_graph(Rng& rng, bool directed, int max_n, int max_m, int max_t) {
    int n = rng.in(2, max_n);
    int m = rng.in(0, max_m);
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int u = rng.below(n), v = rng.below(n);
        while (v == u) v = rng.below(n);
        edges.push_back({u, v, rng.in(1, max_t)});
    }
    return make_graph(directed, n, edges);
}

// ---- independent reference: partition edges, then search for valid orderings.

namespace detail {

struct EnumContext {
    const TemporalGraph& g;
    Kind kind;
    Strictness s;
    // (sorted part, start, end) -> arrangeable?  Partitions repeat massively.
    std::map<std::tuple<std::vector<int>, int, int>, bool> cache;
};

// Can the edge multiset `part` be arranged into one valid journey?  Optionally
// the journey must run start->end.  Tries every permutation and orientation.
inline bool arrangeable(EnumContext& cx, std::vector<int> part, int start = -1, int end = -1) {
    const TemporalGraph& g = cx.g;
    std::sort(part.begin(), part.end());
    auto key = std::make_tuple(part, start, end);
    if (auto it = cx.cache.find(key); it != cx.cache.end()) return it->second;
    bool found = false;
    do {
        int orient_count = g.directed() ? 1 : 1 << part.size();
        for (int mask = 0; mask < orient_count && !found; ++mask) {
            Journey j;
            for (std::size_t i = 0; i < part.size(); ++i) {
                const auto& e = g.edge(part[i]);
                bool flip = (mask >> i) & 1;
                j.push_back({part[i], flip ? e.v : e.u, flip ? e.u : e.v});
            }
            if (start >= 0 && (j.front().from != start || j.back().to != end)) continue;
            if (teec::journey_ok(g, j, cx.kind, cx.s)) found = true;
        }
    } while (!found && std::next_permutation(part.begin(), part.end()));
    cx.cache.emplace(std::move(key), found);
    return found;
}

inline bool assign_rec(EnumContext& cx, int k, const std::optional<TerminalSpec>& term,
                       std::vector<std::vector<int>>& parts, int ei) {
    if (ei == cx.g.m()) {
        std::vector<int> busy;
        for (int c = 0; c < k; ++c)
            if (!parts[c].empty()) busy.push_back(c);
        if (!term) {
            for (int c : busy)
                if (!arrangeable(cx, parts[c])) return false;
            return true;
        }
        if ((int)busy.size() != (int)term->starts.size()) return false;
        // Starts and ends are independent multisets: try every way to hand a
        // start and an end to each journey class.
        std::vector<int> sperm(busy.size()), eperm(busy.size());
        std::iota(sperm.begin(), sperm.end(), 0);
        do {
            std::iota(eperm.begin(), eperm.end(), 0);
            do {
                bool all = true;
                for (std::size_t i = 0; i < busy.size(); ++i) {
                    if (!arrangeable(cx, parts[busy[i]], term->starts[sperm[i]],
                                     term->ends[eperm[i]])) {
                        all = false;
                        break;
                    }
                }
                if (all) return true;
            } while (std::next_permutation(eperm.begin(), eperm.end()));
        } while (std::next_permutation(sperm.begin(), sperm.end()));
        return false;
    }
    // Class indices are interchangeable: cap the search at one fresh class.
    int used = 0;
    while (used < k && !parts[used].empty()) ++used;
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        parts[c].push_back(ei);
        if (assign_rec(cx, k, term, parts, ei + 1)) {
            parts[c].pop_back();
            return true;
        }
        parts[c].pop_back();
    }
    return false;
}

}  // namespace detail

// Ground-truth decision by exhaustive partitioning.  Exponential; only for
// tiny instances.
inline bool enum_feasible(const TemporalGraph& g, Kind kind, Strictness s, int k,
                          const std::optional<TerminalSpec>& term = std::nullopt) {
    if (term && (int)term->starts.size() != k) return false;
    if (g.m() == 0) return term ? term->starts.empty() : true;
    if (k <= 0) return false;
    std::vector<std::vector<int>> parts(k);
    detail::EnumContext cx{g, kind, s, {}};
    return detail::assign_rec(cx, k, term, parts, 0);
}

inline int enum_min(const TemporalGraph& g, Kind kind, Strictness s) {
    if (g.m() == 0) return 0;
    for (int k = 1; k <= g.m(); ++k)
        if (enum_feasible(g, kind, s, k)) return k;
    return g.m();  // unreachable: singletons always work
}

}  // namespace ts
