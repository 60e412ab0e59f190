// Cover verification: checks a single journey against the variant rules and a
// full cover against exact-coverage, budget and terminal constraints.
#pragma once

#include <set>
#include <sstream>

#include "teec/model.hpp"

namespace teec {

enum class Violation {
    UnknownEdge,
    WrongEndpoints,      // step's from/to do not match the edge
    WrongDirection,      // directed edge traversed against its orientation
    NotConnected,        // consecutive steps do not share the junction vertex
    NotTimeRespecting,   // labels decrease (or repeat, for strict journeys)
    RepeatedStaticEdge,  // trail revisits a static edge
    RepeatedVertex,      // path revisits a vertex
    EmptyJourney,
    MissingEdge,    // cover does not use some temporal edge
    DuplicateEdge,  // cover uses some temporal edge twice
    BudgetExceeded,
    TerminalMismatch,
};

inline const char* violation_name(Violation v) {
    switch (v) {
        case Violation::UnknownEdge: return "unknown-edge";
        case Violation::WrongEndpoints: return "wrong-endpoints";
        case Violation::WrongDirection: return "wrong-direction";
        case Violation::NotConnected: return "not-connected";
        case Violation::NotTimeRespecting: return "not-time-respecting";
        case Violation::RepeatedStaticEdge: return "repeated-static-edge";
        case Violation::RepeatedVertex: return "repeated-vertex";
        case Violation::EmptyJourney: return "empty-journey";
        case Violation::MissingEdge: return "missing-edge";
        case Violation::DuplicateEdge: return "duplicate-edge";
        case Violation::BudgetExceeded: return "budget-exceeded";
        case Violation::TerminalMismatch: return "terminal-mismatch";
    }
    return "?";
}

struct VerificationReport {
    struct Item {
        Violation what;
        int journey = -1;  // offending journey index, if any
        int step = -1;     // offending step index within the journey, if any
        std::string note;
    };
    std::vector<Item> items;

    bool ok() const { return items.empty(); }
    void add(Violation v, int journey = -1, int step = -1, std::string note = "") {
        items.push_back({v, journey, step, std::move(note)});
    }
    std::string str() const {
        std::ostringstream os;
        for (const auto& it : items) {
            os << violation_name(it.what);
            if (it.journey >= 0) os << " journey=" << it.journey;
            if (it.step >= 0) os << " step=" << it.step;
            if (!it.note.empty()) os << " (" << it.note << ")";
            os << "\n";
        }
        return os.str();
    }
};

// Check a single journey; appends violations to `rep`.  `jidx` is only used to
// tag report items.
inline void check_journey(const TemporalGraph& g, const Journey& j, Kind kind,
                          Strictness strictness, VerificationReport& rep, int jidx = -1) {
    if (j.empty()) {
        rep.add(Violation::EmptyJourney, jidx);
        return;
    }
    std::set<std::pair<int, int>> statics;  // normalized (u,v) pairs seen
    std::set<int> vertices;                 // for paths
    int prev_label = -1;
    for (int s = 0; s < (int)j.size(); ++s) {
        const Step& st = j[s];
        if (st.edge < 0 || st.edge >= g.m()) {
            rep.add(Violation::UnknownEdge, jidx, s);
            return;
        }
        const TemporalEdge& e = g.edge(st.edge);
        if (g.directed()) {
            if (st.from == e.v && st.to == e.u) {
                rep.add(Violation::WrongDirection, jidx, s, e.name);
                return;
            }
            if (st.from != e.u || st.to != e.v) {
                rep.add(Violation::WrongEndpoints, jidx, s, e.name);
                return;
            }
        } else {
            bool fwd = st.from == e.u && st.to == e.v;
            bool bwd = st.from == e.v && st.to == e.u;
            if (!fwd && !bwd) {
                rep.add(Violation::WrongEndpoints, jidx, s, e.name);
                return;
            }
        }
        if (s > 0 && j[s - 1].to != st.from) {
            rep.add(Violation::NotConnected, jidx, s);
            return;
        }
        if (s > 0) {
            bool ok = strictness == Strictness::Strict ? e.t > prev_label : e.t >= prev_label;
            if (!ok) {
                rep.add(Violation::NotTimeRespecting, jidx, s, e.name);
                return;
            }
        }
        prev_label = e.t;

        if (kind == Kind::Trail) {
            // Static identity: ordered pair when directed, unordered otherwise.
            std::pair<int, int> key = g.directed()
                                          ? std::make_pair(e.u, e.v)
                                          : std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
            if (!statics.insert(key).second) {
                rep.add(Violation::RepeatedStaticEdge, jidx, s, e.name);
                return;
            }
        }
        if (kind == Kind::Path) {
            if (s == 0) vertices.insert(st.from);
            if (!vertices.insert(st.to).second) {
                rep.add(Violation::RepeatedVertex, jidx, s, g.vertex_name(st.to));
                return;
            }
        }
    }
}

inline bool journey_ok(const TemporalGraph& g, const Journey& j, Kind kind, Strictness strictness) {
    VerificationReport rep;
    check_journey(g, j, kind, strictness, rep);
    return rep.ok();
}

// Check a full cover against an instance.  Every temporal edge must be used
// exactly once; journey count must respect the budget (at most k for decision
// instances, exactly |starts| with matching terminal multisets when terminals
// are fixed); empty journeys are never valid members.
inline VerificationReport check_cover(const Instance& inst, const Cover& cover) {
    VerificationReport rep;
    const TemporalGraph& g = inst.graph;
    for (int i = 0; i < (int)cover.size(); ++i)
        check_journey(g, cover[i], inst.kind, inst.strictness, rep, i);

    std::vector<int> used(g.m(), 0);
    for (const auto& j : cover)
        for (const auto& st : j)
            if (st.edge >= 0 && st.edge < g.m()) used[st.edge]++;
    for (int i = 0; i < g.m(); ++i) {
        if (used[i] == 0) rep.add(Violation::MissingEdge, -1, -1, g.edge(i).name);
        if (used[i] > 1) rep.add(Violation::DuplicateEdge, -1, -1, g.edge(i).name);
    }

    if (inst.terminals) {
        const auto& ts = *inst.terminals;
        if ((int)cover.size() != (int)ts.starts.size()) {
            rep.add(Violation::TerminalMismatch, -1, -1, "journey count != |starts|");
        } else {
            std::vector<int> starts, ends;
            for (const auto& j : cover) {
                if (j.empty()) continue;  // already reported as EmptyJourney
                starts.push_back(j.front().from);
                ends.push_back(j.back().to);
            }
            auto want_s = ts.starts, want_e = ts.ends;
            std::sort(starts.begin(), starts.end());
            std::sort(ends.begin(), ends.end());
            std::sort(want_s.begin(), want_s.end());
            std::sort(want_e.begin(), want_e.end());
            if (starts != want_s) rep.add(Violation::TerminalMismatch, -1, -1, "start multiset");
            if (ends != want_e) rep.add(Violation::TerminalMismatch, -1, -1, "end multiset");
        }
    } else if (inst.budget == Budget::Decision) {
        if ((int)cover.size() > inst.k)
            rep.add(Violation::BudgetExceeded, -1, -1,
                    std::to_string(cover.size()) + " > " + std::to_string(inst.k));
    }
    return rep;
}

inline bool cover_ok(const Instance& inst, const Cover& cover) { return check_cover(inst, cover).ok(); }

}  // namespace teec
