#pragma once

// Reference solver: exhaustive search over covers, organized label group by
// label group.  Within a group, journeys take their edges in index order of
// the journeys (moves of distinct journeys commute, so that ordering loses
// nothing); fresh journeys are only distinguished by their first move.  Used
// as ground truth by the test suite and exposed through the CLI for small
// inputs.  Walk instances memoize failed frontier states at group boundaries.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "teec/model.hpp"

namespace teec {

namespace detail {

class OracleSearch {
  public:
    OracleSearch(const TemporalGraph& g, Kind kind, Strictness strictness, int k,
                 const std::optional<TerminalSpec>& term)
        : g_(g), kind_(kind), strict_(strictness == Strictness::Strict), k_(k), term_(term) {
        assigned_.assign(g_.m(), false);
        journeys_.reserve(k_);  // no reallocation while recursion holds references
        if (term_) {
            for (int s : term_->starts) {
                OJourney j;
                j.endpoint = s;
                j.preseeded_start = s;
                if (kind_ == Kind::Path) j.visited.insert(s);
                journeys_.push_back(std::move(j));
            }
        }
    }

    std::optional<Cover> run() {
        if (!solve_group(0)) return std::nullopt;
        return result_;  // snapshotted by finished(); backtracking unwinds journeys_
    }

  private:
    struct OJourney {
        int endpoint = -1;
        int last_label = -1;
        int preseeded_start = -1;  // >= 0 for terminal-seeded journeys
        std::set<int> visited;
        std::set<std::pair<int, int>> statics;
        Journey steps;
    };

    bool solve_group(std::size_t gi) {
        if (gi == g_.groups().size()) return finished();
        std::vector<std::pair<int, bool>> key;
        if (kind_ == Kind::Walk) {
            for (const auto& j : journeys_) key.push_back({j.endpoint, !j.steps.empty()});
            std::sort(key.begin(), key.end());
            if (failed_[gi].count(key)) return false;
        }
        remaining_ = g_.groups()[gi].end - g_.groups()[gi].begin;
        bool ok = journeys_.empty() ? fresh_or_next(gi, -1)
                                    : journey_turn(gi, 0, journeys_.size());
        if (!ok && kind_ == Kind::Walk) failed_[gi].insert(std::move(key));
        return ok;
    }

    // Journey ji picks up zero or more of group gi's edges, then hands over.
    bool journey_turn(std::size_t gi, std::size_t ji, std::size_t preexisting) {
        // Hand over without taking (another) edge.  A spawned journey (index at
        // or past `preexisting`) bounds later spawns by its own first edge.
        std::size_t save_remaining = remaining_;
        bool handed = (ji + 1 < preexisting)
                          ? journey_turn(gi, ji + 1, preexisting)
                          : fresh_or_next(gi, ji + 1 > preexisting ? first_edge_index(ji) : -1);
        remaining_ = save_remaining;
        if (handed) return true;

        const auto& gr = g_.groups()[gi];
        auto& j = journeys_[ji];
        for (int ei = gr.begin; ei < gr.end; ++ei) {
            if (assigned_[ei]) continue;
            const auto& e = g_.edge(ei);
            if (strict_ && j.last_label >= e.t) continue;
            for (int orient = 0; orient < (g_.directed() ? 1 : 2); ++orient) {
                int from = orient ? e.v : e.u, to = orient ? e.u : e.v;
                if (j.endpoint != from) continue;
                if (j.steps.empty() && j.preseeded_start >= 0 && !empty_canonical(ji)) continue;
                if (!push_move(j, ei, from, to)) continue;
                bool ok = journey_turn(gi, ji, preexisting);
                pop_move(j, ei);
                if (ok) return true;
            }
        }
        return false;
    }

    // All pre-existing journeys had their turn: spawn fresh journeys or close the group.
    bool fresh_or_next(std::size_t gi, int last_first) {
        if (remaining_ == 0) return solve_group(gi + 1);
        if (term_ || (int)journeys_.size() >= k_) return false;
        const auto& gr = g_.groups()[gi];
        for (int ei = std::max(gr.begin, last_first + 1); ei < gr.end; ++ei) {
            if (assigned_[ei]) continue;
            const auto& e = g_.edge(ei);
            for (int orient = 0; orient < (g_.directed() ? 1 : 2); ++orient) {
                int from = orient ? e.v : e.u, to = orient ? e.u : e.v;
                OJourney j;
                j.endpoint = from;
                if (kind_ == Kind::Path) j.visited.insert(from);
                journeys_.push_back(std::move(j));
                std::size_t ji = journeys_.size() - 1;
                bool ok = push_move(journeys_[ji], ei, from, to) &&
                          journey_turn(gi, ji, ji /*preexisting excludes self*/);
                if (!journeys_[ji].steps.empty()) pop_move(journeys_[ji], ei);
                journeys_.pop_back();
                if (ok) return true;
            }
        }
        return false;
    }

    bool push_move(OJourney& j, int ei, int from, int to) {
        const auto& e = g_.edge(ei);
        if (kind_ == Kind::Path) {
            if (j.visited.count(to)) return false;
            j.visited.insert(to);
        } else if (kind_ == Kind::Trail) {
            if (j.statics.count(static_key(e))) return false;
            j.statics.insert(static_key(e));
        }
        j.steps.push_back({ei, from, to});
        j.endpoint = to;
        j.last_label = e.t;
        assigned_[ei] = true;
        remaining_ -= 1;
        return true;
    }

    void pop_move(OJourney& j, int ei) {
        const auto& e = g_.edge(ei);
        const Step st = j.steps.back();
        j.steps.pop_back();
        assigned_[ei] = false;
        remaining_ += 1;
        if (kind_ == Kind::Path) j.visited.erase(st.to);
        if (kind_ == Kind::Trail) j.statics.erase(static_key(e));
        if (j.steps.empty()) {
            j.endpoint = j.preseeded_start >= 0 ? j.preseeded_start : -1;
            j.last_label = -1;
        } else {
            j.endpoint = j.steps.back().to;
            j.last_label = g_.edge(j.steps.back().edge).t;
        }
    }

    std::pair<int, int> static_key(const TemporalEdge& e) const {
        if (g_.directed()) return {e.u, e.v};
        return {std::min(e.u, e.v), std::max(e.u, e.v)};
    }

    // Identical still-empty terminal journeys are interchangeable; only the
    // lowest-numbered one may leave first.
    bool empty_canonical(std::size_t ji) const {
        for (std::size_t p = 0; p < ji; ++p)
            if (journeys_[p].steps.empty() &&
                journeys_[p].preseeded_start == journeys_[ji].preseeded_start)
                return false;
        return true;
    }

    int first_edge_index(std::size_t ji) const {
        return journeys_[ji].steps.empty() ? -1 : journeys_[ji].steps.front().edge;
    }

    bool finished() {
        if (term_) {
            std::vector<int> have;
            for (const auto& j : journeys_) {
                if (j.steps.empty()) return false;
                have.push_back(j.endpoint);
            }
            std::vector<int> want = term_->ends;
            std::sort(have.begin(), have.end());
            std::sort(want.begin(), want.end());
            if (have != want) return false;
        }
        result_.clear();  // spawned journeys are nonempty by construction
        for (const auto& j : journeys_) result_.push_back(j.steps);
        return true;
    }

    const TemporalGraph& g_;
    Kind kind_;
    bool strict_;
    int k_;
    std::optional<TerminalSpec> term_;
    std::vector<bool> assigned_;
    std::vector<OJourney> journeys_;
    Cover result_;
    std::size_t remaining_ = 0;
    std::map<std::size_t, std::set<std::vector<std::pair<int, bool>>>> failed_;
};

}  // namespace detail

inline int oracle_default_guard(Kind kind) { return kind == Kind::Walk ? 40 : 14; }

// Exhaustive decision: is there an exact cover by at most k journeys (with
// terminals: exactly the prescribed journeys)?  Throws resource_limit when the
// instance exceeds the size guard.
inline std::optional<Cover> oracle_decide(const TemporalGraph& g, Kind kind,
                                          Strictness strictness, int k,
                                          const std::optional<TerminalSpec>& term = std::nullopt,
                                          std::optional<int> guard = std::nullopt) {
    int limit = guard ? *guard : oracle_default_guard(kind);
    if (g.m() > limit) throw resource_limit("oracle guard exceeded: " + std::to_string(g.m()) +
                                            " edges > " + std::to_string(limit));
    if (term) {
        if ((int)term->starts.size() != k) throw error("oracle: k must match terminal count");
        if (k == 0) return g.m() == 0 ? std::optional<Cover>(Cover{}) : std::nullopt;
    }
    if (g.m() == 0) return term ? std::nullopt : std::optional<Cover>(Cover{});
    if (k <= 0) return std::nullopt;
    detail::OracleSearch search(g, kind, strictness, k, term);
    return search.run();
}

// Smallest feasible journey count and a witness.  Every instance is coverable
// by one journey per edge, so the scan is bounded by m.
inline std::pair<int, Cover> oracle_min(const TemporalGraph& g, Kind kind, Strictness strictness,
                                        std::optional<int> guard = std::nullopt) {
    if (g.m() == 0) return {0, Cover{}};
    for (int k = 1; k <= (int)g.m(); ++k) {
        auto got = oracle_decide(g, kind, strictness, k, std::nullopt, guard);
        if (got) return {k, std::move(*got)};
    }
    throw error("internal: singleton journeys must cover");
}

}  // namespace teec
