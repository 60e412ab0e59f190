#pragma once

// Exact cover by at most two journeys.  Two tokens walk the edgestream group
// by group; which actual journey a token carries is deliberately left open:
// every co-location ("meet") starts a phase, and a phase boolean says whether
// the token/journey binding is swapped there.  Revisit conflicts (paths:
// vertices, trails: static edges) become XOR clauses between the phase
// literals that tagged the two visits, so one 2-SAT solve at the end settles
// all identity choices at once.  Movement itself is searched exhaustively
// within each label group; meets make the symmetric half of that search
// redundant, and the strict variant caps groups at two edges anyway.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teec/model.hpp"
#include "teec/twosat.hpp"

namespace teec {

namespace detail {

class K2Engine {
  public:
    K2Engine(const TemporalGraph& g, Kind kind, Strictness strictness)
        : g_(g), kind_(kind), strict_(strictness == Strictness::Strict) {}

    std::optional<Cover> solve() {
        if (g_.m() == 0) return Cover{};
        if (!size_prechecks()) return std::nullopt;
        for (const auto& gr : g_.groups())
            if (gr.end - gr.begin > 60)
                throw resource_limit("two-journey search: label group wider than 60 edges");

        std::vector<int> cands = start_candidates();
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t j = i; j < cands.size(); ++j)
                if (try_pair(cands[i], cands[j])) return result_;
        return std::nullopt;
    }

  private:
    struct Rec {
        int edge, from, to;
        Lit tag;
    };

    // Two journeys cannot absorb three same-label edges (strict), a vertex of
    // temporal degree five (paths), or a static edge of multiplicity three
    // (trails).
    bool size_prechecks() const {
        if (strict_)
            for (const auto& gr : g_.groups())
                if (gr.end - gr.begin > 2) return false;
        if (kind_ == Kind::Path) {
            std::vector<int> din(g_.n(), 0), dout(g_.n(), 0);
            for (const auto& e : g_.edges()) {
                dout[e.u]++;
                din[e.v]++;
            }
            for (int v = 0; v < g_.n(); ++v) {
                if (g_.directed() && (din[v] > 2 || dout[v] > 2)) return false;
                if (!g_.directed() && din[v] + dout[v] > 4) return false;
            }
        }
        if (kind_ == Kind::Trail) {
            std::map<std::pair<int, int>, int> mult;
            for (const auto& e : g_.edges())
                if (++mult[static_key(e)] > 2) return false;
        }
        return true;
    }

    std::vector<int> start_candidates() const {
        std::set<int> cs;
        for (const auto& e : g_.edges()) {
            cs.insert(e.u);
            if (!g_.directed()) cs.insert(e.v);
        }
        return {cs.begin(), cs.end()};
    }

    std::pair<int, int> static_key(const TemporalEdge& e) const {
        if (g_.directed()) return {e.u, e.v};
        return {std::min(e.u, e.v), std::max(e.u, e.v)};
    }

    Lit lit(int phase_var, int token) const {
        return token == 0 ? pos(phase_var) : neg(phase_var);
    }

    bool try_pair(int s1, int s2) {
        cnf_ = CnfFormula{};
        recs_.clear();
        vmarks_.assign(g_.n(), {});
        emarks_.clear();
        failed_.clear();
        pos_[0] = s1;
        pos_[1] = s2;
        spent_[0] = spent_[1] = false;
        cur_ = cnf_.add_var();  // phase 0
        if (kind_ == Kind::Path) {
            vmarks_[s1].push_back(lit(cur_, 0));
            vmarks_[s2].push_back(lit(cur_, 1));
        }
        return run_group(0);
    }

    bool run_group(std::size_t gi) {
        if (gi == g_.groups().size()) return finalize();
        bool s0 = spent_[0], s1 = spent_[1];
        spent_[0] = spent_[1] = false;
        bool ok;
        // A standing co-location re-opens the swap choice now that both
        // journeys are fresh for this label.
        if (pos_[0] == pos_[1]) {
            int saved = cur_;
            cur_ = cnf_.add_var();
            ok = micro(gi, 0);
            cnf_.num_vars--;
            cur_ = saved;
        } else {
            ok = micro(gi, 0);
        }
        spent_[0] = s0;
        spent_[1] = s1;
        return ok;
    }

    bool micro(std::size_t gi, uint64_t mask) {
        const auto& gr = g_.groups()[gi];
        int size = gr.end - gr.begin;
        if (std::popcount(mask) == size) return run_group(gi + 1);

        std::string key;
        if (kind_ == Kind::Walk) {
            key = walk_key(gi, mask);
            if (failed_.count(key)) return false;
        }

        bool sym = pos_[0] == pos_[1] && spent_[0] == spent_[1];
        for (int s = 0; s < (sym ? 1 : 2); ++s) {
            if (strict_ && spent_[s]) continue;
            for (int ei = gr.begin; ei < gr.end; ++ei) {
                if (mask & (1ull << (ei - gr.begin))) continue;
                const auto& e = g_.edge(ei);
                for (int o = 0; o < (g_.directed() ? 1 : 2); ++o) {
                    int from = o ? e.v : e.u, to = o ? e.u : e.v;
                    if (pos_[s] != from) continue;
                    if (apply_move(gi, mask | (1ull << (ei - gr.begin)), s, ei, from, to))
                        return true;
                }
            }
        }
        if (kind_ == Kind::Walk) failed_.insert(std::move(key));
        return false;
    }

    bool apply_move(std::size_t gi, uint64_t mask, int s, int ei, int from, int to) {
        const auto& e = g_.edge(ei);
        std::size_t clause_mark = cnf_.clauses.size();
        int var_mark = cnf_.num_vars;

        bool marked = false;
        if (kind_ == Kind::Path) {
            auto& marks = vmarks_[to];
            if (marks.size() >= 2) return false;  // a third visit cannot split two ways
            for (Lit m : marks) cnf_.add_xor(lit(cur_, s), m);
            marks.push_back(lit(cur_, s));
            marked = true;
        } else if (kind_ == Kind::Trail) {
            auto& marks = emarks_[static_key(e)];
            if (marks.size() >= 2) return false;
            for (Lit m : marks) cnf_.add_xor(lit(cur_, s), m);
            marks.push_back(lit(cur_, s));
            marked = true;
        }

        recs_.push_back({ei, from, to, lit(cur_, s)});
        int old_pos = pos_[s];
        bool old_spent = spent_[s];
        pos_[s] = to;
        if (strict_) spent_[s] = true;

        bool ok = after_move(gi, mask, s);

        pos_[s] = old_pos;
        spent_[s] = old_spent;
        recs_.pop_back();
        if (marked) {
            if (kind_ == Kind::Path)
                vmarks_[to].pop_back();
            else
                emarks_[static_key(e)].pop_back();
        }
        cnf_.clauses.resize(clause_mark);
        cnf_.num_vars = var_mark;
        return ok;
    }

    // Meet handling after a move by token s.
    bool after_move(std::size_t gi, uint64_t mask, int s) {
        if (pos_[0] != pos_[1]) return micro(gi, mask);
        if (!strict_ || spent_[0] == spent_[1]) {
            // Symmetric meet: one fresh free phase subsumes both bindings.
            int saved = cur_;
            cur_ = cnf_.add_var();
            bool ok = micro(gi, mask);
            cur_ = saved;
            return ok;  // clauses/vars rolled back by apply_move
        }
        // Asymmetric (one journey already moved at this label): continuing
        // unswapped costs nothing; swapping re-binds deterministically.
        if (micro(gi, mask)) return true;
        int sp = spent_[0] ? 0 : 1;
        int saved = cur_;
        cur_ = cnf_.add_var();
        cnf_.add_eq(lit(cur_, sp), lit(saved, 1 - sp));
        std::swap(spent_[0], spent_[1]);
        bool ok = micro(gi, mask);
        std::swap(spent_[0], spent_[1]);
        cur_ = saved;
        return ok;
    }

    bool finalize() {
        auto assign = two_sat_solve(cnf_);
        if (!assign) return false;
        auto truth = [&](Lit l) { return (*assign)[l.var] != l.negated; };
        Journey a, b;
        for (const auto& r : recs_)
            (truth(r.tag) ? a : b).push_back({r.edge, r.from, r.to});
        result_.clear();
        if (!a.empty()) result_.push_back(std::move(a));
        if (!b.empty()) result_.push_back(std::move(b));
        return true;
    }

    std::string walk_key(std::size_t gi, uint64_t mask) const {
        // Tokens are interchangeable for walks: canonical order.
        auto t0 = std::make_pair(pos_[0], spent_[0]);
        auto t1 = std::make_pair(pos_[1], spent_[1]);
        if (t1 < t0) std::swap(t0, t1);
        std::string k;
        k.reserve(40);
        k += std::to_string(gi);
        k += ':';
        k += std::to_string(mask);
        k += ':';
        k += std::to_string(t0.first);
        k += t0.second ? '!' : '.';
        k += std::to_string(t1.first);
        k += t1.second ? '!' : '.';
        return k;
    }

    const TemporalGraph& g_;
    Kind kind_;
    bool strict_;

    CnfFormula cnf_;
    std::vector<Rec> recs_;
    std::vector<std::vector<Lit>> vmarks_;            // per-vertex visit tags (paths)
    std::map<std::pair<int, int>, std::vector<Lit>> emarks_;  // static-edge tags (trails)
    std::set<std::string> failed_;                    // dead walk states, per pair
    int pos_[2] = {-1, -1};
    bool spent_[2] = {false, false};
    int cur_ = 0;
    Cover result_;
};

}  // namespace detail

// Cover by at most two journeys; returns a witness or nullopt.  Worst-case
// exponential in the largest label group (the search inside a group), but
// polynomial bookkeeping otherwise.
inline std::optional<Cover> solve_k2(const TemporalGraph& g, Kind kind, Strictness strictness) {
    detail::K2Engine engine(g, kind, strictness);
    return engine.solve();
}

}  // namespace teec
