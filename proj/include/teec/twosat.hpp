// 2-SAT via the implication graph and Tarjan's SCC algorithm (iterative).
// Clauses of arity 1 and 2 are accepted; an empty clause makes the formula
// unsatisfiable, arity > 2 is an input error here.
#pragma once

#include <optional>
#include <vector>

#include "teec/model.hpp"

namespace teec {

// Literal: variable index with sign.  pos(v) is "v true", neg(v) is "v false".
struct Lit {
    int var = 0;
    bool negated = false;
};
inline Lit pos(int v) { return {v, false}; }
inline Lit neg(int v) { return {v, true}; }
inline Lit operator~(Lit l) { return {l.var, !l.negated}; }

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<Lit>> clauses;

    int add_var() { return num_vars++; }
    void add_clause(std::vector<Lit> lits) { clauses.push_back(std::move(lits)); }
    // (a XOR b) == (a | b) & (~a | ~b)
    void add_xor(Lit a, Lit b) {
        add_clause({a, b});
        add_clause({~a, ~b});
    }
    // (a == b), i.e. the literals carry the same truth value.
    void add_eq(Lit a, Lit b) { add_xor(a, ~b); }
};

// Returns an assignment (index = variable) or nullopt when unsatisfiable.
inline std::optional<std::vector<bool>> two_sat_solve(const CnfFormula& f) {
    int n = f.num_vars;
    // Node 2v = "v true", 2v+1 = "v false".
    auto node = [](Lit l) { return 2 * l.var + (l.negated ? 1 : 0); };
    std::vector<std::vector<int>> adj(2 * n);
    for (const auto& c : f.clauses) {
        if (c.empty()) return std::nullopt;
        if (c.size() > 2) throw error("two_sat_solve: clause arity exceeds 2");
        Lit a = c[0];
        Lit b = c.size() == 2 ? c[1] : c[0];
        adj[node(~a)].push_back(node(b));
        adj[node(~b)].push_back(node(a));
    }

    // Iterative Tarjan.
    int N = 2 * n;
    std::vector<int> comp(N, -1), low(N, 0), num(N, -1), stk;
    std::vector<std::pair<int, int>> call;  // (node, next child index)
    int counter = 0, ncomp = 0;
    std::vector<bool> on_stack(N, false);
    for (int s = 0; s < N; ++s) {
        if (num[s] != -1) continue;
        call.push_back({s, 0});
        while (!call.empty()) {
            auto& [v, ci] = call.back();
            if (ci == 0) {
                num[v] = low[v] = counter++;
                stk.push_back(v);
                on_stack[v] = true;
            }
            if (ci < (int)adj[v].size()) {
                int w = adj[v][ci++];
                if (num[w] == -1) {
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ncomp++;
                }
                int done = v;
                call.pop_back();
                if (!call.empty()) {
                    int parent = call.back().first;
                    low[parent] = std::min(low[parent], low[done]);
                }
            }
        }
    }

    std::vector<bool> assign(n);
    for (int v = 0; v < n; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        // Tarjan numbers components in reverse topological order, so the
        // component finished earlier is the one to prefer.
        assign[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return assign;
}

inline bool eval_clause(const std::vector<Lit>& c, const std::vector<bool>& a) {
    for (const auto& l : c)
        if (a[l.var] != l.negated) return true;
    return false;
}

}  // namespace teec
