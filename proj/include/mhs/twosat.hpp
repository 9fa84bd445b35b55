#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhs/errors.hpp"
#include "mhs/vertex_set.hpp"

namespace mhs {

// Two-literal CNF over "vertex ∈ H" variables. Literal encoding: variable v
// contributes nodes 2v ("v ∉ H") and 2v+1 ("v ∈ H"); an empty formula
// therefore solves to the all-false assignment.
class Formula2 {
public:
    explicit Formula2(int variables) : n_(variables) {}

    static constexpr int lit(Vertex v, bool positive) { return 2 * v + (positive ? 1 : 0); }
    static constexpr int negate(int l) { return l ^ 1; }
    static constexpr Vertex lit_var(int l) { return l >> 1; }
    static constexpr bool lit_sign(int l) { return l & 1; }

    int variables() const { return n_; }

    void add_clause(int a, int b) { clauses_.emplace_back(a, b); }
    // unit clauses are binary clauses with a repeated literal
    void add_unit(int a) { add_clause(a, a); }

    const std::vector<std::pair<int, int>>& clauses() const { return clauses_; }

    bool satisfied_by(const std::vector<bool>& assignment) const {
        auto truth = [&](int l) { return assignment[static_cast<std::size_t>(lit_var(l))] == lit_sign(l); };
        for (auto [a, b] : clauses_)
            if (!truth(a) && !truth(b)) return false;
        return true;
    }

    bool satisfied_by(const VertexSet& h) const {
        auto truth = [&](int l) { return h.contains(lit_var(l)) == lit_sign(l); };
        for (auto [a, b] : clauses_)
            if (!truth(a) && !truth(b)) return false;
        return true;
    }

    // Implication-graph/SCC decision. Deterministic given clause order: the
    // graph is built in insertion order and components are numbered in Tarjan
    // completion order, a literal being true iff its component closes earlier
    // than its negation's.
    std::optional<std::vector<bool>> solve() const {
        int nodes = 2 * n_;
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
        for (auto [a, b] : clauses_) {
            adj[static_cast<std::size_t>(negate(a))].push_back(b);
            adj[static_cast<std::size_t>(negate(b))].push_back(a);
        }
        std::vector<int> comp(static_cast<std::size_t>(nodes), -1);
        std::vector<int> low(static_cast<std::size_t>(nodes), 0), num(static_cast<std::size_t>(nodes), -1);
        std::vector<int> stack;
        std::vector<bool> on_stack(static_cast<std::size_t>(nodes), false);
        int counter = 0, comps = 0;
        // iterative Tarjan
        struct Frame {
            int node;
            std::size_t child;
        };
        std::vector<Frame> call;
        for (int root = 0; root < nodes; ++root) {
            if (num[static_cast<std::size_t>(root)] != -1) continue;
            call.push_back({root, 0});
            num[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
            stack.push_back(root);
            on_stack[static_cast<std::size_t>(root)] = true;
            while (!call.empty()) {
                auto& fr = call.back();
                auto u = static_cast<std::size_t>(fr.node);
                if (fr.child < adj[u].size()) {
                    int w = adj[u][fr.child++];
                    auto wi = static_cast<std::size_t>(w);
                    if (num[wi] == -1) {
                        num[wi] = low[wi] = counter++;
                        stack.push_back(w);
                        on_stack[wi] = true;
                        call.push_back({w, 0});
                    } else if (on_stack[wi]) {
                        low[u] = std::min(low[u], num[wi]);
                    }
                } else {
                    if (low[u] == num[u]) {
                        for (;;) {
                            int w = stack.back();
                            stack.pop_back();
                            on_stack[static_cast<std::size_t>(w)] = false;
                            comp[static_cast<std::size_t>(w)] = comps;
                            if (w == fr.node) break;
                        }
                        ++comps;
                    }
                    call.pop_back();
                    if (!call.empty()) {
                        auto p = static_cast<std::size_t>(call.back().node);
                        low[p] = std::min(low[p], low[u]);
                    }
                }
            }
        }
        std::vector<bool> assignment(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) {
            int cp = comp[static_cast<std::size_t>(lit(v, true))];
            int cn = comp[static_cast<std::size_t>(lit(v, false))];
            if (cp == cn) return std::nullopt;
            assignment[static_cast<std::size_t>(v)] = cp < cn;
        }
#ifndef NDEBUG
        if (!satisfied_by(assignment)) throw Error("2-SAT assignment fails its own clauses");
#endif
        return assignment;
    }

    // DIMACS-like dump (1-based variables, unit clauses with repeated literal)
    std::string to_dimacs() const {
        std::string out = "p cnf " + std::to_string(n_) + " " + std::to_string(clauses_.size()) + "\n";
        auto dim = [](int l) {
            int v = lit_var(l) + 1;
            return std::to_string(lit_sign(l) ? v : -v);
        };
        for (auto [a, b] : clauses_) out += dim(a) + " " + dim(b) + " 0\n";
        return out;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> clauses_;
};

}  // namespace mhs
