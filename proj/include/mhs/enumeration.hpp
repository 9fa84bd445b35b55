#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mhs/consistency.hpp"
#include "mhs/convexity.hpp"
#include "mhs/graph.hpp"
#include "mhs/shadows.hpp"

namespace mhs {

// Exact nonnegative rational, just enough for the enumeration bound.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        reduce();
    }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

// Upper bound (4m·2^ω + 2ω) / ω on the number of halfspaces.
inline Rational count_bound(const Graph& g) {
    std::int64_t m = g.edge_count();
    std::int64_t w = clique_number(g);
    if (w <= 0) throw std::invalid_argument("count_bound needs at least one vertex");
    if (w >= 57) throw Error("count_bound overflows 64-bit arithmetic");
    return Rational(4 * m * (std::int64_t{1} << w) + 2 * w, w);
}

// Return false from the visitor to stop early.
using HalfspaceVisitor = std::function<bool(const VertexSet&)>;

struct EnumerationStats {
    std::size_t check_calls = 0;      // consistency checks issued
    std::size_t max_delay_checks = 0; // longest run of checks between outputs
};

// Lists every halfspace consistent with the sample, in canonical order, by
// binary search over vertex labels: at each node extend the lowest unlabeled
// vertex, positive branch first. A failed positive check forces the negative
// branch, so each emission costs at most 2n checks. Returns false if the
// visitor stopped the enumeration.
inline bool list_version_space(const Graph& g, const LabeledSample& sample, const HalfspaceVisitor& visit,
                               EnumerationStats* stats = nullptr) {
    ConsistencyChecker checker(g);
    int n = g.vertex_count();
    EnumerationStats local;
    EnumerationStats& st = stats ? *stats : local;
    st = {};
    std::size_t since_output = 0;
    auto check = [&](const LabeledSample& s) {
        ++st.check_calls;
        ++since_output;
        if (since_output > st.max_delay_checks) st.max_delay_checks = since_output;
        return checker.check(s);
    };

    LabeledSample current = sample;
    VertexSet labeled = sample.positives(n) | sample.negatives(n);
    auto recurse = [&](auto&& self, const Halfspace& witness) -> bool {
        Vertex next = -1;
        for (Vertex x = 0; x < n; ++x)
            if (!labeled.contains(x)) {
                next = x;
                break;
            }
        if (next == -1) {
            since_output = 0;
            return visit(witness);  // fully labeled: the witness is the output
        }
        labeled.add(next);
        bool ok = true;
        for (int label : {1, 0}) {
            current.add(next, label);
            // the inherited witness settles one branch for free
            std::optional<Halfspace> sub;
            if (witness.contains(next) == (label == 1))
                sub = witness;
            else
                sub = check(current);
            if (sub && !self(self, *sub)) ok = false;
            current.entries.pop_back();
            if (!ok) break;
        }
        labeled.remove(next);
        return ok;
    };
    auto root = checker.check(sample);
    if (!root) return true;
    return recurse(recurse, *root);
}

inline std::vector<Halfspace> list_version_space(const Graph& g, const LabeledSample& sample,
                                                 EnumerationStats* stats = nullptr) {
    std::vector<Halfspace> out;
    list_version_space(
        g, sample,
        [&](const VertexSet& h) {
            out.push_back(h);
            return true;
        },
        stats);
    return out;
}

// Lists every halfspace of the graph. Fixed-parameter tractable in the clique
// number: each nontrivial halfspace is the union of shadows chosen per
// component of the complemented common neighborhood of its cut edge.
inline bool list_all_fpt(const Graph& g, const HalfspaceVisitor& visit) {
    int n = g.vertex_count();
    std::unordered_set<std::uint64_t> seen;
    std::vector<Halfspace> bucket;  // guards against hash collisions
    auto emit = [&](const VertexSet& h) {
        std::uint64_t key = h.hash();
        if (seen.count(key)) {
            for (const Halfspace& prev : bucket)
                if (prev == h) return true;
        }
        seen.insert(key);
        bucket.push_back(h);
        return visit(h);
    };
    if (!emit(VertexSet(n))) return false;
    if (!emit(VertexSet::full(n))) return false;

    ShadowCache shadows(g);
    std::vector<bool> done_edge(static_cast<std::size_t>(g.edge_count()), false);
    auto edge_done = [&](Vertex a, Vertex b) { return done_edge[static_cast<std::size_t>(g.edge_index(a, b))]; };

    for (auto [a, b] : g.edges()) {
        VertexSet tri = triangle_set(g, a, b);
        InducedSubgraph comp_tri = complement_induced(g, tri);
        const Graph& ct = comp_tri.graph;
        std::vector<VertexSet> comps = components(ct, VertexSet::full(ct.vertex_count()));
        // 2-color each component of the complement; an odd cycle there means
        // no halfspace cuts this edge at all
        std::vector<int> color(static_cast<std::size_t>(ct.vertex_count()), -1);
        bool bipartite = true;
        for (const VertexSet& comp : comps) {
            std::vector<Vertex> queue{comp.first()};
            color[static_cast<std::size_t>(comp.first())] = 0;
            for (std::size_t i = 0; i < queue.size() && bipartite; ++i)
                for (Vertex w : ct.neighbors(queue[i])) {
                    int& cw = color[static_cast<std::size_t>(w)];
                    if (cw == -1) {
                        cw = color[static_cast<std::size_t>(queue[i])] ^ 1;
                        queue.push_back(w);
                    } else if (cw == color[static_cast<std::size_t>(queue[i])]) {
                        bipartite = false;
                        break;
                    }
                }
            if (!bipartite) break;
        }
        if (!bipartite) continue;  // leave the edge unmarked: nothing cuts it

        std::size_t k = comps.size();
        if (k > 62) throw Error("too many side-choice components to enumerate");
        for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                // pick, per component, the color class joining u's side
                VertexSet s(n);
                s.add(u);
                bool skip = false;
                for (std::size_t c = 0; c < k; ++c) {
                    int side = (mask >> c) & 1;
                    for (Vertex x : comps[c])
                        if (color[static_cast<std::size_t>(x)] == side) s.add(comp_tri.to_parent[static_cast<std::size_t>(x)]);
                }
                if (s.contains(v)) continue;
                VertexSet h(n);
                for (Vertex z : s) h |= shadows.shadow(z, v);
                if (h.contains(v)) continue;
                VertexSet hc = h.complement();
                if (!is_mconvex(g, h) || !is_mconvex(g, hc)) skip = true;
                if (!skip) {
                    // every cut edge handled earlier already produced this set
                    for (auto [p, q] : cutset(g, h))
                        if (edge_done(p, q)) {
#ifndef NDEBUG
                            bool already = false;
                            for (const Halfspace& prev : bucket)
                                if (prev == h) already = true;
                            if (!already) throw Error("halfspace missed by an earlier edge");
#endif
                            skip = true;
                            break;
                        }
                }
                if (!skip && !emit(h)) return false;
            }
        }
        done_edge[static_cast<std::size_t>(g.edge_index(a, b))] = true;
    }
    return true;
}

inline std::vector<Halfspace> list_all_fpt(const Graph& g) {
    std::vector<Halfspace> out;
    list_all_fpt(g, [&](const VertexSet& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

}  // namespace mhs
