#pragma once

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mhs/convexity.hpp"
#include "mhs/graph.hpp"
#include "mhs/shadows.hpp"
#include "mhs/twosat.hpp"

namespace mhs {

// Multiset of labeled vertices. Duplicates allowed; a vertex carrying both
// labels is permitted here and rejected by the realizable operations.
struct LabeledSample {
    std::vector<std::pair<Vertex, int>> entries;  // (vertex, label in {0,1})

    LabeledSample() = default;
    LabeledSample(std::initializer_list<std::pair<Vertex, int>> e) : entries(e) {}

    void add(Vertex v, int label) { entries.emplace_back(v, label); }
    std::size_t size() const { return entries.size(); }

    VertexSet positives(int universe) const {
        VertexSet s(universe);
        for (auto [v, y] : entries)
            if (y == 1) s.add(v);
        return s;
    }

    VertexSet negatives(int universe) const {
        VertexSet s(universe);
        for (auto [v, y] : entries)
            if (y == 0) s.add(v);
        return s;
    }

    bool contradictory(int universe) const { return positives(universe).intersects(negatives(universe)); }

    bool consistent_with(const VertexSet& h) const {
        for (auto [v, y] : entries)
            if (h.contains(v) != (y == 1)) return false;
        return true;
    }
};

// The candidate sets attached to one oriented edge (u,v):
//   tri_minus: common neighbors of u and v
//   square:    {u,v} plus every vertex on a 4-cycle through the edge
//   a_set:     square minus tri_minus, split by distance into a_u / a_v
//   t_components: components after deleting every edge inside square ∪ tri_minus
struct CandidateSets {
    VertexSet tri_minus, square, a_set, a_u, a_v;
    std::vector<VertexSet> t_components;
};

inline CandidateSets candidate_sets(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("candidate_sets requires an edge");
    int n = g.vertex_count();
    CandidateSets cs{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), {}};
    cs.tri_minus = g.neighbors(u) & g.neighbors(v);
    cs.square.add(u);
    cs.square.add(v);
    VertexSet nu = g.neighbors(u);
    nu.remove(v);
    VertexSet nv = g.neighbors(v);
    nv.remove(u);
    for (Vertex a : nu)
        for (Vertex b : g.neighbors(a) & nv)
            if (b != a) {  // 4-cycle u-a-b-v, not necessarily induced
                cs.square.add(a);
                cs.square.add(b);
            }
    cs.a_set = cs.square - cs.tri_minus;
    std::vector<int> du = bfs_distances(g, u), dv = bfs_distances(g, v);
    for (Vertex x : cs.a_set)
        (du[static_cast<std::size_t>(x)] < dv[static_cast<std::size_t>(x)] ? cs.a_u : cs.a_v).add(x);
    // components of G minus the edges internal to square ∪ tri_minus
    VertexSet core = cs.square | cs.tri_minus;
    VertexSet seen(n);
    for (Vertex s = 0; s < n; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(n);
        comp.add(s);
        std::vector<Vertex> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex x = queue[i];
            VertexSet nb = g.neighbors(x);
            if (core.contains(x)) nb -= core;
            for (Vertex w : nb)
                if (!comp.contains(w)) {
                    comp.add(w);
                    queue.push_back(w);
                }
        }
        seen |= comp;
        cs.t_components.push_back(std::move(comp));
    }
    return cs;
}

// The nine constraint families that characterize "halfspace with oriented cut
// edge (u,v), u inside". Kept apart so each family can be certified on its own.
enum class ConstraintFamily : int {
    conv = 0,    // units: hull of a_u inside, hull of a_v outside
    triangle,    // non-adjacent common-neighbor pairs split across the cut
    tree,        // off-core components are monochromatic
    path3_u,     // chordless x-y-z, x in a_u, z common neighbor: z in ⇒ y in
    path3_v,     //   symmetric for a_v
    path4_u,     // chordless x-w-y-z, same endpoints rule
    path4_v,
    edge_u,      // edge {x,y}, x in hull(a_u), far common neighbor z in ⇒ y in
    edge_v,
};

inline constexpr int kConstraintFamilies = 9;

inline const char* family_name(ConstraintFamily f) {
    static const char* names[kConstraintFamilies] = {"conv",    "triangle", "tree",    "path3_u", "path3_v",
                                                     "path4_u", "path4_v",  "edge_u", "edge_v"};
    return names[static_cast<int>(f)];
}

// Sample-independent part of the consistency formula for one oriented edge.
struct OrientedConstraints {
    Vertex u = -1, v = -1;
    CandidateSets sets;
    VertexSet conv_a_u, conv_a_v;
    std::array<std::vector<std::pair<int, int>>, kConstraintFamilies> families;

    const std::vector<std::pair<int, int>>& family(ConstraintFamily f) const {
        return families[static_cast<std::size_t>(static_cast<int>(f))];
    }

    std::size_t clause_count() const {
        std::size_t c = 0;
        for (const auto& f : families) c += f.size();
        return c;
    }

    void append_to(Formula2& f) const {
        for (const auto& fam : families)
            for (auto [a, b] : fam) f.add_clause(a, b);
    }
};

inline OrientedConstraints oriented_constraints(const Graph& g, Vertex u, Vertex v) {
    OrientedConstraints oc;
    oc.u = u;
    oc.v = v;
    oc.sets = candidate_sets(g, u, v);
    const CandidateSets& cs = oc.sets;
    oc.conv_a_u = mhull(g, cs.a_u);
    oc.conv_a_v = mhull(g, cs.a_v);
    auto in = [](Vertex x) { return Formula2::lit(x, true); };
    auto out = [](Vertex x) { return Formula2::lit(x, false); };
    auto& fam = oc.families;
    auto push = [&](ConstraintFamily f, int a, int b) {
        fam[static_cast<std::size_t>(static_cast<int>(f))].emplace_back(a, b);
    };

    for (Vertex x : oc.conv_a_u) push(ConstraintFamily::conv, in(x), in(x));
    for (Vertex x : oc.conv_a_v) push(ConstraintFamily::conv, out(x), out(x));

    for (Vertex x : cs.tri_minus)
        for (Vertex y = cs.tri_minus.next(x); y != -1; y = cs.tri_minus.next(y))
            if (!g.has_edge(x, y)) {
                push(ConstraintFamily::triangle, in(x), in(y));
                push(ConstraintFamily::triangle, out(x), out(y));
            }

    for (const VertexSet& comp : cs.t_components) {
        Vertex rep = comp.first();
        for (Vertex x = comp.next(rep); x != -1; x = comp.next(x)) {
            push(ConstraintFamily::tree, out(x), in(rep));
            push(ConstraintFamily::tree, in(x), out(rep));
        }
    }

    // chordless 3-paths (x,y,z) and 4-paths (x,w,y,z) from a side set into the
    // common neighborhood; the clause always binds the last two vertices
    auto paths = [&](const VertexSet& side, ConstraintFamily f3, ConstraintFamily f4, bool positive) {
        auto last_two = [&](ConstraintFamily f, Vertex y, Vertex z) {
            if (positive)
                push(f, in(y), out(z));
            else
                push(f, out(y), in(z));
        };
        for (Vertex x : side)
            for (Vertex z : cs.tri_minus) {
                if (z == x || g.has_edge(x, z)) continue;
                for (Vertex y : g.neighbors(x) & g.neighbors(z)) last_two(f3, y, z);
                for (Vertex w : g.neighbors(x)) {
                    if (w == z || g.has_edge(w, z)) continue;
                    for (Vertex y : g.neighbors(w) & g.neighbors(z))
                        if (y != x && !g.has_edge(x, y)) last_two(f4, y, z);
                }
            }
    };
    paths(cs.a_u, ConstraintFamily::path3_u, ConstraintFamily::path4_u, true);
    paths(cs.a_v, ConstraintFamily::path3_v, ConstraintFamily::path4_v, false);

    // hull-adjacent edges against far common neighbors (z distinct from x:
    // the border-clique argument needs two distinct cut vertices)
    for (auto [a, b] : g.edges())
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            VertexSet far = cs.tri_minus - g.neighbors(x);
            far.remove(x);
            if (oc.conv_a_u.contains(x))
                for (Vertex z : far) push(ConstraintFamily::edge_u, in(y), out(z));
            if (oc.conv_a_v.contains(x))
                for (Vertex z : far) push(ConstraintFamily::edge_v, out(y), in(z));
        }
    return oc;
}

inline Formula2 build_formula(const Graph& g, Vertex u, Vertex v, const LabeledSample& sample) {
    Formula2 f(g.vertex_count());
    oriented_constraints(g, u, v).append_to(f);
    for (auto [x, y] : sample.entries) f.add_unit(Formula2::lit(x, y == 1));
    return f;
}

// Consistency checker with per-oriented-edge constraint memoization, for
// callers that probe many samples against one graph.
class ConsistencyChecker {
public:
    explicit ConsistencyChecker(const Graph& g)
        : g_(&g), cache_(2 * static_cast<std::size_t>(g.edge_count())) {}

    const Graph& graph() const { return *g_; }

    const OrientedConstraints& constraints(Vertex u, Vertex v) const {
        std::size_t i = 2 * static_cast<std::size_t>(g_->edge_index(u, v)) + (u > v ? 1 : 0);
        if (!cache_[i]) cache_[i] = std::make_unique<OrientedConstraints>(oriented_constraints(*g_, u, v));
        return *cache_[i];
    }

    // Finds a halfspace consistent with the sample, or nothing. Trivial
    // halfspaces first (an empty cut matches no oriented edge), then both
    // orientations of every edge in ascending order; the first satisfiable
    // orientation wins, which makes the result deterministic.
    std::optional<Halfspace> check(const LabeledSample& sample) const {
        int n = g_->vertex_count();
        for (auto [x, y] : sample.entries)
            if (x < 0 || x >= n) throw std::invalid_argument("sample vertex outside graph");
        VertexSet pos = sample.positives(n), neg = sample.negatives(n);
        if (pos.intersects(neg)) return std::nullopt;
        if (neg.empty()) return VertexSet::full(n);
        if (pos.empty()) return VertexSet(n);
        for (auto [a, b] : g_->edges())
            for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
                Formula2 f(n);
                constraints(u, v).append_to(f);
                for (Vertex x : pos) f.add_unit(Formula2::lit(x, true));
                for (Vertex x : neg) f.add_unit(Formula2::lit(x, false));
                if (auto assignment = f.solve()) {
                    VertexSet h(n);
                    for (Vertex x = 0; x < n; ++x)
                        if ((*assignment)[static_cast<std::size_t>(x)]) h.add(x);
#ifndef NDEBUG
                    if (!is_halfspace(*g_, h) || !sample.consistent_with(h))
                        throw Error("consistency check produced an invalid halfspace");
#endif
                    return h;
                }
            }
        return std::nullopt;
    }

private:
    const Graph* g_;
    mutable std::vector<std::unique_ptr<OrientedConstraints>> cache_;
};

inline std::optional<Halfspace> mh_check(const Graph& g, const LabeledSample& sample) {
    return ConsistencyChecker(g).check(sample);
}

// Witness halfspace with ∅ ⊊ H ⊊ V, if one exists. Scans ascending vertex
// pairs labeled (1,0); sufficient because the class is closed under
// complement, so a nontrivial halfspace splits some ascending pair this way.
inline std::optional<Halfspace> has_nontrivial_halfspace(const Graph& g) {
    ConsistencyChecker checker(g);
    int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (auto h = checker.check(LabeledSample{{u, 1}, {v, 0}})) return h;
    return std::nullopt;
}

}  // namespace mhs
