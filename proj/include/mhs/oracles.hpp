#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "mhs/graph.hpp"
#include "mhs/vertex_set.hpp"

namespace mhs {

// Brute-force references. Everything here is a literal transcription of a
// definition, kept independent of the fast paths it certifies; use only on
// small graphs (the expensive ones carry explicit size guards).

// All chordless u–v paths, by backtracking over ascending neighbors.
inline std::vector<std::vector<Vertex>> induced_paths(const Graph& g, Vertex u, Vertex v) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{u};
    VertexSet used(g.vertex_count());
    used.add(u);
    auto extend = [&](auto&& self) -> void {
        Vertex last = path.back();
        if (last == v) {
            out.push_back(path);
            return;
        }
        for (Vertex z : g.neighbors(last)) {
            if (used.contains(z)) continue;
            bool chord = false;  // z may touch only the current endpoint
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (g.has_edge(z, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            path.push_back(z);
            used.add(z);
            self(self);
            used.remove(z);
            path.pop_back();
        }
    };
    extend(extend);
    return out;
}

// I(u,v): vertices lying on some chordless u–v path; empty when u == v.
inline VertexSet interval_bf(const Graph& g, Vertex u, Vertex v) {
    VertexSet s(g.vertex_count());
    if (u == v) return s;
    for (const auto& path : induced_paths(g, u, v))
        for (Vertex x : path) s.add(x);
    return s;
}

// u/v = {z : u ∈ I(z,v)}.
inline VertexSet shadow_bf(const Graph& g, Vertex u, Vertex v) {
    VertexSet s(g.vertex_count());
    for (Vertex z : g.vertices())
        if (interval_bf(g, z, v).contains(u)) s.add(z);
    return s;
}

namespace detail {

// Lazy per-pair interval table shared by the fixpoint-style oracles.
class IntervalTable {
public:
    explicit IntervalTable(const Graph& g) : g_(&g), cache_(static_cast<std::size_t>(g.vertex_count())) {
        for (auto& row : cache_) row.resize(cache_.size());
    }

    const VertexSet& get(Vertex u, Vertex v) const {
        auto& slot = cache_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (!slot) slot = interval_bf(*g_, u, v);
        return *slot;
    }

private:
    const Graph* g_;
    mutable std::vector<std::vector<std::optional<VertexSet>>> cache_;
};

}  // namespace detail

inline bool mconvex_bf(const Graph& g, const VertexSet& x) {
    detail::IntervalTable ivl(g);
    for (Vertex u : x)
        for (Vertex v = x.next(u); v != -1; v = x.next(v))
            if (!ivl.get(u, v).is_subset_of(x)) return false;
    return true;
}

inline VertexSet hull_bf(const Graph& g, const VertexSet& x) {
    detail::IntervalTable ivl(g);
    VertexSet t = x;
    bool grew = true;
    while (grew) {
        grew = false;
        VertexSet add(g.vertex_count());
        for (Vertex u : t)
            for (Vertex v = t.next(u); v != -1; v = t.next(v)) add |= ivl.get(u, v);
        add -= t;
        if (!add.empty()) {
            t |= add;
            grew = true;
        }
    }
    return t;
}

// All halfspaces, by filtering every subset; canonical order.
inline std::vector<VertexSet> halfspaces_bf(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("halfspaces_bf limited to n <= 20");
    detail::IntervalTable table(g);
    std::vector<std::vector<std::uint32_t>> ivl(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
        ivl[static_cast<std::size_t>(u)].resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::uint32_t m = 0;
            if (u != v)
                for (Vertex x : table.get(u, v)) m |= std::uint32_t{1} << x;
            ivl[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = m;
        }
    }
    auto convex_mask = [&](std::uint32_t mask) {
        for (Vertex u = 0; u < n; ++u) {
            if (!(mask >> u & 1)) continue;
            for (Vertex v = u + 1; v < n; ++v)
                if ((mask >> v & 1) && (ivl[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] & ~mask))
                    return false;
        }
        return true;
    };
    std::vector<VertexSet> out;
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!convex_mask(mask) || !convex_mask(full & ~mask)) continue;
        VertexSet h(n);
        for (Vertex x = 0; x < n; ++x)
            if (mask >> x & 1) h.add(x);
        out.push_back(h);
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
    return out;
}

// Smallest set whose hull is V; first one in subset-size-then-lexicographic order.
inline VertexSet min_hullset_bf(const Graph& g) {
    int n = g.vertex_count();
    VertexSet all = VertexSet::full(n);
    std::vector<Vertex> chosen;
    auto search = [&](auto&& self, int k, Vertex from) -> std::optional<VertexSet> {
        if (k == 0) {
            VertexSet s(n);
            for (Vertex x : chosen) s.add(x);
            if (hull_bf(g, s) == all) return s;
            return std::nullopt;
        }
        for (Vertex x = from; x <= n - k; ++x) {
            chosen.push_back(x);
            if (auto found = self(self, k - 1, x + 1)) return found;
            chosen.pop_back();
        }
        return std::nullopt;
    };
    for (int k = 1; k <= n; ++k)
        if (auto found = search(search, k, 0)) return *found;
    return all;  // unreachable: hull of V is V
}

// Largest d with some d-set shattered by the halfspaces.
inline int vc_dim_bf(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("vc_dim_bf limited to n <= 12");
    std::vector<std::uint32_t> hs;
    for (const VertexSet& h : halfspaces_bf(g)) {
        std::uint32_t m = 0;
        for (Vertex x : h) m |= std::uint32_t{1} << x;
        hs.push_back(m);
    }
    int best = 0;
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int size = std::popcount(s);
        if (size <= best) continue;
        std::unordered_set<std::uint32_t> traces;
        for (std::uint32_t h : hs) traces.insert(h & s);
        if (traces.size() == std::uint32_t{1} << size) best = size;
    }
    return best;
}

// □_uv: endpoints plus every vertex of a 4-cycle using the edge uv.
inline VertexSet four_cycles_bf(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("four_cycles_bf requires an edge");
    int n = g.vertex_count();
    VertexSet s(n);
    s.add(u);
    s.add(v);
    auto is_uv = [&](Vertex a, Vertex b) { return (a == u && b == v) || (a == v && b == u); };
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d) || !g.has_edge(d, a)) continue;
                    if (is_uv(a, b) || is_uv(b, c) || is_uv(c, d) || is_uv(d, a)) {
                        s.add(a);
                        s.add(b);
                        s.add(c);
                        s.add(d);
                    }
                }
    return s;
}

// Halfspaces whose cut contains the oriented edge (u,v): u inside, v outside.
inline std::vector<VertexSet> constraint_semantics_bf(const Graph& g, Vertex u, Vertex v) {
    std::vector<VertexSet> out;
    for (const VertexSet& h : halfspaces_bf(g))
        if (h.contains(u) && !h.contains(v)) out.push_back(h);
    return out;
}

// Monophonic diameter: longest chordless path realizing a pairwise monophonic
// distance (the length of the longest chordless path between some pair).
inline int monophonic_diameter_bf(const Graph& g) {
    int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("monophonic_diameter_bf limited to n <= 16");
    int best = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (const auto& path : induced_paths(g, u, v))
                best = std::max(best, static_cast<int>(path.size()) - 1);
    return best;
}

}  // namespace mhs
