#pragma once

#include <cassert>

#include "mhs/graph.hpp"

namespace mhs {

// Convexity test without interval computation: x is convex iff for every
// component C of G minus x, the neighborhood N(C) ∩ x is a clique. A
// non-adjacent border pair a,b admits a chordless a-b path through C whose
// interior escapes x, and conversely.
inline bool is_mconvex(const Graph& g, const VertexSet& x) {
    for (const VertexSet& comp : components(g, x.complement())) {
        VertexSet nb(g.vertex_count());
        for (Vertex c : comp) nb |= g.neighbors(c);
        nb &= x;
        if (!is_clique(g, nb)) return false;
    }
    return true;
}

namespace detail {
// shortest a-b path whose interior stays inside `inside` (a,b adjacent to it)
inline std::vector<Vertex> path_through(const Graph& g, const VertexSet& inside, Vertex a, Vertex b) {
    VertexSet allowed = inside;
    allowed.add(a);
    allowed.add(b);
    int n = g.vertex_count();
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    VertexSet visited(n), frontier(n);
    visited.add(a);
    frontier.add(a);
    while (!frontier.empty() && !visited.contains(b)) {
        VertexSet next(n);
        for (Vertex w : frontier)
            for (Vertex x : g.neighbors(w))
                if (allowed.contains(x) && !visited.contains(x) && !next.contains(x)) {
                    parent[static_cast<std::size_t>(x)] = w;
                    next.add(x);
                }
        visited |= next;
        frontier = next;
    }
    assert(visited.contains(b));
    std::vector<Vertex> path{b};
    while (path.back() != a) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}
}  // namespace detail

// Smallest convex superset. Closure step: while some component C of the
// complement sees two non-adjacent hull vertices a,b, the interior of a
// shortest a-b path through C lies on a chordless path between hull members
// and is absorbed. Deterministic: first component by smallest member, first
// pair in ascending order.
inline VertexSet mhull(const Graph& g, const VertexSet& x) {
    VertexSet t = x;
    for (;;) {
        bool grew = false;
        for (const VertexSet& comp : components(g, t.complement())) {
            VertexSet nb(g.vertex_count());
            for (Vertex c : comp) nb |= g.neighbors(c);
            nb &= t;
            Vertex pa = -1, pb = -1;
            for (Vertex a : nb) {
                for (Vertex b = nb.next(a); b != -1; b = nb.next(b))
                    if (!g.has_edge(a, b)) {
                        pa = a;
                        pb = b;
                        break;
                    }
                if (pa != -1) break;
            }
            if (pa == -1) continue;
            std::vector<Vertex> path = detail::path_through(g, comp, pa, pb);
            for (std::size_t i = 1; i + 1 < path.size(); ++i) t.add(path[i]);
            grew = true;
            break;
        }
        if (!grew) {
            assert(is_mconvex(g, t));
            return t;
        }
    }
}

// Hull set: all simplicial vertices (their neighborhood is a clique, so no
// chordless path can generate them), then greedily the lowest-identifier
// vertex maximizing hull growth until the hull covers the graph.
inline VertexSet hull_set_greedy(const Graph& g) {
    int n = g.vertex_count();
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if (is_clique(g, g.neighbors(v))) s.add(v);
    VertexSet hull = s.empty() ? VertexSet(n) : mhull(g, s);
    const VertexSet all = g.vertices();
    while (!(hull == all)) {
        Vertex best = -1;
        int best_size = -1;
        for (Vertex v : all - s) {
            VertexSet cand = s;
            cand.add(v);
            int sz = mhull(g, cand).size();
            if (sz > best_size) {
                best_size = sz;
                best = v;
            }
        }
        s.add(best);
        hull = mhull(g, s);
    }
    return s;
}

}  // namespace mhs
