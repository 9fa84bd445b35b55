#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mhs/convexity.hpp"
#include "mhs/graph.hpp"

namespace mhs {

// A halfspace is carried by its positive side; the complement is implicit.
// H and its complement are distinct halfspaces.
using Halfspace = VertexSet;

// Shadow z/v over the edge {z,v}: all x from which v is "behind" z, i.e.
// N(v)∖{z} does not separate z from x. Computed as the component of z in
// G minus N(v)∖{z}, minus v itself. Contains z, never v.
inline VertexSet edge_shadow(const Graph& g, Vertex z, Vertex v) {
    if (!g.has_edge(z, v)) throw std::invalid_argument("edge_shadow requires adjacent vertices");
    VertexSet blocked = g.neighbors(v);
    blocked.remove(z);
    VertexSet comp(g.vertex_count());
    comp.add(z);
    std::vector<Vertex> queue{z};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : g.neighbors(queue[i]))
            if (!blocked.contains(w) && !comp.contains(w)) {
                comp.add(w);
                queue.push_back(w);
            }
    comp.remove(v);
    return comp;
}

// Lazy per-oriented-edge shadow memo; 2m entries, shared by enumeration and
// the learners. Read-only after each entry is first filled.
class ShadowCache {
public:
    explicit ShadowCache(const Graph& g) : g_(&g), memo_(2 * static_cast<std::size_t>(g.edge_count())) {}

    const VertexSet& shadow(Vertex z, Vertex v) const {
        std::size_t i = 2 * static_cast<std::size_t>(g_->edge_index(z, v)) + (z > v ? 1 : 0);
        if (!memo_[i]) memo_[i] = edge_shadow(*g_, z, v);
        return *memo_[i];
    }

    const Graph& graph() const { return *g_; }

private:
    const Graph* g_;
    mutable std::vector<std::optional<VertexSet>> memo_;
};

// border Γ(h): vertices of h with a neighbor outside h
inline VertexSet border(const Graph& g, const VertexSet& h) {
    VertexSet out(g.vertex_count());
    VertexSet rest = h.complement();
    for (Vertex u : h)
        if (g.neighbors(u).intersects(rest)) out.add(u);
    return out;
}

// cut edges oriented inside-endpoint first, ascending
inline std::vector<std::pair<Vertex, Vertex>> cutset(const Graph& g, const VertexSet& h) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u : h)
        for (Vertex v : g.neighbors(u) - h) out.emplace_back(u, v);
    return out;  // ascending by construction: u ascending, then v ascending
}

// h is a halfspace iff both borders induce cliques
inline bool is_halfspace(const Graph& g, const VertexSet& h) {
    return is_clique(g, border(g, h)) && is_clique(g, border(g, h.complement()));
}

// △_uv = (N(u) ∩ N(v)) ∪ {u,v}
inline VertexSet triangle_set(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("triangle_set requires an edge");
    VertexSet t = g.neighbors(u) & g.neighbors(v);
    t.add(u);
    t.add(v);
    return t;
}

// A halfspace is the union of the shadows z/v of its members z in △_uv, for
// any oriented cut edge (u,v) with u inside. The equality is checked and a
// mismatch raises an internal-consistency error.
inline VertexSet shadow_reconstruct(const Graph& g, const Halfspace& h, Vertex u, Vertex v) {
    if (!g.has_edge(u, v) || !h.contains(u) || h.contains(v))
        throw std::invalid_argument("shadow_reconstruct requires an oriented cut edge with u inside h");
    if (!is_halfspace(g, h)) throw std::invalid_argument("shadow_reconstruct requires a halfspace");
    VertexSet out(g.vertex_count());
    for (Vertex z : triangle_set(g, u, v) & h) out |= edge_shadow(g, z, v);
    if (!(out == h)) throw Error("shadow reconstruction does not reproduce the halfspace");
    return out;
}

// One cut edge per border vertex; the border is a clique, so the cover has at
// most clique_number(g) edges, and the shadows of the cover rebuild h.
inline std::vector<std::pair<Vertex, Vertex>> sparse_shadow_cover(const Graph& g, const Halfspace& h) {
    if (h.empty() || h == g.vertices())
        throw std::invalid_argument("sparse_shadow_cover requires a nontrivial halfspace");
    if (!is_halfspace(g, h)) throw std::invalid_argument("sparse_shadow_cover requires a halfspace");
    std::vector<std::pair<Vertex, Vertex>> cover;
    VertexSet check(g.vertex_count());
    for (Vertex z : border(g, h)) {
        Vertex v = (g.neighbors(z) - h).first();
        cover.emplace_back(z, v);
        check |= edge_shadow(g, z, v);
    }
    if (!(check == h)) throw Error("sparse shadow cover does not reproduce the halfspace");
    return cover;
}

}  // namespace mhs
