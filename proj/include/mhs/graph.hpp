#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mhs/errors.hpp"
#include "mhs/vertex_set.hpp"

namespace mhs {

// Simple undirected connected graph, immutable after construction.
// Vertices are dense identifiers 0..n-1 with an external name per vertex.
class Graph {
public:
    Graph() = default;

    // Programmatic constructor. Derived objects (induced complements) may be
    // disconnected; loaded graphs are always checked.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list,
          std::vector<std::string> names = {}, bool require_connected = false)
        : n_(n), names_(std::move(names)) {
        if (names_.empty()) {
            names_.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i + 1));
        }
        if (static_cast<int>(names_.size()) != n) throw Error("name list does not match vertex count");
        adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n) throw Error("edge endpoint out of range");
            if (u == v) throw Error("self-loop");
            if (adj_[static_cast<std::size_t>(u)].contains(v)) throw Error("duplicate edge");
            adj_[static_cast<std::size_t>(u)].add(v);
            adj_[static_cast<std::size_t>(v)].add(u);
        }
        for (int i = 0; i < n; ++i) name_to_id_.emplace(names_[static_cast<std::size_t>(i)], i);
        finish();
        if (require_connected && !connected_) throw Error("graph is disconnected");
    }

    // Parses the edge-list text format: one edge per line, two whitespace
    // separated vertex names; blank lines ignored. Identifiers are assigned
    // densely by first appearance. The loaded graph must be connected.
    static Graph load(const std::string& text) {
        Graph g;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        std::vector<std::pair<Vertex, Vertex>> edges;
        std::set<std::pair<Vertex, Vertex>> seen_edges;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string a, b, extra;
            if (!(ls >> a)) continue;  // blank line
            if (!(ls >> b) || (ls >> extra))
                throw LoadError(LoadError::Kind::malformed_line, lineno,
                                "line " + std::to_string(lineno) + ": expected two vertex names, got \"" + line + "\"");
            if (a == b)
                throw LoadError(LoadError::Kind::self_loop, lineno,
                                "line " + std::to_string(lineno) + ": self-loop \"" + a + " " + b + "\"");
            Vertex u = g.intern(a), v = g.intern(b);
            if (!seen_edges.emplace(std::min(u, v), std::max(u, v)).second)
                throw LoadError(LoadError::Kind::duplicate_edge, lineno,
                                "line " + std::to_string(lineno) + ": duplicate edge \"" + a + " " + b + "\"");
            edges.emplace_back(u, v);
        }
        if (edges.empty()) throw LoadError(LoadError::Kind::empty_input, 0, "empty input: no edges");
        g.adj_.assign(static_cast<std::size_t>(g.n_), VertexSet(g.n_));
        for (auto [u, v] : edges) {
            g.adj_[static_cast<std::size_t>(u)].add(v);
            g.adj_[static_cast<std::size_t>(v)].add(u);
        }
        g.finish();
        if (!g.connected_) {
            Vertex missed = g.first_unreachable();
            throw LoadError(LoadError::Kind::disconnected, 0,
                            "graph is disconnected: vertex \"" + g.names_[static_cast<std::size_t>(missed)] +
                                "\" is unreachable from \"" + g.names_[0] + "\"");
        }
        return g;
    }

    static Graph load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open graph file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return load(ss.str());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool connected() const { return connected_; }

    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(check(v))]; }
    int degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(check(v)); }

    // edge list sorted ascending, each as (min, max)
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    // index of an edge in edges(), endpoints in either order
    int edge_index(Vertex u, Vertex v) const {
        auto key = std::minmax(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair<Vertex, Vertex>(key.first, key.second));
        if (it == edges_.end() || *it != std::pair<Vertex, Vertex>(key.first, key.second))
            throw std::invalid_argument("no such edge");
        return static_cast<int>(it - edges_.begin());
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    const std::string& name(Vertex v) const { return names_[static_cast<std::size_t>(check(v))]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<Vertex> id_of(const std::string& name) const {
        auto it = name_to_id_.find(name);
        if (it == name_to_id_.end()) return std::nullopt;
        return it->second;
    }

private:
    Vertex check(Vertex v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("not a vertex: " + std::to_string(v));
        return v;
    }

    Vertex intern(const std::string& name) {
        auto it = name_to_id_.find(name);
        if (it != name_to_id_.end()) return it->second;
        Vertex id = n_++;
        names_.push_back(name);
        name_to_id_.emplace(name, id);
        return id;
    }

    void finish() {
        edges_.clear();
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[static_cast<std::size_t>(u)])
                if (u < v) edges_.emplace_back(u, v);
        connected_ = n_ <= 1 || first_unreachable() == -1;
    }

    Vertex first_unreachable() const {
        if (n_ == 0) return -1;
        VertexSet seen(n_);
        seen.add(0);
        std::vector<Vertex> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : adj_[static_cast<std::size_t>(queue[i])])
                if (!seen.contains(w)) {
                    seen.add(w);
                    queue.push_back(w);
                }
        for (Vertex v = 0; v < n_; ++v)
            if (!seen.contains(v)) return v;
        return -1;
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> name_to_id_;
    bool connected_ = true;
};

inline Graph load_graph(const std::string& edge_list_text) { return Graph::load(edge_list_text); }

// BFS distances from src; -1 for unreachable vertices
inline std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), -1);
    d[static_cast<std::size_t>(src)] = 0;
    std::vector<Vertex> queue{src};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex u = queue[i];
        for (Vertex w : g.neighbors(u))
            if (d[static_cast<std::size_t>(w)] < 0) {
                d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    return d;
}

inline int distance(const Graph& g, Vertex u, Vertex v) {
    int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
    if (d < 0) throw Error("vertices are not connected");
    return d;
}

// Deterministic shortest path: each vertex's BFS parent is its
// lowest-identifier neighbor in the previous layer.
inline std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v) {
    int n = g.vertex_count();
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    VertexSet visited(n), frontier(n);
    visited.add(u);
    frontier.add(u);
    while (!frontier.empty() && !visited.contains(v)) {
        VertexSet next(n);
        for (Vertex w : frontier)
            for (Vertex x : g.neighbors(w))
                if (!visited.contains(x) && !next.contains(x)) {
                    parent[static_cast<std::size_t>(x)] = w;
                    next.add(x);
                }
        visited |= next;
        frontier = next;
    }
    if (!visited.contains(v)) throw Error("vertices are not connected");
    std::vector<Vertex> path{v};
    while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

// true iff every a-b path (endpoints included) meets s
inline bool is_separator(const Graph& g, const VertexSet& s, Vertex a, Vertex b) {
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count())
        throw std::invalid_argument("not a vertex");
    if (a == b) throw std::invalid_argument("separator query requires distinct vertices");
    if (s.contains(a) || s.contains(b)) return true;
    VertexSet seen(g.vertex_count());
    seen.add(a);
    std::vector<Vertex> queue{a};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex w : g.neighbors(queue[i])) {
            if (w == b) return false;
            if (!seen.contains(w) && !s.contains(w)) {
                seen.add(w);
                queue.push_back(w);
            }
        }
    }
    return true;
}

// connected components of G[x], each ascending, ordered by smallest member
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& x) {
    std::vector<VertexSet> out;
    VertexSet seen(g.vertex_count());
    for (Vertex s : x) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.vertex_count());
        comp.add(s);
        std::vector<Vertex> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : g.neighbors(queue[i]))
                if (x.contains(w) && !comp.contains(w)) {
                    comp.add(w);
                    queue.push_back(w);
                }
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_clique(const Graph& g, const VertexSet& x) {
    for (Vertex v : x) {
        VertexSet rest = x;
        rest.remove(v);
        if (!rest.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

namespace detail {
inline void max_clique_expand(const Graph& g, int r, VertexSet p, int& best) {
    if (p.empty()) {
        best = std::max(best, r);
        return;
    }
    if (r + p.size() <= best) return;
    // pivot on the candidate with most candidate neighbors
    Vertex pivot = -1;
    int pivot_deg = -1;
    for (Vertex v : p) {
        int d = (p & g.neighbors(v)).size();
        if (d > pivot_deg) {
            pivot_deg = d;
            pivot = v;
        }
    }
    VertexSet branch = p - g.neighbors(pivot);
    for (Vertex v : branch) {
        max_clique_expand(g, r + 1, p & g.neighbors(v), best);
        p.remove(v);
    }
}
}  // namespace detail

// exact maximum-clique size, branch and bound with pivoting
inline int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int best = 0;
    detail::max_clique_expand(g, 0, g.vertices(), best);
    return best;
}

inline int omega_tilde(const Graph& g) { return std::max(clique_number(g), 3); }

struct InducedSubgraph {
    Graph graph;                     // vertices 0..|x|-1
    std::vector<Vertex> to_parent;   // new id -> id in the parent graph
};

// graph on x whose edges are exactly the non-edges of G[x]; may be disconnected
inline InducedSubgraph complement_induced(const Graph& g, const VertexSet& x) {
    std::vector<Vertex> ids = x.to_vector();
    int k = static_cast<int>(ids.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (Vertex v : ids) names.push_back(g.name(v));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!g.has_edge(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]))
                edges.emplace_back(i, j);
    return {Graph(k, edges, std::move(names)), std::move(ids)};
}

inline int geodesic_diameter(const Graph& g) {
    int best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s)
        for (int d : bfs_distances(g, s)) best = std::max(best, d);
    return best;
}

}  // namespace mhs
