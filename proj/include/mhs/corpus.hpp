#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mhs/errors.hpp"
#include "mhs/graph.hpp"

namespace mhs {

inline Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

// Star on n vertices: center 0, leaves 1..n-1 (K_{1,n-1}).
inline Graph star_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

inline Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

inline Graph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, e);
}

// G(n,p) conditioned on connectivity: keep drawing until the graph connects.
// Draws are consumed in a fixed pair order, so (n, p, seed) pins the result.
inline Graph erdos_renyi_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in (0,1]");
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (uniform() < p) e.emplace_back(u, v);
        Graph g(n, e);
        if (g.connected()) return g;
    }
    throw Error("no connected draw found; edge probability too small");
}

}  // namespace mhs
