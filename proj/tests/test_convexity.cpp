#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "mhs/convexity.hpp"
#include "mhs/corpus.hpp"
#include "mhs/oracles.hpp"

using namespace mhs;

namespace {
VertexSet of(int n, std::initializer_list<Vertex> vs) { return VertexSet(n, vs); }
}  // namespace

TEST_CASE("is_mconvex matches the interval definition") {
    Graph p4 = path_graph(4);
    REQUIRE(is_mconvex(p4, of(4, {0, 1})));
    REQUIRE_FALSE(is_mconvex(p4, of(4, {0, 2})));  // misses 1 on 0-1-2
    REQUIRE(is_mconvex(p4, VertexSet(4)));
    REQUIRE(is_mconvex(p4, VertexSet::full(4)));
    Graph c5 = cycle_graph(5);
    REQUIRE_FALSE(is_mconvex(c5, of(5, {0, 2})));  // both arcs are chordless
    REQUIRE(is_mconvex(c5, of(5, {0, 1})));
}

TEST_CASE("mhull equals the brute-force hull on random inputs") {
    std::mt19937_64 rng(5);
    for (int n = 4; n <= 9; ++n)
        for (double p : {0.25, 0.5, 0.75})
            for (int s = 0; s < 4; ++s) {
                Graph g = erdos_renyi_connected(n, p, static_cast<std::uint64_t>(100 * n + 10 * s + int(p * 4)));
                for (int trial = 0; trial < 8; ++trial) {
                    VertexSet x(n);
                    for (Vertex v = 0; v < n; ++v)
                        if (rng() % 3 == 0) x.add(v);
                    VertexSet h = mhull(g, x);
                    REQUIRE(h == hull_bf(g, x));
                    REQUIRE(x.is_subset_of(h));       // extensive
                    REQUIRE(mhull(g, h) == h);        // idempotent
                    REQUIRE(is_mconvex(g, h));
                    REQUIRE(is_mconvex(g, x) == mconvex_bf(g, x));
                    VertexSet y = x;                  // monotone on a superset
                    for (Vertex v = 0; v < n; ++v)
                        if (rng() % 4 == 0) y.add(v);
                    REQUIRE(h.is_subset_of(mhull(g, y)));
                }
            }
}

TEST_CASE("hull examples") {
    Graph c5 = cycle_graph(5);
    REQUIRE(mhull(c5, of(5, {0, 2})) == VertexSet::full(5));
    REQUIRE(mhull(c5, of(5, {0, 1})) == of(5, {0, 1}));
    Graph p4 = path_graph(4);
    REQUIRE(mhull(p4, of(4, {0, 3})) == VertexSet::full(4));
}

TEST_CASE("greedy hull sets generate everything") {
    REQUIRE(hull_set_greedy(path_graph(4)) == of(4, {0, 3}));
    REQUIRE(hull_set_greedy(cycle_graph(5)).size() == 2);
    for (auto& g : {path_graph(5), cycle_graph(6), complete_graph(4), star_graph(4), petersen_graph()}) {
        VertexSet s = hull_set_greedy(g);
        REQUIRE(mhull(g, s) == VertexSet::full(g.vertex_count()));
    }
    // a complete graph has no simplicial shortcut smaller than V
    REQUIRE(hull_set_greedy(complete_graph(3)).size() == 3);
}

TEST_CASE("greedy hull set is minimum on the fixtures") {
    for (auto& g : {path_graph(4), path_graph(5), cycle_graph(5), complete_graph(3), star_graph(4)}) {
        REQUIRE(hull_set_greedy(g).size() == min_hullset_bf(g).size());
    }
}
