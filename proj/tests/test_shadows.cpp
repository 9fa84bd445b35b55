#include <catch2/catch_amalgamated.hpp>

#include "mhs/corpus.hpp"
#include "mhs/oracles.hpp"
#include "mhs/shadows.hpp"

using namespace mhs;

namespace {
VertexSet of(int n, std::initializer_list<Vertex> vs) { return VertexSet(n, vs); }
}  // namespace

TEST_CASE("edge shadows on the fixtures") {
    Graph p5 = path_graph(5);
    REQUIRE(edge_shadow(p5, 1, 2) == of(5, {0, 1}));
    REQUIRE(edge_shadow(p5, 2, 1) == of(5, {2, 3, 4}));
    Graph k3 = complete_graph(3);
    REQUIRE(edge_shadow(k3, 0, 1) == of(3, {0}));
    Graph star = star_graph(4);
    REQUIRE(edge_shadow(star, 1, 0) == of(4, {1}));      // leaf away from center
    REQUIRE(edge_shadow(star, 0, 1) == of(4, {0, 2, 3}));  // center away from a leaf
    REQUIRE_THROWS_AS(edge_shadow(p5, 0, 2), std::invalid_argument);
}

TEST_CASE("edge shadows match the interval definition") {
    for (auto& g : {path_graph(5), cycle_graph(5), cycle_graph(6), complete_graph(4), star_graph(5),
                    petersen_graph(), erdos_renyi_connected(8, 0.4, 3), erdos_renyi_connected(9, 0.3, 4)}) {
        for (auto [a, b] : g.edges())
            for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
                VertexSet s = edge_shadow(g, u, v);
                REQUIRE(s == shadow_bf(g, u, v));
                REQUIRE(s.contains(u));
                REQUIRE_FALSE(s.contains(v));
            }
    }
}

TEST_CASE("shadow cache memoizes per oriented edge") {
    Graph g = cycle_graph(6);
    ShadowCache cache(g);
    for (auto [u, v] : g.edges()) {
        REQUIRE(cache.shadow(u, v) == edge_shadow(g, u, v));
        REQUIRE(cache.shadow(v, u) == edge_shadow(g, v, u));
        REQUIRE(cache.shadow(u, v) == cache.shadow(u, v));
    }
}

TEST_CASE("border and cutset") {
    Graph p5 = path_graph(5);
    VertexSet h = of(5, {0, 1, 2});
    REQUIRE(border(p5, h) == of(5, {2}));
    REQUIRE(border(p5, h.complement()) == of(5, {3}));
    REQUIRE(cutset(p5, h) == std::vector<std::pair<Vertex, Vertex>>{{2, 3}});
    REQUIRE(border(p5, VertexSet(5)).empty());
    REQUIRE(cutset(p5, VertexSet::full(5)).empty());
}

TEST_CASE("halfspace recognition") {
    Graph p4 = path_graph(4);
    REQUIRE(is_halfspace(p4, of(4, {0, 1})));
    REQUIRE(is_halfspace(p4, VertexSet(4)));
    REQUIRE(is_halfspace(p4, VertexSet::full(4)));
    REQUIRE_FALSE(is_halfspace(p4, of(4, {1})));  // complement {0,2,3} misses 1
    Graph c5 = cycle_graph(5);
    REQUIRE_FALSE(is_halfspace(c5, of(5, {0, 1})));
}

TEST_CASE("triangle sets") {
    Graph k4 = complete_graph(4);
    REQUIRE(triangle_set(k4, 0, 1) == VertexSet::full(4));
    Graph c5 = cycle_graph(5);
    REQUIRE(triangle_set(c5, 0, 1) == of(5, {0, 1}));
    REQUIRE_THROWS_AS(triangle_set(c5, 0, 2), std::invalid_argument);
}

TEST_CASE("halfspaces decompose into shadows of their triangle set") {
    for (auto& g : {path_graph(5), complete_graph(4), star_graph(4), erdos_renyi_connected(8, 0.5, 11)}) {
        for (const VertexSet& h : halfspaces_bf(g)) {
            for (auto [u, v] : cutset(g, h)) {
                REQUIRE(shadow_reconstruct(g, h, u, v) == h);
            }
        }
    }
    Graph p4 = path_graph(4);
    REQUIRE_THROWS_AS(shadow_reconstruct(p4, of(4, {0, 1}), 0, 1), std::invalid_argument);  // not a cut edge
}

TEST_CASE("sparse shadow covers stay within the clique number") {
    for (auto& g : {path_graph(5), complete_graph(4), complete_graph(5), star_graph(4),
                    erdos_renyi_connected(8, 0.5, 11), erdos_renyi_connected(9, 0.6, 2)}) {
        int n = g.vertex_count();
        int omega = clique_number(g);
        for (const VertexSet& h : halfspaces_bf(g)) {
            if (h.empty() || h.size() == n) continue;
            auto cover = sparse_shadow_cover(g, h);
            REQUIRE(static_cast<int>(cover.size()) <= omega);
            VertexSet u(n);
            for (auto [z, v] : cover) {
                REQUIRE(g.has_edge(z, v));
                REQUIRE(h.contains(z));
                REQUIRE_FALSE(h.contains(v));
                u |= edge_shadow(g, z, v);
            }
            REQUIRE(u == h);
        }
    }
    REQUIRE_THROWS_AS(sparse_shadow_cover(path_graph(4), VertexSet(4)), std::invalid_argument);
}
