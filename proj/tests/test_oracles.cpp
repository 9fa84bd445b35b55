#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "mhs/convexity.hpp"
#include "mhs/corpus.hpp"
#include "mhs/oracles.hpp"
#include "mhs/shadows.hpp"

using namespace mhs;

namespace {

VertexSet of(int n, std::initializer_list<Vertex> vs) { return VertexSet(n, vs); }

VertexSet random_subset(int n, std::mt19937_64& rng) {
    VertexSet s(n);
    for (Vertex x = 0; x < n; ++x)
        if (rng() % 2) s.add(x);
    return s;
}

}  // namespace

TEST_CASE("induced paths by example") {
    using Paths = std::vector<std::vector<Vertex>>;
    REQUIRE(induced_paths(path_graph(4), 0, 3) == Paths{{0, 1, 2, 3}});
    // the chord 0-1 rules the long way around a triangle out
    REQUIRE(induced_paths(complete_graph(3), 0, 1) == Paths{{0, 1}});
    REQUIRE(induced_paths(cycle_graph(5), 0, 2) == Paths{{0, 1, 2}, {0, 4, 3, 2}});
}

TEST_CASE("intervals are symmetric and reflexively empty") {
    std::mt19937_64 rng(41);
    for (auto& g : {path_graph(5), cycle_graph(6), petersen_graph(), erdos_renyi_connected(8, 0.4, 42)}) {
        int n = g.vertex_count();
        for (int trial = 0; trial < 20; ++trial) {
            Vertex u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
            Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
            REQUIRE(interval_bf(g, u, v) == interval_bf(g, v, u));
        }
        for (Vertex u = 0; u < n; ++u) REQUIRE(interval_bf(g, u, u).empty());
    }
    // adjacent vertices span nothing beyond themselves
    Graph c5 = cycle_graph(5);
    REQUIRE(interval_bf(c5, 0, 1) == of(5, {0, 1}));
}

TEST_CASE("brute-force hull is extensive and idempotent") {
    std::mt19937_64 rng(43);
    for (auto& g : {path_graph(6), cycle_graph(5), erdos_renyi_connected(8, 0.3, 44)}) {
        for (int trial = 0; trial < 15; ++trial) {
            VertexSet x = random_subset(g.vertex_count(), rng);
            VertexSet h = hull_bf(g, x);
            REQUIRE(x.is_subset_of(h));
            REQUIRE(hull_bf(g, h) == h);
            REQUIRE(mconvex_bf(g, h));
        }
    }
    REQUIRE(hull_bf(path_graph(4), of(4, {0, 3})) == VertexSet::full(4));
    REQUIRE(hull_bf(cycle_graph(5), of(5, {0, 2})) == VertexSet::full(5));
}

TEST_CASE("halfspaces of the path on four vertices") {
    auto hs = halfspaces_bf(path_graph(4));
    std::vector<VertexSet> want{of(4, {}),           of(4, {0}),       of(4, {0, 1}), of(4, {0, 1, 2}),
                                of(4, {0, 1, 2, 3}), of(4, {1, 2, 3}), of(4, {2, 3}), of(4, {3})};
    REQUIRE(hs == want);
    REQUIRE(halfspaces_bf(cycle_graph(5)) == std::vector<VertexSet>{of(5, {}), VertexSet::full(5)});
}

TEST_CASE("size guards on the expensive oracles") {
    REQUIRE_THROWS_AS(halfspaces_bf(path_graph(21)), std::invalid_argument);
    REQUIRE_THROWS_AS(vc_dim_bf(path_graph(13)), std::invalid_argument);
    REQUIRE_THROWS_AS(monophonic_diameter_bf(path_graph(17)), std::invalid_argument);
}

TEST_CASE("vc dimension by exhaustion") {
    REQUIRE(vc_dim_bf(complete_graph(3)) == 3);
    REQUIRE(vc_dim_bf(cycle_graph(5)) == 1);
    REQUIRE(vc_dim_bf(path_graph(4)) == 2);
}

TEST_CASE("minimum hull sets") {
    REQUIRE(min_hullset_bf(cycle_graph(5)) == of(5, {0, 2}));
    REQUIRE(min_hullset_bf(path_graph(4)) == of(4, {0, 3}));
    REQUIRE(min_hullset_bf(complete_graph(3)) == VertexSet::full(3));
}

TEST_CASE("monophonic diameter") {
    REQUIRE(monophonic_diameter_bf(cycle_graph(5)) == 3);
    REQUIRE(monophonic_diameter_bf(path_graph(4)) == 3);
    REQUIRE(monophonic_diameter_bf(complete_graph(3)) == 1);
}

TEST_CASE("four-cycle closure of an edge") {
    REQUIRE(four_cycles_bf(cycle_graph(4), 0, 1) == VertexSet::full(4));
    REQUIRE(four_cycles_bf(path_graph(4), 1, 2) == of(4, {1, 2}));
    REQUIRE_THROWS_AS(four_cycles_bf(path_graph(4), 0, 2), std::invalid_argument);
}

TEST_CASE("constraint semantics filter on the cut") {
    auto sem = constraint_semantics_bf(path_graph(4), 1, 2);
    REQUIRE(sem == std::vector<VertexSet>{of(4, {0, 1})});
    REQUIRE(constraint_semantics_bf(cycle_graph(5), 0, 1).empty());
}

TEST_CASE("shadow oracle basics") {
    std::mt19937_64 rng(45);
    for (auto& g : {path_graph(5), cycle_graph(6), erdos_renyi_connected(8, 0.5, 46)}) {
        for (auto [u, v] : g.edges()) {
            VertexSet s = shadow_bf(g, u, v);
            REQUIRE(s.contains(u));
            REQUIRE_FALSE(s.contains(v));
            REQUIRE(s == edge_shadow(g, u, v));
        }
    }
}
