#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <random>

#include "mhs/corpus.hpp"
#include "mhs/enumeration.hpp"
#include "mhs/oracles.hpp"

using namespace mhs;

namespace {

VertexSet of(int n, std::initializer_list<Vertex> vs) { return VertexSet(n, vs); }

std::vector<VertexSet> canonical(std::vector<VertexSet> v) {
    std::sort(v.begin(), v.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
    return v;
}

}  // namespace

TEST_CASE("rationals reduce") {
    REQUIRE(Rational(6, 4) == Rational(3, 2));
    REQUIRE(Rational(6, 3).is_integer());
    REQUIRE(Rational(6, 3).str() == "2");
    REQUIRE(Rational(7, 2).str() == "7/2");
    REQUIRE(Rational(0, 5) == Rational(0, 1));
    REQUIRE(Rational(3, 2).value() == Catch::Approx(1.5));
    REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("counting bound values") {
    REQUIRE(count_bound(complete_graph(3)) == Rational(34));
    REQUIRE(count_bound(path_graph(4)) == Rational(26));
    REQUIRE(count_bound(cycle_graph(5)) == Rational(42));
    REQUIRE(count_bound(petersen_graph()) == Rational(122));
}

TEST_CASE("huge cliques overflow the bound") {
    REQUIRE_THROWS_AS(count_bound(complete_graph(57)), Error);
}

TEST_CASE("the bound dominates the class size") {
    for (auto& g : {path_graph(6), cycle_graph(6), complete_graph(5), star_graph(5), petersen_graph(),
                    erdos_renyi_connected(9, 0.4, 21), erdos_renyi_connected(10, 0.6, 22)}) {
        REQUIRE(static_cast<double>(list_all_fpt(g).size()) <= count_bound(g).value());
    }
    // cliques meet 2^k exactly
    REQUIRE(list_all_fpt(complete_graph(4)).size() == 16);
}

TEST_CASE("list_all_fpt agrees with the subset filter") {
    for (auto& g : {path_graph(4), path_graph(6), cycle_graph(5), cycle_graph(6), complete_graph(4), star_graph(5),
                    complete_bipartite_graph(2, 3), petersen_graph(), erdos_renyi_connected(8, 0.2, 23),
                    erdos_renyi_connected(9, 0.5, 24), erdos_renyi_connected(10, 0.6, 25)}) {
        REQUIRE(canonical(list_all_fpt(g)) == halfspaces_bf(g));
    }
}

TEST_CASE("visitors can stop the enumeration") {
    Graph g = path_graph(6);
    std::size_t seen = 0;
    bool completed = list_all_fpt(g, [&](const VertexSet&) { return ++seen < 3; });
    REQUIRE_FALSE(completed);
    REQUIRE(seen == 3);
}

TEST_CASE("version space listing matches the filtered class") {
    std::mt19937_64 rng(77);
    for (auto& g : {path_graph(5), cycle_graph(6), complete_graph(4), erdos_renyi_connected(8, 0.4, 26),
                    erdos_renyi_connected(9, 0.3, 27)}) {
        int n = g.vertex_count();
        auto all = halfspaces_bf(g);
        for (int trial = 0; trial < 10; ++trial) {
            LabeledSample s;
            for (int i = 0; i < trial % 4; ++i)
                s.add(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)), static_cast<int>(rng() % 2));
            std::vector<VertexSet> want;
            for (const VertexSet& h : all)
                if (s.consistent_with(h)) want.push_back(h);
            EnumerationStats stats;
            auto got = list_version_space(g, s, &stats);
            REQUIRE(canonical(got) == want);
            // polynomial delay: never more than 2n checks between outputs
            REQUIRE(stats.max_delay_checks <= 2 * static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("version space of the P4 example") {
    Graph g = path_graph(4);
    auto got = canonical(list_version_space(g, LabeledSample{{0, 1}, {2, 0}}));
    REQUIRE(got == std::vector<VertexSet>{of(4, {0}), of(4, {0, 1})});
}

TEST_CASE("contradictory samples produce an empty listing") {
    Graph g = path_graph(4);
    EnumerationStats stats;
    auto got = list_version_space(g, LabeledSample{{0, 1}, {0, 0}}, &stats);
    REQUIRE(got.empty());
}

TEST_CASE("unconstrained version space is the whole class") {
    for (auto& g : {path_graph(5), cycle_graph(5), complete_graph(4)}) {
        REQUIRE(canonical(list_version_space(g, LabeledSample{})) == halfspaces_bf(g));
    }
}

TEST_CASE("version space visitor stop") {
    Graph g = complete_graph(4);
    std::size_t seen = 0;
    bool completed = list_version_space(g, LabeledSample{}, [&](const VertexSet&) { return ++seen < 5; });
    REQUIRE_FALSE(completed);
    REQUIRE(seen == 5);
}
