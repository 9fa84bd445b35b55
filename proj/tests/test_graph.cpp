#include <catch2/catch_amalgamated.hpp>

#include "mhs/corpus.hpp"
#include "mhs/graph.hpp"

using namespace mhs;

TEST_CASE("load parses edge lists and assigns ids by first appearance") {
    Graph g = load_graph("a b\nb c\n\nc d\n");
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edge_count() == 3);
    REQUIRE(g.name(0) == "a");
    REQUIRE(g.name(3) == "d");
    REQUIRE(g.id_of("c") == Vertex{2});
    REQUIRE_FALSE(g.id_of("z").has_value());
    REQUIRE(g.has_edge(0, 1));
    REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("load rejects bad input with line numbers") {
    auto kind = [](const std::string& text) {
        try {
            load_graph(text);
        } catch (const LoadError& e) {
            return e.kind;
        }
        return LoadError::Kind::empty_input;  // placeholder; every case throws
    };
    REQUIRE(kind("") == LoadError::Kind::empty_input);
    REQUIRE(kind("a\n") == LoadError::Kind::malformed_line);
    REQUIRE(kind("a b c\n") == LoadError::Kind::malformed_line);
    REQUIRE(kind("a a\n") == LoadError::Kind::self_loop);
    REQUIRE(kind("a b\nb a\n") == LoadError::Kind::duplicate_edge);
    REQUIRE(kind("a b\nc d\n") == LoadError::Kind::disconnected);
    try {
        load_graph("a b\na b\n");
        FAIL("expected duplicate_edge");
    } catch (const LoadError& e) {
        REQUIRE(e.line == 2);
    }
}

TEST_CASE("edges are sorted and indexable") {
    Graph g = cycle_graph(4);
    auto es = g.edges();
    REQUIRE(es == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    REQUIRE(g.edge_index(1, 0) == 0);
    REQUIRE(g.edge_index(2, 3) == 3);
    REQUIRE_THROWS_AS(g.edge_index(0, 2), std::invalid_argument);
}

TEST_CASE("bfs distances and deterministic shortest paths") {
    Graph g = cycle_graph(6);
    auto d = bfs_distances(g, 0);
    REQUIRE(d == std::vector<int>{0, 1, 2, 3, 2, 1});
    REQUIRE(distance(g, 0, 3) == 3);
    // both directions around the cycle tie; lowest-id parent wins
    REQUIRE(shortest_path(g, 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
    REQUIRE(shortest_path(g, 0, 0) == std::vector<Vertex>{0});
}

TEST_CASE("separators") {
    Graph g = path_graph(5);
    VertexSet s(5);
    s.add(2);
    REQUIRE(is_separator(g, s, 0, 4));
    REQUIRE_FALSE(is_separator(g, s, 0, 1));
    REQUIRE(is_separator(g, s, 2, 4));  // a inside the separator counts as cut
    REQUIRE_THROWS_AS(is_separator(g, s, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(is_separator(g, s, -1, 2), std::invalid_argument);
}

TEST_CASE("components of an induced subgraph, ordered by smallest member") {
    Graph g = path_graph(6);
    VertexSet x = VertexSet::full(6);
    x.remove(1);
    x.remove(4);
    auto comps = components(g, x);
    REQUIRE(comps.size() == 3);
    REQUIRE(comps[0].to_vector() == std::vector<Vertex>{0});
    REQUIRE(comps[1].to_vector() == std::vector<Vertex>{2, 3});
    REQUIRE(comps[2].to_vector() == std::vector<Vertex>{5});
    REQUIRE(components(g, VertexSet(6)).empty());
}

TEST_CASE("cliques and clique number") {
    REQUIRE(is_clique(complete_graph(4), VertexSet::full(4)));
    REQUIRE_FALSE(is_clique(path_graph(3), VertexSet::full(3)));
    REQUIRE(clique_number(path_graph(4)) == 2);
    REQUIRE(clique_number(complete_graph(5)) == 5);
    REQUIRE(clique_number(cycle_graph(5)) == 2);
    REQUIRE(clique_number(petersen_graph()) == 2);
    REQUIRE(clique_number(complete_bipartite_graph(2, 3)) == 2);
    REQUIRE(omega_tilde(path_graph(4)) == 3);
    REQUIRE(omega_tilde(complete_graph(5)) == 5);
}

TEST_CASE("complement of an induced subgraph") {
    Graph g = path_graph(4);
    VertexSet x(4);
    x.add(0);
    x.add(1);
    x.add(3);
    InducedSubgraph sub = complement_induced(g, x);
    REQUIRE(sub.graph.vertex_count() == 3);
    REQUIRE(sub.to_parent == std::vector<Vertex>{0, 1, 3});
    // {0,1} was an edge, so it is gone; {0,3} and {1,3} appear
    REQUIRE_FALSE(sub.graph.has_edge(0, 1));
    REQUIRE(sub.graph.has_edge(0, 2));
    REQUIRE(sub.graph.has_edge(1, 2));
}

TEST_CASE("geodesic diameter") {
    REQUIRE(geodesic_diameter(path_graph(5)) == 4);
    REQUIRE(geodesic_diameter(complete_graph(4)) == 1);
    REQUIRE(geodesic_diameter(petersen_graph()) == 2);
}

TEST_CASE("fixture shapes") {
    REQUIRE(path_graph(4).edge_count() == 3);
    REQUIRE(cycle_graph(5).edge_count() == 5);
    REQUIRE(complete_graph(4).edge_count() == 6);
    REQUIRE(star_graph(4).edge_count() == 3);
    REQUIRE(star_graph(4).degree(0) == 3);
    REQUIRE(complete_bipartite_graph(2, 3).edge_count() == 6);
    Graph pet = petersen_graph();
    REQUIRE(pet.vertex_count() == 10);
    REQUIRE(pet.edge_count() == 15);
    for (Vertex v : pet.vertices()) REQUIRE(pet.degree(v) == 3);
    REQUIRE(pet.name(0) == "1");
}

TEST_CASE("random corpus is connected and reproducible") {
    Graph a = erdos_renyi_connected(8, 0.3, 17);
    Graph b = erdos_renyi_connected(8, 0.3, 17);
    REQUIRE(a.edges() == b.edges());
    REQUIRE(a.connected());
    Graph c = erdos_renyi_connected(8, 0.3, 18);
    REQUIRE(a.edges() != c.edges());
    REQUIRE_THROWS_AS(erdos_renyi_connected(5, 0.0, 1), std::invalid_argument);
}
