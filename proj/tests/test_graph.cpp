#include "doctest.h"
#include "support.hpp"

using namespace slh;
using namespace slh::test;

TEST_CASE("build_graph basic properties") {
    Graph c4 = graph_from_1based(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.max_degree() == 2);
    CHECK(c4.has_edge(0, 1));
    CHECK(!c4.has_edge(0, 2));
    CHECK(c4.duplicate_edges_dropped() == 0);
}

TEST_CASE("build_graph drops duplicates with a count") {
    Graph g = graph_from_1based(4, {{1, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(g.edge_count() == 4);
    CHECK(g.duplicate_edges_dropped() == 1);
    // Reversed duplicates too.
    Graph g2 = graph_from_1based(3, {{1, 2}, {2, 1}, {2, 3}});
    CHECK(g2.edge_count() == 2);
    CHECK(g2.duplicate_edges_dropped() == 1);
}

TEST_CASE("build_graph rejects self-loops and bad labels") {
    CHECK_THROWS_AS(graph_from_1based(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_1based(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(0, {}), std::invalid_argument);
}

TEST_CASE("build_graph is idempotent on its own edge list") {
    Graph g = graph_from_1based(5, {{1, 2}, {2, 3}, {4, 5}, {1, 4}});
    Graph g2 = Graph::build(g.vertex_count(), g.edges());
    CHECK(g2.edges() == g.edges());
    CHECK(g2.edge_count() == g.edge_count());
}

TEST_CASE("verify_hamiltonian_cycle") {
    Graph k4 = complete_graph(4);
    CHECK(verify_hamiltonian_cycle(k4, Cycle{seq0({1, 2, 3, 4})}));
    CHECK(!verify_hamiltonian_cycle(k4, Cycle{seq0({1, 2, 3})}));
    CHECK(!verify_hamiltonian_cycle(k4, Cycle{seq0({1, 2, 3, 3})}));
    Graph c4 = cycle_graph(4);
    CHECK(verify_hamiltonian_cycle(c4, Cycle{seq0({1, 2, 3, 4})}));
    CHECK(!verify_hamiltonian_cycle(c4, Cycle{seq0({1, 3, 2, 4})}));
}

TEST_CASE("verify_hamiltonian_cycle is rotation and reversal invariant") {
    Graph g = cycle_graph(6);
    std::vector<int> seq = seq0({1, 2, 3, 4, 5, 6});
    for (int r = 0; r < 6; ++r) {
        std::vector<int> rot(6);
        for (int i = 0; i < 6; ++i) rot[i] = seq[(r + i) % 6];
        CHECK(verify_hamiltonian_cycle(g, Cycle{rot}));
        std::reverse(rot.begin(), rot.end());
        CHECK(verify_hamiltonian_cycle(g, Cycle{rot}));
    }
}

TEST_CASE("presolve catches the cheap non-Hamiltonian certificates") {
    CHECK(presolve(cycle_graph(4)).pass);
    auto path = presolve(path_graph(3));
    CHECK(!path.pass);
    CHECK(path.reason == PresolveReason::DegreeBelowTwo);
    Graph two_triangles =
        graph_from_1based(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
    auto disc = presolve(two_triangles);
    CHECK(!disc.pass);
    CHECK(disc.reason == PresolveReason::Disconnected);
    Graph k2 = graph_from_1based(2, {{1, 2}});
    CHECK(presolve(k2).reason == PresolveReason::TooFewVertices);
}
