#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "widthkit/enumerate.hpp"
#include "widthkit/graph.hpp"
#include "widthkit/hypergraph.hpp"
#include "widthkit/minors.hpp"
#include "widthkit/planarity.hpp"

using namespace widthkit;

TEST_CASE("has_minor on named graphs") {
    Graph k5e = Graph::complete(5);
    k5e.remove_edge(0, 1);
    CHECK(has_minor(k5e, 4));
    CHECK_FALSE(has_minor(Graph::path(6), 3));  // forests are K3-minor-free
    CHECK_FALSE(has_minor(Graph::complete(4), 5));
    CHECK(has_minor(Graph::cycle(5), 3));
    CHECK(has_minor(Graph(1), 1));
    CHECK_FALSE(has_minor(Graph(0), 1));
    CHECK_THROWS_AS(has_minor(Graph(3), 0), std::invalid_argument);
    // planar graphs have no K5 minor
    auto tri = stacked_triangulation(9, 5);
    CHECK_FALSE(has_minor(tri.graph, 5));
}

TEST_CASE("has_minor agrees with the contraction-sequence oracle, n <= 6") {
    std::map<std::pair<int, std::uint64_t>, bool> memo3, memo4;
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            REQUIRE(has_minor(g, 3) == oracles::minor_by_contractions(g, 3, &memo3));
            REQUIRE(has_minor(g, 4) == oracles::minor_by_contractions(g, 4, &memo4));
        }
}

TEST_CASE("has_topological_minor on named graphs") {
    // K_{t,t} with t = ceil(r/2) + C(ceil(r/2),2) contains a K_r subdivision
    CHECK(has_topological_minor(Graph::complete_bipartite(3, 3), 4));
    Graph c9 = Graph::cycle(9);
    CHECK_FALSE(has_topological_minor(c9, 4));  // max degree 2
    // subdivided K4
    Graph k4 = Graph::complete(4);
    Graph sub(10);
    int next = 4;
    for (auto [u, v] : k4.edges()) {
        sub.add_edge(u, next);
        sub.add_edge(next, v);
        ++next;
    }
    CHECK(has_topological_minor(sub, 4));
    CHECK_FALSE(has_topological_minor(sub, 5));
}

TEST_CASE("has_topological_minor agrees with the dissolution oracle, n <= 6") {
    std::map<std::pair<int, std::uint64_t>, bool> memo;
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            REQUIRE(has_topological_minor(g, 4) == oracles::topminor_by_dissolutions(g, 4, &memo));
        }
}

TEST_CASE("minor is implied by subgraph and preserved under dissolution") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3) g.add_edge(i, j);
        if (oracles::has_kr_subgraph(g, 4)) CHECK(has_minor(g, 4));
        if (has_topological_minor(g, 4)) CHECK(has_minor(g, 4));
    }
}

TEST_CASE("has_krr_subgraph") {
    CHECK(has_krr_subgraph(Graph::complete_bipartite(3, 3), 3));
    CHECK_FALSE(has_krr_subgraph(Graph::cycle(6), 2));
    CHECK(has_krr_subgraph(Graph::complete(4), 2));
    CHECK(has_krr_subgraph(Graph::cycle(4), 2));
    CHECK_FALSE(has_krr_subgraph(Graph::complete(5), 3));
    CHECK(has_krr_subgraph(Graph::complete(6), 3));
}

TEST_CASE("is_planar on named graphs") {
    CHECK(is_planar(Graph::complete(4)));
    CHECK_FALSE(is_planar(Graph::complete(5)));
    CHECK_FALSE(is_planar(Graph::complete_bipartite(3, 3)));
    CHECK(is_planar(Graph::cycle(8)));
    CHECK(is_planar(Graph(0)));
    // Petersen graph is nonplanar
    Graph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    CHECK_FALSE(is_planar(pet));
}

TEST_CASE("is_planar agrees with the Kuratowski oracle on all graphs n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            REQUIRE(is_planar(g) == oracles::planar_by_kuratowski(g));
        }
}

TEST_CASE("is_planar agrees with the Kuratowski oracle on random graphs n = 7,8") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 7 + static_cast<int>(rng() % 2);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        REQUIRE(is_planar(g) == oracles::planar_by_kuratowski(g));
    }
}

TEST_CASE("planar graphs never have a K5 minor (sampled)") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto tri = stacked_triangulation(8, rng());
        Graph g = tri.graph;
        // delete a few edges; subgraphs of planar graphs stay planar
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); i += 3) g.remove_edge(edges[i].first, edges[i].second);
        REQUIRE(is_planar(g));
        REQUIRE_FALSE(has_minor(g, 5));
    }
}
