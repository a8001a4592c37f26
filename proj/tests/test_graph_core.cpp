#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "widthkit/enumerate.hpp"
#include "widthkit/graph.hpp"
#include "widthkit/minors.hpp"
#include "widthkit/nabla.hpp"

using namespace widthkit;

TEST_CASE("graph construction rejects loops and bad vertices") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // idempotent
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
}

TEST_CASE("induced subgraph") {
    Graph k3 = Graph::complete(3);
    auto sub = induced_subgraph(k3, {0, 1});
    CHECK(sub.graph == Graph::complete(2));

    Graph c5 = Graph::cycle(5);
    auto all = induced_subgraph(c5, {0, 1, 2, 3, 4});
    CHECK(all.graph == c5);
    CHECK(all.vertex_map == std::vector<int>{0, 1, 2, 3, 4});

    // three consecutive vertices of C5 induce P3
    auto p3 = induced_subgraph(c5, {0, 1, 2});
    CHECK(p3.graph == Graph::path(3));

    CHECK_THROWS_AS(induced_subgraph(c5, {7}), std::invalid_argument);
}

TEST_CASE("contract_edge") {
    CHECK(contract_edge(Graph::complete(3), 0, 1) == Graph::complete(2));
    CHECK(contract_edge(Graph::path(3), 0, 1) == Graph::complete(2));
    // C4 contracts to a triangle, not a multigraph
    Graph c4 = Graph::cycle(4);
    Graph t = contract_edge(c4, 0, 1);
    CHECK(t.vertex_count() == 3);
    CHECK(t == Graph::complete(3));
    CHECK_THROWS_AS(contract_edge(c4, 0, 2), std::invalid_argument);
}

TEST_CASE("dissolve") {
    CHECK(dissolve(Graph::cycle(4), 1) == Graph::cycle(3));
    CHECK(dissolve(Graph::complete(3), 0) == Graph::complete(2));
    CHECK_THROWS_AS(dissolve(Graph::complete(4), 0), std::invalid_argument);

    // subdividing every edge of K4 and dissolving all degree-2 vertices
    // recovers K4
    Graph k4 = Graph::complete(4);
    Graph sub(4 + 6);
    int next = 4;
    for (auto [u, v] : k4.edges()) {
        sub.add_edge(u, next);
        sub.add_edge(next, v);
        ++next;
    }
    Graph cur = sub;
    while (true) {
        int v = -1;
        for (int i = 0; i < cur.vertex_count(); ++i)
            if (cur.degree(i) == 2) {
                v = i;
                break;
            }
        if (v < 0) break;
        cur = dissolve(cur, v);
    }
    CHECK(cur == k4);
}

TEST_CASE("twins") {
    Graph k4 = Graph::complete(4);
    CHECK(is_twin_pair(k4, 0, 3));
    CHECK(is_twin_pair(Graph::path(3), 0, 2));
    Graph c5 = Graph::cycle(5);
    for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y) CHECK_FALSE(is_twin_pair(c5, x, y));
    CHECK_THROWS_AS(is_twin_pair(k4, 1, 1), std::invalid_argument);
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(Graph(0)) == 0);
    CHECK(degeneracy(Graph::complete(6)) == 5);
    CHECK(degeneracy(Graph::path(7)) == 1);
    Graph star = Graph::complete_bipartite(1, 5);
    CHECK(degeneracy(star) == 1);
    CHECK(degeneracy(Graph::cycle(8)) == 2);
}

TEST_CASE("clique counting includes the empty clique") {
    CHECK(count_cliques(Graph::complete(3)) == 8);
    CHECK(count_cliques(Graph(0)) == 1);
    CHECK(count_cliques(Graph(3)) == 4);  // empty + 3 singletons
    CHECK(count_cliques(Graph::cycle(5), 2) == 5);
    CHECK(count_cliques(Graph::complete(5), 3) == 10);
    CHECK(count_cliques(Graph::complete(4), 0) == 1);
}

TEST_CASE("clique count vs subset brute force on all graphs with n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            std::uint64_t total = 0;
            std::vector<std::uint64_t> by_size(n + 1, 0);
            for (unsigned sub = 0; sub < (1u << n); ++sub) {
                bool clique = true;
                for (int i = 0; i < n && clique; ++i)
                    for (int j = i + 1; j < n && clique; ++j)
                        if ((sub >> i & 1) && (sub >> j & 1) && !g.has_edge(i, j)) clique = false;
                if (clique) {
                    ++total;
                    ++by_size[__builtin_popcount(sub)];
                }
            }
            REQUIRE(count_cliques(g) == total);
            for (int k = 0; k <= n; ++k) REQUIRE(count_cliques(g, k) == by_size[k]);
        }
    }
}

TEST_CASE("nabla1 on named graphs") {
    CHECK(nabla1(Graph::complete(5)) == exact::Rat(2));        // (n-1)/2
    CHECK(nabla1(Graph::complete_bipartite(1, 4)) == exact::Rat(4, 5));
    CHECK(nabla1(Graph::cycle(6)) == exact::Rat(1));
    CHECK_THROWS_AS(nabla1(Graph(0)), std::invalid_argument);
}

TEST_CASE("degeneracy at most twice nabla1, all graphs n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            CHECK(exact::Rat(degeneracy(g)) <= exact::Rat(2) * nabla1(g));
        }
}

TEST_CASE("nabla1 never below plain density and contraction-closed spot checks") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        exact::Rat nv = nabla1(g);
        CHECK(nv >= exact::Rat(g.edge_count(), g.vertex_count()));
    }
}

TEST_CASE("search budget turns blowup into a typed error") {
    Graph k7 = Graph::complete(7);
    CHECK_THROWS_AS(has_minor(k7, 5, SearchBudget(3)), resource_limit_error);
    try {
        has_minor(k7, 5, SearchBudget(3));
    } catch (const resource_limit_error& e) {
        CHECK(e.budget() == 3);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(nabla1(k7, SearchBudget(5)), resource_limit_error);
}
