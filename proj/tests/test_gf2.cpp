#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "widthkit/enumerate.hpp"
#include "widthkit/gf2.hpp"
#include "widthkit/graph.hpp"

using namespace widthkit;

TEST_CASE("rank_gf2 basics") {
    BinaryMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.set(i, i);
    CHECK(rank_gf2(id3) == 3);

    BinaryMatrix ones(4, 5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j) ones.set(i, j);
    CHECK(rank_gf2(ones) == 1);

    CHECK(rank_gf2(BinaryMatrix::from_strings({"110", "011", "101"})) == 2);
    CHECK(rank_gf2(BinaryMatrix(0, 0)) == 0);
    CHECK(rank_gf2(BinaryMatrix(3, 0)) == 0);
}

TEST_CASE("rank_gf2 agrees with span enumeration on random matrices up to 6x6") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        BinaryMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng() % 2) m.set(i, j);
        REQUIRE(rank_gf2(m) == oracles::rank_by_span(m));
    }
}

TEST_CASE("distinct rows") {
    BinaryMatrix ones(4, 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) ones.set(i, j);
    CHECK(distinct_rows(ones) == 1);
    CHECK(distinct_nonzero_rows(ones) == 1);

    BinaryMatrix zero(4, 3);
    CHECK(distinct_rows(zero) == 1);
    CHECK(distinct_nonzero_rows(zero) == 0);

    auto m = BinaryMatrix::from_strings({"00", "01", "01", "11"});
    CHECK(distinct_rows(m) == 3);
    CHECK(distinct_nonzero_rows(m) == 2);
}

TEST_CASE("bipartite adjacency orientation: rows are the complement of X") {
    Graph p4 = Graph::path(4);
    BinaryMatrix m = bipartite_adjacency(p4, {0, 2});
    REQUIRE(m.rows() == 2);  // vertices 1, 3
    REQUIRE(m.cols() == 2);  // vertices 0, 2
    CHECK(m.test(0, 0));   // 1 adjacent to 0
    CHECK(m.test(0, 1));   // 1 adjacent to 2
    CHECK_FALSE(m.test(1, 0));
    CHECK(m.test(1, 1));   // 3 adjacent to 2
    CHECK(m.to_string() == "11\n01\n");

    CHECK(bipartite_adjacency(p4, {}).cols() == 0);
    CHECK(bipartite_adjacency(p4, {}).rows() == 4);
    CHECK(bipartite_adjacency(p4, {0, 1, 2, 3}).rows() == 0);
}

TEST_CASE("cutrank") {
    Graph k6 = Graph::complete(6);
    CHECK(cutrank(k6, {0, 1, 2, 3, 4, 5}) == 0);
    CHECK(cutrank(k6, {}) == 0);
    CHECK(cutrank(k6, {0, 1}) == 1);
    CHECK(cutrank(Graph::path(4), {0, 2}) == 2);
    Graph c4 = Graph::cycle(4);
    CHECK(cutrank(c4, {0, 2}) == 1);
    // symmetric under complement
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            for (unsigned x = 0; x < (1u << n); ++x) {
                std::vector<int> xs, comp;
                for (int v = 0; v < n; ++v) (x >> v & 1 ? xs : comp).push_back(v);
                REQUIRE(cutrank(g, xs) == cutrank(g, comp));
            }
        }
}

TEST_CASE("lambda and c") {
    Graph k5 = Graph::complete(5);
    CHECK(lambda_of_set(k5, {0, 1}) == 1);
    CHECK(c_of_set(k5, {0, 1}) == 1);
    CHECK(c_of_set(k5, {0, 1, 2, 3, 4}) == 0);

    Graph c5 = Graph::cycle(5);
    CHECK(lambda_of_set(c5, {0, 1}) == 3);  // patterns {0}, {1}, {}
    CHECK(lambda_of_k(c5, 2) == 3);

    CHECK(lambda_of_k(Graph::complete(3), 1) == 1);
    CHECK(lambda_of_k(Graph::complete(3), 0) == 1);
    CHECK(c_of_set(Graph::path(4), {0, 2}) == 2);

    // empty-X convention: one empty-neighborhood pattern when rows exist
    CHECK(lambda_of_set(c5, {}) == 1);
}

TEST_CASE("c <= lambda <= c + 1 and lambda <= 2^|X|, all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            for (unsigned x = 0; x < (1u << n); ++x) {
                std::vector<int> xs;
                for (int v = 0; v < n; ++v)
                    if (x >> v & 1) xs.push_back(v);
                int c = c_of_set(g, xs), lam = lambda_of_set(g, xs);
                REQUIRE(c <= lam);
                REQUIRE(lam <= c + 1);
                if (xs.size() < 20) REQUIRE(lam <= (1 << xs.size()));
            }
        }
}

TEST_CASE("distinct rows bounded by lambda at the cut-rank, all graphs n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            auto adj = g.adjacency_masks();
            std::vector<int> lambda_k(n + 1, 0);
            for (unsigned x = 0; x < (1u << n); ++x) {
                int sz = __builtin_popcount(x);
                lambda_k[sz] = std::max(lambda_k[sz], detail::distinct_rows_mask(adj, n, x));
            }
            for (int k = 1; k <= n; ++k) lambda_k[k] = std::max(lambda_k[k], lambda_k[k - 1]);
            for (unsigned x = 0; x < (1u << n); ++x) {
                int dr = detail::distinct_rows_mask(adj, n, x);
                int cr = detail::cutrank_mask(adj, n, x);
                REQUIRE(dr <= lambda_k[cr]);
            }
        }
}

TEST_CASE("mask fast paths agree with the matrix route") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        auto adj = g.adjacency_masks();
        std::uint64_t x = rng() & ((std::uint64_t{1} << n) - 1);
        std::vector<int> xs;
        for (int v = 0; v < n; ++v)
            if (x >> v & 1) xs.push_back(v);
        REQUIRE(detail::cutrank_mask(adj, n, x) == cutrank(g, xs));
        REQUIRE(detail::distinct_rows_mask(adj, n, x) == lambda_of_set(g, xs));
        REQUIRE(detail::distinct_nonzero_rows_mask(adj, n, x) == c_of_set(g, xs));
    }
}
