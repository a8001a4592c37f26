#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "widthkit/compile.hpp"
#include "widthkit/enumerate.hpp"
#include "widthkit/exact.hpp"
#include "widthkit/gf2.hpp"
#include "widthkit/solvers.hpp"

using namespace widthkit;

namespace {
CompiledKExpression compile_opt(const Graph& g, bool check = true) {
    auto rw = exact_rankwidth(g);
    return rankdec_to_kexpr(g, rw.decomposition, {.check_invariants = check});
}
}  // namespace

TEST_CASE("compile K4: C = 1, at most 3 labels, evaluates back") {
    Graph k4 = Graph::complete(4);
    auto ce = compile_opt(k4);
    CHECK(ce.c == 1);
    CHECK(ce.expr.width() <= 3);
    CHECK(compiled_matches_input(k4, ce));
}

TEST_CASE("compile edgeless: pure union tree of label-1 leaves") {
    Graph g(5);
    auto ce = compile_opt(g);
    CHECK(ce.c == 0);
    CHECK(ce.expr.width() == 1);
    CHECK(compiled_matches_input(g, ce));
    std::string s = serialize_kexpr(ce.expr);
    CHECK(s.find("join") == std::string::npos);
    CHECK(s.find("rel") == std::string::npos);
}

TEST_CASE("compile tiny graphs directly") {
    auto one = compile_opt(Graph(1));
    CHECK(serialize_kexpr(one.expr) == "v(1)");
    auto k2 = compile_opt(Graph::complete(2));
    CHECK(compiled_matches_input(Graph::complete(2), k2));
    CHECK(k2.expr.width() <= 3);
    auto e2 = compile_opt(Graph(2));
    CHECK(compiled_matches_input(Graph(2), e2));
    CHECK(e2.expr.width() == 1);
    CHECK_THROWS_AS(compile_opt(Graph(0)), std::invalid_argument);
}

TEST_CASE("compile P4: round trip and label budget") {
    Graph p4 = Graph::path(4);
    auto ce = compile_opt(p4);
    auto rw = exact_rankwidth(p4);
    int b = beta(p4, rw.decomposition);
    CHECK(compiled_matches_input(p4, ce));
    CHECK(ce.c == b);
    CHECK(ce.expr.width() <= 2 * b + 1);
}

TEST_CASE("golden: K4 compiled expression text is stable") {
    auto ce = compile_opt(Graph::complete(4));
    // frozen after the first verified run; guards serializer and compiler
    // determinism together
    CHECK(serialize_kexpr(ce.expr) ==
          "rel(1,3,join(1,2,u(join(1,2,u(rel(2,1,join(1,2,u(v(1),v(1)))),v(2))),rel(1,2,v(1)))))");
    CHECK(eval_kexpr(ce.expr).graph == Graph::complete(4));
}

TEST_CASE("compile round-trips on every graph with 1 <= n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            auto rw = exact_rankwidth(g);
            auto ce = rankdec_to_kexpr(g, rw.decomposition, {.check_invariants = true});
            REQUIRE(compiled_matches_input(g, ce));
            REQUIRE(ce.expr.width() <= 2 * ce.c + 1);
            REQUIRE(ce.c == beta(g, rw.decomposition));
        }
}

TEST_CASE("compiled width certificate dominates rank-width, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            auto rw = exact_rankwidth(g);
            auto ce = rankdec_to_kexpr(g, rw.decomposition);
            REQUIRE(rw.width <= ce.expr.width());
            // certificate side of the exponential bound
            REQUIRE(exact::Rat(ce.expr.width()) <=
                    exact::Rat(exact::ipow(2, static_cast<unsigned>(rw.width + 1)) - 1));
        }
}

TEST_CASE("lambda chain: compiled width at most 2 lambda(rwd) - 1 when edges exist") {
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t mask : enumerate_graphs(n, 1)) {
            Graph g = Graph::from_edge_mask(n, mask);
            if (g.edge_count() == 0) continue;
            auto rw = exact_rankwidth(g);
            auto ce = rankdec_to_kexpr(g, rw.decomposition);
            int lam = lambda_of_k(g, rw.width);
            REQUIRE(ce.expr.width() <= 2 * lam - 1);
        }
}

TEST_CASE("compile works on a supplied non-optimal decomposition") {
    // a caterpillar is rarely optimal; the compiler must still round-trip
    Graph c6 = Graph::cycle(6);
    RankDecomposition d;
    d.leaf_of_vertex = {0, 1, 2, 3, 4, 5};
    d.tree_edges = {{0, 6}, {1, 6}, {6, 7}, {2, 7}, {7, 8}, {3, 8}, {8, 9}, {4, 9}, {5, 9}};
    REQUIRE(validate_rankdec(c6, d).empty());
    auto ce = rankdec_to_kexpr(c6, d, {.check_invariants = true});
    CHECK(compiled_matches_input(c6, ce));
    CHECK(ce.c == beta(c6, d));
    CHECK(ce.expr.width() <= 2 * ce.c + 1);
}

TEST_CASE("compile rejects invalid decompositions") {
    Graph k3 = Graph::complete(3);
    RankDecomposition bad;
    bad.leaf_of_vertex = {0, 1, 2};
    bad.tree_edges = {{0, 1}, {1, 2}};  // path, not ternary
    CHECK_THROWS_AS(rankdec_to_kexpr(k3, bad), validation_error);
}

TEST_CASE("random graphs n = 7..9 round-trip through compile") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 7 + static_cast<int>(rng() % 3);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        auto rw = exact_rankwidth(g);
        auto ce = rankdec_to_kexpr(g, rw.decomposition, {.check_invariants = true});
        REQUIRE(compiled_matches_input(g, ce));
        REQUIRE(ce.expr.width() <= 2 * ce.c + 1);
    }
}
