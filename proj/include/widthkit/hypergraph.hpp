#ifndef WIDTHKIT_HYPERGRAPH_HPP
#define WIDTHKIT_HYPERGRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "gf2.hpp"
#include "graph.hpp"
#include "minors.hpp"
#include "nabla.hpp"
#include "planarity.hpp"

namespace widthkit {

/// Finite vertex set plus a duplicate-free family of hyperedges. Hyperedges
/// are stored canonically sorted, so set-of-sets equality holds by
/// construction.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("hypergraph: negative vertex count");
        for (auto& e : edges) {
            for (int v : e)
                if (v < 0 || v >= n)
                    throw std::invalid_argument("hypergraph: hyperedge vertex out of range");
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

/// Bipartite incidence graph: vertices 0..n-1 are the hypergraph's vertices,
/// n..n+|E|-1 the hyperedges in canonical order; adjacency is membership.
inline Graph incidence_graph(const Hypergraph& h) {
    int n = h.vertex_count();
    Graph g(n + h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edges()[e]) g.add_edge(v, n + e);
    return g;
}

/// Vertices become columns; every row contributes the hyperedge of its
/// 1-positions. Rows must be pairwise distinct.
inline Hypergraph hypergraph_from_matrix_rows(const BinaryMatrix& m) {
    if (distinct_rows(m) != m.rows())
        throw std::invalid_argument("hypergraph_from_matrix_rows: matrix has identical rows");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < m.rows(); ++i) edges.push_back(m.row(i).to_vector());
    return Hypergraph(m.cols(), std::move(edges));
}

struct Triangulation {
    Graph graph;
    std::vector<std::array<int, 3>> faces;
};

/// Random stacked (Apollonian) triangulation on n >= 3 vertices; faces are
/// tracked by construction so no embedding algorithm is needed. n = 3 is the
/// triangle with its single face triple.
inline Triangulation stacked_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("stacked_triangulation: need at least 3 vertices");
    Graph g = Graph::complete(3);
    // both sides of the starting triangle are faces; a stack may use either
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    std::mt19937_64 rng(seed);
    for (int v = 3; v < n; ++v) {
        Graph next(v + 1);
        for (auto [a, b] : g.edges()) next.add_edge(a, b);
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        std::size_t fi = pick(rng);
        auto [a, b, c] = faces[fi];
        next.add_edge(v, a);
        next.add_edge(v, b);
        next.add_edge(v, c);
        faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(fi));
        faces.push_back({a, b, v});
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
        g = std::move(next);
    }
    // canonical face list: each face sorted, list sorted, duplicates merged
    // (only the two sides of a bare triangle ever coincide as sets)
    for (auto& f : faces) std::sort(f.begin(), f.end());
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return {std::move(g), std::move(faces)};
}

/// The tightness construction: the empty set, all singletons, all graph
/// edges, and one 3-hyperedge per triangular face of a plane triangulation.
inline Hypergraph triangulation_hypergraph(const Graph& g,
                                           const std::vector<std::array<int, 3>>& faces) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("triangulation_hypergraph: need at least 3 vertices");
    if (g.edge_count() != 3 * n - 6)
        throw std::invalid_argument("triangulation_hypergraph: not a maximal planar graph");
    if (!is_planar(g)) throw std::invalid_argument("triangulation_hypergraph: graph not planar");
    std::size_t expected_faces = n == 3 ? 1 : static_cast<std::size_t>(2 * n - 4);
    if (faces.size() != expected_faces)
        throw std::invalid_argument("triangulation_hypergraph: face list has wrong size");
    for (auto& f : faces)
        if (!(g.has_edge(f[0], f[1]) && g.has_edge(f[0], f[2]) && g.has_edge(f[1], f[2])))
            throw std::invalid_argument("triangulation_hypergraph: face is not a triangle");
    std::vector<std::vector<int>> edges;
    edges.push_back({});
    for (int v = 0; v < n; ++v) edges.push_back({v});
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    for (auto& f : faces) edges.push_back({f[0], f[1], f[2]});
    return Hypergraph(n, std::move(edges));
}

// hyperedge-count bounds: which proved class the bound is taken from

struct GenusClass {
    int r = 0;  // Euler genus; only r = 0 (planarity) is decided, r > 0 is declared
};
struct Nabla1Class {
    int r = 1;
};
struct KrrClass {
    int r = 2;
};
using HyperedgeBoundClass = std::variant<GenusClass, Nabla1Class, KrrClass>;

struct HyperedgeBoundReport {
    std::uint64_t count = 0;
    exact::Rat bound;
    bool satisfied = false;
    bool membership_checked = false;
};

/// Checks the hyperedge-count bound for the given class. Membership is
/// verified where decidable (planarity for genus 0, K_{r,r}-freeness,
/// nabla_1 of the incidence graph); genus r > 0 is taken on trust and the
/// report says so via membership_checked = false.
inline HyperedgeBoundReport hyperedge_bound_check(const Hypergraph& h,
                                                  const HyperedgeBoundClass& cls) {
    HyperedgeBoundReport rep;
    rep.count = static_cast<std::uint64_t>(h.edge_count());
    int n = h.vertex_count();
    if (std::holds_alternative<GenusClass>(cls)) {
        int r = std::get<GenusClass>(cls).r;
        if (r < 0) throw std::invalid_argument("genus must be nonnegative");
        if (n <= 2)
            throw std::invalid_argument("hyperedge bound for genus requires n > 2");
        if (r == 0) {
            if (!is_planar(incidence_graph(h)))
                throw class_violation_error("incidence graph is not planar");
            rep.membership_checked = true;
        }
        rep.bound = exact::Rat(6 * n - 9 + 5 * r);
    } else if (std::holds_alternative<Nabla1Class>(cls)) {
        int r = std::get<Nabla1Class>(cls).r;
        if (r < 1) throw std::invalid_argument("nabla1 bound requires r >= 1");
        if (nabla1(incidence_graph(h)) > exact::Rat(r))
            throw class_violation_error("nabla1 of the incidence graph exceeds r");
        rep.membership_checked = true;
        rep.bound = exact::Rat(exact::ipow(4, static_cast<unsigned>(r)) * n);
    } else {
        int r = std::get<KrrClass>(cls).r;
        if (r < 2) throw std::invalid_argument("Krr bound requires r >= 2");
        if (has_krr_subgraph(incidence_graph(h), r))
            throw class_violation_error("incidence graph contains K_{r,r}");
        rep.membership_checked = true;
        exact::Rat bound = exact::Rat(r - 2, r + 1) *
                           exact::Rat(exact::binomial(static_cast<unsigned>(n),
                                                      static_cast<unsigned>(r)));
        for (int i = 0; i <= r; ++i)
            bound += exact::Rat(exact::binomial(static_cast<unsigned>(n),
                                                static_cast<unsigned>(i)));
        rep.bound = bound;
    }
    rep.satisfied = exact::Rat(rep.count) <= rep.bound;
    return rep;
}

// Hypergraph text format: "n m" header, then one hyperedge per line as
// space-separated vertex ids; an empty line encodes the empty hyperedge.

inline std::string to_hypergraph_text(const Hypergraph& h) {
    std::ostringstream out;
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

inline Hypergraph from_hypergraph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw parse_error(parse_error::Kind::syntax, 0, "hypergraph: missing header");
    std::istringstream hdr(line);
    long long n, m;
    if (!(hdr >> n >> m) || n < 0 || m < 0)
        throw parse_error(parse_error::Kind::syntax, 0, "hypergraph: bad 'n m' header");
    std::vector<std::vector<int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw parse_error(parse_error::Kind::syntax, 0,
                              "hypergraph: expected " + std::to_string(m) + " hyperedge lines");
        std::istringstream ls(line);
        std::vector<int> e;
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= n)
                throw parse_error(parse_error::Kind::semantic, 0,
                                  "hypergraph: vertex out of range in hyperedge " +
                                      std::to_string(i));
            e.push_back(static_cast<int>(v));
        }
        edges.push_back(std::move(e));
    }
    Hypergraph h(static_cast<int>(n), std::move(edges));
    if (h.edge_count() != static_cast<int>(m))
        throw parse_error(parse_error::Kind::semantic, 0,
                          "hypergraph: duplicate hyperedges in input");
    return h;
}

}  // namespace widthkit

#endif
