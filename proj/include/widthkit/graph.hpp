#ifndef WIDTHKIT_GRAPH_HPP
#define WIDTHKIT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace widthkit {

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges;
/// adjacency is kept symmetric by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n), Bitset(n)) {}

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) return;
        adj_[u].reset(v);
        adj_[v].reset(u);
        --m_;
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

    std::vector<int> neighbor_list(int v) const { return neighbors(v).to_vector(); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each_set([&](std::size_t v) {
                if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
            });
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    /// Neighbor masks as single words; only valid for n <= 64. Fast path for
    /// the subset-DP solvers and exhaustive searches.
    std::vector<std::uint64_t> adjacency_masks() const {
        if (n_ > 64) throw std::invalid_argument("adjacency_masks requires at most 64 vertices");
        std::vector<std::uint64_t> masks(n_, 0);
        for (int v = 0; v < n_; ++v) masks[v] = adj_[v].words().empty() ? 0 : adj_[v].words()[0];
        return masks;
    }

    // -- named constructions used all over the tests and the harness --
    static Graph complete(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }
    static Graph path(int n) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    static Graph cycle(int n) {
        if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        Graph g = path(n);
        g.add_edge(n - 1, 0);
        return g;
    }
    static Graph complete_bipartite(int a, int b) {
        Graph g(a + b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
        return g;
    }
    /// Builds a graph from an n <= 64 upper-triangle bit mask in column-major
    /// pair order (0,1),(0,2),(1,2),(0,3),... (the graph6 bit order).
    static Graph from_edge_mask(int n, std::uint64_t mask) {
        Graph g(n);
        int t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if (mask >> t & 1) g.add_edge(i, j);
        return g;
    }
    std::uint64_t edge_mask() const {
        if (n_ > 11) throw std::invalid_argument("edge_mask requires at most 11 vertices");
        std::uint64_t mask = 0;
        int t = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if (adj_[j].test(i)) mask |= std::uint64_t{1} << t;
        return mask;
    }

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new index -> original vertex
};

/// G[S]; vertices relabeled 0..|S|-1 in ascending original order.
inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts(s);
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(h), std::move(verts)};
}

/// G/e for e = {x,y}: the merged vertex is adjacent to (N(x) u N(y)) \ {x,y}.
/// Surviving vertices keep their relative order as 0..n-3; the merged vertex
/// gets the last index n-2.
inline Graph contract_edge(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) throw std::invalid_argument("contract_edge: not an edge");
    int n = g.vertex_count();
    std::vector<int> relabel(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (v != x && v != y) relabel[v] = next++;
    Graph h(n - 1);
    int merged = n - 2;
    for (auto [u, v] : g.edges()) {
        bool ux = u == x || u == y, vx = v == x || v == y;
        if (ux && vx) continue;
        if (ux)
            h.add_edge(merged, relabel[v]);
        else if (vx)
            h.add_edge(relabel[u], merged);
        else
            h.add_edge(relabel[u], relabel[v]);
    }
    return h;
}

/// Dissolution of a degree-2 vertex: joins its two neighbors (if not already
/// adjacent) and removes it. Survivors are relabeled preserving order.
inline Graph dissolve(const Graph& g, int v) {
    if (g.degree(v) != 2) throw std::invalid_argument("dissolve: vertex degree must be 2");
    auto nb = g.neighbor_list(v);
    Graph tmp = g;
    tmp.add_edge(nb[0], nb[1]);
    std::vector<int> keep;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(tmp, keep).graph;
}

/// True iff N(x) \ {x,y} == N(y) \ {x,y}.
inline bool is_twin_pair(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("is_twin_pair: vertices must be distinct");
    Bitset nx = g.neighbors(x), ny = g.neighbors(y);
    nx.reset(y);
    ny.reset(x);
    return nx == ny;
}

/// Minimum d such that repeatedly removing a minimum-degree vertex never sees
/// degree above d. Empty graph -> 0.
inline int degeneracy(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        d = std::max(d, deg[best]);
        gone[best] = true;
        g.neighbors(best).for_each_set([&](std::size_t u) {
            if (!gone[u]) --deg[u];
        });
    }
    return d;
}

/// Degeneracy ordering: a vertex order in which each vertex has at most
/// degeneracy(G) neighbors later in the order.
inline std::vector<int> degeneracy_ordering(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        order.push_back(best);
        gone[best] = true;
        g.neighbors(best).for_each_set([&](std::size_t u) {
            if (!gone[u]) --deg[u];
        });
    }
    return order;
}

namespace detail {
inline std::uint64_t count_cliques_rec(const Graph& g, const Bitset& candidates, int size_filter,
                                       int depth) {
    std::uint64_t total = 0;
    if (size_filter < 0)
        total = 1;  // current clique itself
    else if (depth == size_filter)
        return 1;  // exactly the wanted size; extensions would overshoot
    candidates.for_each_set([&](std::size_t v) {
        Bitset next = candidates & g.neighbors(static_cast<int>(v));
        // only extend with vertices above v so each clique is counted once
        for (std::size_t u = next.find_first(); u < next.size() && u <= v; u = next.find_next(u))
            next.reset(u);
        total += count_cliques_rec(g, next, size_filter, depth + 1);
    });
    return total;
}
}  // namespace detail

/// Number of cliques including the empty clique.
inline std::uint64_t count_cliques(const Graph& g) {
    Bitset all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    return detail::count_cliques_rec(g, all, -1, 0);
}

/// Number of cliques of exactly size k.
inline std::uint64_t count_cliques(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("count_cliques: negative size");
    Bitset all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    return detail::count_cliques_rec(g, all, k, 0);
}

/// Connected components as vertex lists (ascending within each component).
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            g.neighbors(v).for_each_set([&](std::size_t u) {
                if (comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(static_cast<int>(u));
                }
            });
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

}  // namespace widthkit

#endif
