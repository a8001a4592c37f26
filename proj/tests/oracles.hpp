// Independent brute-force oracles for the exact solvers and containment
// tests. Everything here is deliberately written against the definitions,
// not against the implementation it checks: ranks via row-span enumeration,
// widths via full enumeration of decompositions, minors via contraction
// sequences.
#ifndef WIDTHKIT_TESTS_ORACLES_HPP
#define WIDTHKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "widthkit/decomposition.hpp"
#include "widthkit/enumerate.hpp"
#include "widthkit/gf2.hpp"
#include "widthkit/graph.hpp"

namespace oracles {

using widthkit::BinaryMatrix;
using widthkit::Graph;
using widthkit::RankDecomposition;

/// rank = log2 of the size of the row span, by enumerating all row subsets.
inline int rank_by_span(const BinaryMatrix& m) {
    std::set<std::vector<bool>> span;
    int rows = m.rows(), cols = m.cols();
    for (unsigned sub = 0; sub < (1u << rows); ++sub) {
        std::vector<bool> acc(cols, false);
        for (int i = 0; i < rows; ++i)
            if (sub >> i & 1)
                for (int j = 0; j < cols; ++j) acc[j] = acc[j] ^ m.test(i, j);
        span.insert(acc);
    }
    int r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

/// Minimum over all elimination orderings of the maximum elimination degree,
/// simulating fill edges directly.
inline int treewidth_by_orderings(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;  // width never exceeds n-1
    do {
        std::vector<std::set<int>> adj(n);
        for (auto [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        std::vector<bool> gone(n, false);
        int width = 0;
        for (int v : perm) {
            std::vector<int> nb;
            for (int u : adj[v])
                if (!gone[u]) nb.push_back(u);
            width = std::max(width, static_cast<int>(nb.size()));
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    adj[nb[i]].insert(nb[j]);
                    adj[nb[j]].insert(nb[i]);
                }
            gone[v] = true;
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// All unrooted ternary trees on the given leaves, built by attaching each
/// new leaf to every existing edge; (2n-5)!! trees for n leaves.
inline void all_ternary_trees(int n, const std::function<void(const RankDecomposition&)>& visit) {
    if (n == 2) {
        RankDecomposition d;
        d.leaf_of_vertex = {0, 1};
        d.tree_edges = {{0, 1}};
        visit(d);
        return;
    }
    struct Builder {
        int n;
        const std::function<void(const RankDecomposition&)>& visit;
        std::vector<std::pair<int, int>> edges;
        int next_id;
        void grow(int leaf) {
            if (leaf == n) {
                RankDecomposition d;
                d.tree_edges = edges;
                d.leaf_of_vertex.assign(n, -1);
                for (int v = 0; v < n; ++v) d.leaf_of_vertex[v] = v;  // leaves are nodes 0..n-1
                visit(d);
                return;
            }
            // subdivide each existing edge with a fresh internal node and
            // hang the new leaf (node id = leaf) off it
            std::size_t count = edges.size();
            for (std::size_t i = 0; i < count; ++i) {
                auto [a, b] = edges[i];
                int mid = next_id++;
                edges[i] = {a, mid};
                edges.push_back({mid, b});
                edges.push_back({mid, leaf});
                grow(leaf + 1);
                edges.pop_back();
                edges.pop_back();
                edges[i] = {a, b};
                --next_id;
            }
        }
    };
    Builder b{n, visit, {{0, 1}}, n + 1};
    // node ids: leaves 0..n-1, internal nodes from n+1 upwards (n is skipped
    // so ids stay unique while edges are rewritten)
    b.grow(2);
}

/// Minimum width over every ternary tree (exhaustive rank-width).
inline int rankwidth_by_trees(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    int best = n;
    all_ternary_trees(n, [&](const RankDecomposition& d) {
        best = std::min(best, rankdec_width(g, d));
    });
    return best;
}

/// K_r subgraph test by subset enumeration.
inline bool has_kr_subgraph(const Graph& g, int r) {
    int n = g.vertex_count();
    if (r > n) return false;
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int j = i + 1; j < r && ok; ++j)
                if (!g.has_edge(idx[i], idx[j])) ok = false;
        if (ok) return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Minor test by enumerating contraction sequences with memoization on the
/// canonical form: K_r is a minor iff some contraction sequence produces a
/// graph with a K_r subgraph.
inline bool minor_by_contractions(const Graph& g, int r,
                                  std::map<std::pair<int, std::uint64_t>, bool>* memo = nullptr) {
    std::map<std::pair<int, std::uint64_t>, bool> local;
    if (!memo) memo = &local;
    if (g.vertex_count() < r) return false;
    auto key = std::make_pair(g.vertex_count(), widthkit::canonical_form(g));
    if (auto it = memo->find(key); it != memo->end()) return it->second;
    bool found = has_kr_subgraph(g, r);
    if (!found)
        for (auto [u, v] : g.edges()) {
            if (minor_by_contractions(widthkit::contract_edge(g, u, v), r, memo)) {
                found = true;
                break;
            }
        }
    (*memo)[key] = found;
    return found;
}

/// Topological-minor test by enumerating deletions and dissolutions.
inline bool topminor_by_dissolutions(const Graph& g, int r,
                                     std::map<std::pair<int, std::uint64_t>, bool>* memo = nullptr) {
    std::map<std::pair<int, std::uint64_t>, bool> local;
    if (!memo) memo = &local;
    if (g.vertex_count() < r) return false;
    auto key = std::make_pair(g.vertex_count(), widthkit::canonical_form(g));
    if (auto it = memo->find(key); it != memo->end()) return it->second;
    bool found = has_kr_subgraph(g, r);
    if (!found) {
        for (int v = 0; v < g.vertex_count() && !found; ++v) {
            if (g.degree(v) == 2 &&
                topminor_by_dissolutions(widthkit::dissolve(g, v), r, memo))
                found = true;
        }
        for (auto [u, v] : g.edges()) {
            if (found) break;
            Graph h = g;
            h.remove_edge(u, v);
            if (topminor_by_dissolutions(h, r, memo)) found = true;
        }
        for (int v = 0; v < g.vertex_count() && !found; ++v) {
            std::vector<int> keep;
            for (int u = 0; u < g.vertex_count(); ++u)
                if (u != v) keep.push_back(u);
            if (topminor_by_dissolutions(widthkit::induced_subgraph(g, keep).graph, r, memo))
                found = true;
        }
    }
    (*memo)[key] = found;
    return found;
}

/// Kuratowski-style planarity: planar iff no K_5 and no K_{3,3} topological
/// minor. The K_{3,3} side routes 9 internally disjoint paths between two
/// chosen triples by plain DFS.
inline bool paths_routable(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                           std::size_t idx, std::set<int>& used, const std::set<int>& branch) {
    if (idx == pairs.size()) return true;
    auto [a, b] = pairs[idx];
    // enumerate simple paths from a to b avoiding used internals and branch vertices
    std::vector<int> path{a};
    std::set<int> on_path{a};
    std::function<bool(int)> dfs = [&](int cur) -> bool {
        if (g.has_edge(cur, b)) {
            std::set<int> used2 = used;
            for (int x : path)
                if (!branch.count(x)) used2.insert(x);
            std::set<int> saved = used;
            used = used2;
            if (paths_routable(g, pairs, idx + 1, used, branch)) return true;
            used = saved;
        }
        for (int nxt : g.neighbor_list(cur)) {
            if (on_path.count(nxt) || branch.count(nxt) || used.count(nxt) || nxt == b) continue;
            path.push_back(nxt);
            on_path.insert(nxt);
            if (dfs(nxt)) return true;
            path.pop_back();
            on_path.erase(nxt);
        }
        return false;
    };
    return dfs(a);
}

inline bool has_k33_subdivision(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) cand.push_back(v);
    if (cand.size() < 6) return false;
    int c = static_cast<int>(cand.size());
    // choose 6 branch vertices then a 3+3 split
    std::vector<int> idx(6);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> six;
        for (int i : idx) six.push_back(cand[i]);
        // all 3-subsets of the six as one side
        for (unsigned mask = 0; mask < 64; ++mask) {
            if (__builtin_popcount(mask) != 3 || !(mask & 1)) continue;  // fix side of six[0]
            std::vector<int> a, b;
            for (int i = 0; i < 6; ++i) (mask >> i & 1 ? a : b).push_back(six[i]);
            std::vector<std::pair<int, int>> pairs;
            for (int x : a)
                for (int y : b) pairs.emplace_back(x, y);
            std::set<int> used, branch(six.begin(), six.end());
            if (paths_routable(g, pairs, 0, used, branch)) return true;
        }
        int i = 5;
        while (i >= 0 && idx[i] == c - 6 + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

inline bool planar_by_kuratowski(const Graph& g) {
    return !topminor_by_dissolutions(g, 5) && !has_k33_subdivision(g);
}

}  // namespace oracles

#endif
