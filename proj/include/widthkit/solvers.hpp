#ifndef WIDTHKIT_SOLVERS_HPP
#define WIDTHKIT_SOLVERS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bitset.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "graph.hpp"

namespace widthkit {

struct SolverLimits {
    int treewidth_max = 18;
    int rankwidth_max = 12;
};

struct TreewidthResult {
    int width;
    TreeDecomposition decomposition;
};

namespace detail {

/// Number of vertices outside T u {v} reachable from v by a path whose
/// internal vertices all lie in T: the degree of v when eliminated right
/// after the vertex set T, in the fill graph.
inline int elimination_degree(const std::vector<std::uint64_t>& adj, std::uint64_t t, int v) {
    std::uint64_t vbit = std::uint64_t{1} << v;
    std::uint64_t seen = vbit, frontier = vbit, nb = 0;
    while (frontier) {
        std::uint64_t un = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            un |= adj[u];
        }
        nb |= un;
        frontier = un & t & ~seen;
        seen |= frontier;
    }
    return std::popcount(nb & ~t & ~vbit);
}

}  // namespace detail

/// Exact tree-width by dynamic programming over vertex subsets for an optimal
/// elimination ordering (O(2^n poly) time and O(2^n) space), with a witness
/// decomposition rebuilt from the ordering.
inline TreewidthResult exact_treewidth(const Graph& g, const SolverLimits& limits = {}) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("exact_treewidth: empty graph");
    if (n > limits.treewidth_max)
        throw resource_limit_error("exact_treewidth: " + std::to_string(n) +
                                       " vertices exceeds the limit of " +
                                       std::to_string(limits.treewidth_max),
                                   static_cast<std::uint64_t>(limits.treewidth_max));
    auto adj = g.adjacency_masks();
    std::size_t size = std::size_t{1} << n;
    std::vector<std::int8_t> f(size, 0), choice(size, -1);
    f[0] = -1;  // max over an empty elimination prefix
    for (std::uint64_t s = 1; s < size; ++s) {
        int best = 127, best_v = -1;
        for (std::uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t t = s & ~(std::uint64_t{1} << v);
            int val = std::max<int>(f[t], detail::elimination_degree(adj, t, v));
            if (val < best) {
                best = val;
                best_v = v;
            }
        }
        f[s] = static_cast<std::int8_t>(best);
        choice[s] = static_cast<std::int8_t>(best_v);
    }
    std::uint64_t full = size - 1;
    int width = f[full];

    // recover the elimination ordering (order[i] is eliminated i-th)
    std::vector<int> order(n);
    std::uint64_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        int v = choice[s];
        order[pos] = v;
        s &= ~(std::uint64_t{1} << v);
    }

    // replay the elimination in the fill graph; one bag per step
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<std::uint64_t> work = adj;
    std::uint64_t alive = full;
    TreeDecomposition dec;
    dec.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::uint64_t nb = work[v] & alive & ~(std::uint64_t{1} << v);
        dec.bags[i].push_back(v);
        int parent_vertex = -1;
        for (std::uint64_t rest = nb; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            dec.bags[i].push_back(u);
            if (parent_vertex == -1 || position[u] < position[parent_vertex]) parent_vertex = u;
        }
        std::sort(dec.bags[i].begin(), dec.bags[i].end());
        if (parent_vertex != -1)
            dec.tree_edges.emplace_back(i, position[parent_vertex]);
        else if (i + 1 < n)
            dec.tree_edges.emplace_back(i, i + 1);  // isolated remainder; keep the tree connected
        // make the neighborhood a clique (fill edges)
        for (std::uint64_t rest = nb; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            work[u] |= nb & ~(std::uint64_t{1} << u);
        }
        alive &= ~(std::uint64_t{1} << v);
    }
    return {width, std::move(dec)};
}

struct RankwidthResult {
    int width;
    RankDecomposition decomposition;
};

namespace detail {

class RankwidthDP {
public:
    RankwidthDP(const Graph& g) : n_(g.vertex_count()), adj_(g.adjacency_masks()) {}

    RankwidthResult run() {
        std::size_t size = std::size_t{1} << n_;
        cutrk_.assign(size, 0);
        for (std::uint64_t s = 1; s < size; ++s)
            cutrk_[s] = static_cast<std::int8_t>(cutrank_mask(adj_, n_, s));
        f_.assign(size, 0);
        choice_.assign(size, 0);
        for (std::uint64_t s = 1; s < size; ++s) {
            if (std::popcount(s) <= 1) {
                f_[s] = 0;
                continue;
            }
            std::uint64_t lowbit = s & (0 - s);
            int best = 127;
            std::uint64_t best_a = 0;
            // proper submasks containing the lowest vertex of S
            for (std::uint64_t a = (s - 1) & s; a; a = (a - 1) & s) {
                if (!(a & lowbit)) continue;
                std::uint64_t b = s & ~a;
                int val = std::max({static_cast<int>(f_[a]), static_cast<int>(f_[b]),
                                    static_cast<int>(cutrk_[a]), static_cast<int>(cutrk_[b])});
                if (val < best || (val == best && lex_less(a, best_a))) {
                    best = val;
                    best_a = a;
                }
            }
            f_[s] = static_cast<std::int8_t>(best);
            choice_[s] = static_cast<std::uint32_t>(best_a);
        }

        RankwidthResult out;
        std::uint64_t full = size - 1;
        out.width = f_[full];
        out.decomposition.leaf_of_vertex.assign(n_, -1);
        dec_ = &out.decomposition;
        next_id_ = 0;
        // unrooted ternary tree: join the two top-level subtrees directly
        std::uint64_t a = choice_[full], b = full & ~a;
        int ida = build(a), idb = build(b);
        dec_->tree_edges.emplace_back(ida, idb);
        return out;
    }

private:
    int build(std::uint64_t s) {
        if (std::popcount(s) == 1) {
            int v = std::countr_zero(s);
            int id = next_id_++;
            dec_->leaf_of_vertex[v] = id;
            return id;
        }
        int id = next_id_++;
        std::uint64_t a = choice_[s], b = s & ~a;
        dec_->tree_edges.emplace_back(id, build(a));
        dec_->tree_edges.emplace_back(id, build(b));
        return id;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::int8_t> cutrk_, f_;
    std::vector<std::uint32_t> choice_;
    RankDecomposition* dec_ = nullptr;
    int next_id_ = 0;
};

}  // namespace detail

/// Exact rank-width by subset DP: f(S) = min over proper bipartitions
/// S = A + B of max(f(A), f(B), cutrk(A), cutrk(B)); ties broken toward the
/// lexicographically smallest A so witnesses are deterministic. The witness
/// merge tree is unrooted into a ternary tree.
inline RankwidthResult exact_rankwidth(const Graph& g, const SolverLimits& limits = {}) {
    int n = g.vertex_count();
    if (n <= 1) {
        RankwidthResult out;
        out.width = 0;
        out.decomposition.leaf_of_vertex.assign(n, 0);
        return out;
    }
    if (n > limits.rankwidth_max)
        throw resource_limit_error("exact_rankwidth: " + std::to_string(n) +
                                       " vertices exceeds the limit of " +
                                       std::to_string(limits.rankwidth_max),
                                   static_cast<std::uint64_t>(limits.rankwidth_max));
    detail::RankwidthDP dp(g);
    return dp.run();
}

}  // namespace widthkit

#endif
