#ifndef WIDTHKIT_MINORS_HPP
#define WIDTHKIT_MINORS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "budget.hpp"
#include "graph.hpp"

namespace widthkit {

namespace detail {

inline std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline std::uint64_t neighborhood_of(const std::vector<std::uint64_t>& adj, std::uint64_t set) {
    std::uint64_t nb = 0;
    while (set) {
        int v = std::countr_zero(set);
        set &= set - 1;
        nb |= adj[v];
    }
    return nb;
}

// Exhaustive search for r vertex-disjoint connected branch sets, pairwise
// joined by an edge. Branch sets are ordered by their minimum vertex to
// break set-permutation symmetry.
class KMinorSearch {
public:
    KMinorSearch(const Graph& g, int r, SearchBudget& budget)
        : adj_(g.adjacency_masks()), n_(g.vertex_count()), r_(r), budget_(budget) {}

    bool run() {
        if (r_ > n_) return false;
        sets_.clear();
        return place_next_set(0, 0);
    }

private:
    // pick a branch set whose minimum vertex is above min_floor
    bool place_next_set(std::uint64_t used, int min_floor) {
        if (static_cast<int>(sets_.size()) == r_) return true;
        // not enough vertices left for the remaining branch sets
        if (n_ - std::popcount(used) < r_ - static_cast<int>(sets_.size())) return false;
        for (int m = min_floor; m < n_; ++m) {
            if (used >> m & 1) continue;
            std::uint64_t mbit = std::uint64_t{1} << m;
            std::uint64_t allowed = ~used & full_mask(n_) & ~(mbit - 1);
            if (grow(mbit, adj_[m] & allowed & ~mbit, allowed, 0, m)) return true;
        }
        return false;
    }

    // Enumerates every connected superset of `part` within `allowed` exactly
    // once: after a frontier vertex's branch is explored it joins `banned`
    // for all sibling branches.
    bool grow(std::uint64_t part, std::uint64_t ext, std::uint64_t allowed, std::uint64_t banned,
              int min_vertex) {
        budget_.charge();
        if (complete_set(part, min_vertex)) return true;
        while (ext) {
            int v = std::countr_zero(ext);
            std::uint64_t vbit = std::uint64_t{1} << v;
            ext &= ~vbit;
            std::uint64_t child_ext = (ext | (adj_[v] & allowed)) & ~part & ~vbit & ~banned;
            if (grow(part | vbit, child_ext, allowed, banned, min_vertex)) return true;
            banned |= vbit;
        }
        return false;
    }

    bool complete_set(std::uint64_t part, int min_vertex) {
        // adjacency to every previously placed branch set
        for (std::uint64_t s : sets_)
            if ((neighborhood_of(adj_, part) & s) == 0) return false;
        sets_.push_back(part);
        std::uint64_t used = 0;
        for (std::uint64_t s : sets_) used |= s;
        bool ok = place_next_set(used, min_vertex + 1);
        sets_.pop_back();
        return ok;
    }

    std::vector<std::uint64_t> adj_;
    int n_, r_;
    SearchBudget& budget_;
    std::vector<std::uint64_t> sets_;
};

}  // namespace detail

/// True iff K_r is a minor of G. Exhaustive branch-set search, budget-guarded.
inline bool has_minor(const Graph& g, int r, SearchBudget budget = SearchBudget()) {
    if (r < 1) throw std::invalid_argument("has_minor: r must be at least 1");
    if (g.vertex_count() > 64) throw std::invalid_argument("has_minor: at most 64 vertices");
    if (r == 1) return g.vertex_count() >= 1;
    detail::KMinorSearch search(g, r, budget);
    return search.run();
}

namespace detail {

// Routes internally vertex-disjoint paths between fixed branch vertices,
// one pair at a time, enumerating all simple paths per pair.
class TopMinorRouter {
public:
    TopMinorRouter(const std::vector<std::uint64_t>& adj, int n, SearchBudget& budget)
        : adj_(adj), n_(n), budget_(budget) {}

    bool route(const std::vector<std::pair<int, int>>& pairs, std::uint64_t branch) {
        pairs_ = &pairs;
        branch_ = branch;
        return route_pair(0, 0);
    }

private:
    bool route_pair(std::size_t idx, std::uint64_t used_internal) {
        if (idx == pairs_->size()) return true;
        auto [a, b] = (*pairs_)[idx];
        return extend(a, b, idx, std::uint64_t{1} << a, used_internal);
    }

    // grow a simple path from `cur` toward `b`; internal vertices must avoid
    // branch vertices and internals of other paths
    bool extend(int cur, int b, std::size_t idx, std::uint64_t on_path,
                std::uint64_t used_internal) {
        budget_.charge();
        if (adj_[cur] >> b & 1)
            if (route_pair(idx + 1, used_internal | (on_path & ~branch_))) return true;
        std::uint64_t cand = adj_[cur] & ~on_path & ~branch_ & ~used_internal & full_mask(n_);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (extend(v, b, idx, on_path | (std::uint64_t{1} << v), used_internal)) return true;
        }
        return false;
    }

    const std::vector<std::uint64_t>& adj_;
    int n_;
    SearchBudget& budget_;
    const std::vector<std::pair<int, int>>* pairs_ = nullptr;
    std::uint64_t branch_ = 0;
};

}  // namespace detail

/// True iff K_r is a topological minor of G: r branch vertices of degree at
/// least r-1 joined by internally vertex-disjoint paths.
inline bool has_topological_minor(const Graph& g, int r, SearchBudget budget = SearchBudget()) {
    if (r < 1) throw std::invalid_argument("has_topological_minor: r must be at least 1");
    int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("has_topological_minor: at most 64 vertices");
    if (r == 1) return n >= 1;
    if (r > n) return false;
    auto adj = g.adjacency_masks();
    std::vector<int> eligible;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= r - 1) eligible.push_back(v);
    if (static_cast<int>(eligible.size()) < r) return false;

    std::vector<int> pick(r);
    std::vector<std::pair<int, int>> pairs;
    detail::TopMinorRouter router(adj, n, budget);
    // enumerate r-subsets of eligible branch vertices
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        budget.charge();
        std::uint64_t branch = 0;
        for (int i = 0; i < r; ++i) {
            pick[i] = eligible[idx[i]];
            branch |= std::uint64_t{1} << pick[i];
        }
        pairs.clear();
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) pairs.emplace_back(pick[i], pick[j]);
        if (router.route(pairs, branch)) return true;
        // next combination
        int i = r - 1;
        while (i >= 0 && idx[i] == static_cast<int>(eligible.size()) - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

/// True iff G contains K_{r,r} as a subgraph: disjoint r-sets A, B with all
/// r*r cross edges present. Works on arbitrary (also non-bipartite) graphs.
inline bool has_krr_subgraph(const Graph& g, int r, SearchBudget budget = SearchBudget()) {
    if (r < 1) throw std::invalid_argument("has_krr_subgraph: r must be at least 1");
    int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= r) cand.push_back(v);
    if (static_cast<int>(cand.size()) < 2 * r) return false;

    // For every r-subset A of candidates, check |common neighborhood \ A| >= r.
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        budget.charge();
        Bitset common = g.neighbors(cand[idx[0]]);
        for (int i = 1; i < r; ++i) common &= g.neighbors(cand[idx[i]]);
        for (int i = 0; i < r; ++i) common.reset(cand[idx[i]]);
        if (static_cast<int>(common.count()) >= r) return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == static_cast<int>(cand.size()) - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

}  // namespace widthkit

#endif
