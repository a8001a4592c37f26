#ifndef WIDTHKIT_ENUMERATE_HPP
#define WIDTHKIT_ENUMERATE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

#include "graph.hpp"
#include "parallel.hpp"

namespace widthkit {

namespace detail {

/// Lexicographically minimal upper-triangle bit string over all vertex
/// orderings (pair order (0,1),(0,2),(1,2),(0,3),...). Branch and bound on
/// the per-position adjacency rows, with twin collapsing so highly symmetric
/// graphs do not explode.
class CanonicalSearch {
public:
    CanonicalSearch(int n, const std::uint32_t* adj) : n_(n), adj_(adj) {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) {
                std::uint32_t nu = adj_[u] & ~(1u << v), nv = adj_[v] & ~(1u << u);
                twins_[u] |= (nu == nv) ? (1u << v) : 0;
            }
    }

    std::uint64_t run() {
        have_best_ = false;
        search(0);
        std::uint64_t bits = 0;
        int t = 0;
        for (int p = 1; p < n_; ++p)
            for (int q = 0; q < p; ++q, ++t)
                if (best_rows_[p] >> (p - 1 - q) & 1) bits |= std::uint64_t{1} << t;
        return bits;
    }

private:
    // prefix rows 0..p-1 never exceed the best prefix; returns true when equal
    bool prefix_tight(int p) const {
        for (int i = 0; i < p; ++i)
            if (cur_rows_[i] != best_rows_[i]) return false;
        return true;
    }

    void search(int p) {
        if (p == n_) {
            for (int i = 0; i < n_; ++i) best_rows_[i] = cur_rows_[i];
            have_best_ = true;
            return;
        }
        // candidates sorted by (row value, vertex) ascending
        int cnt = 0;
        std::uint32_t rows[12];
        int verts[12];
        for (int v = 0; v < n_; ++v) {
            if (placed_mask_ >> v & 1) continue;
            std::uint32_t row = 0;
            for (int q = 0; q < p; ++q)
                row |= ((adj_[v] >> placed_[q]) & 1u) << (p - 1 - q);
            rows[cnt] = row;
            verts[cnt] = v;
            ++cnt;
        }
        for (int i = 1; i < cnt; ++i)
            for (int j = i; j > 0 && (rows[j] < rows[j - 1] ||
                                      (rows[j] == rows[j - 1] && verts[j] < verts[j - 1]));
                 --j) {
                std::swap(rows[j], rows[j - 1]);
                std::swap(verts[j], verts[j - 1]);
            }
        std::uint32_t tried_mask = 0;
        for (int i = 0; i < cnt; ++i) {
            int v = verts[i];
            // a best found inside an earlier sibling starts with our prefix,
            // so tightness must be re-derived per candidate
            if (have_best_ && prefix_tight(p) && rows[i] > best_rows_[p]) break;
            // a twin of an already-tried candidate explores an isomorphic subtree
            if (twins_[v] & tried_mask) {
                tried_mask |= 1u << v;
                continue;
            }
            placed_[p] = v;
            placed_mask_ |= 1u << v;
            cur_rows_[p] = rows[i];
            search(p + 1);
            placed_mask_ &= ~(1u << v);
            tried_mask |= 1u << v;
        }
    }

    int n_;
    const std::uint32_t* adj_;
    std::uint32_t twins_[12] = {};
    int placed_[12] = {};
    std::uint32_t placed_mask_ = 0;
    std::uint32_t cur_rows_[12] = {}, best_rows_[12] = {};
    bool have_best_ = false;
};

inline std::uint64_t canonical_bits(int n, const std::uint32_t* adj) {
    CanonicalSearch s(n, adj);
    return s.run();
}

}  // namespace detail

/// Canonical form of a graph on n <= 11 vertices: the lexicographically
/// minimal adjacency bit string under vertex permutations, as a bit mask in
/// the column-major pair order used by from_edge_mask.
inline std::uint64_t canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("canonical_form: at most 11 vertices");
    std::uint32_t adj[12] = {};
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbor_list(v)) adj[v] |= 1u << u;
    return detail::canonical_bits(n, adj);
}

/// All graphs on exactly n vertices up to isomorphism, as canonical edge
/// masks in ascending order. Built by extending the census one vertex at a
/// time and canonicalizing.
inline std::vector<std::uint64_t> enumerate_graphs(int n, unsigned threads = 0) {
    if (n < 1 || n > 9) throw std::invalid_argument("enumerate_graphs: supported range is 1..9");
    std::vector<std::uint64_t> level{0};  // the one-vertex graph
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> canon;
        std::mutex merge_mutex;
        unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
        std::size_t chunk = (level.size() + nthreads - 1) / nthreads;
        parallel_for(
            nthreads,
            [&](std::size_t t) {
                std::unordered_set<std::uint64_t> local;
                std::size_t lo = t * chunk, hi = std::min(level.size(), lo + chunk);
                std::uint32_t adj[12];
                for (std::size_t idx = lo; idx < hi; ++idx) {
                    std::uint64_t parent = level[idx];
                    // parent adjacency masks
                    std::uint32_t padj[12] = {};
                    int t2 = 0;
                    for (int j = 1; j < k - 1; ++j)
                        for (int i = 0; i < j; ++i, ++t2)
                            if (parent >> t2 & 1) {
                                padj[i] |= 1u << j;
                                padj[j] |= 1u << i;
                            }
                    for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                        for (int i = 0; i < k - 1; ++i)
                            adj[i] = padj[i] | (((nb >> i) & 1u) << (k - 1));
                        adj[k - 1] = nb;
                        local.insert(detail::canonical_bits(k, adj));
                    }
                }
                std::lock_guard<std::mutex> lock(merge_mutex);
                canon.insert(local.begin(), local.end());
            },
            nthreads);
        level.assign(canon.begin(), canon.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

/// Census across 1..n vertices: pairs (vertex count, canonical mask).
inline std::vector<std::pair<int, std::uint64_t>> enumerate_graphs_up_to(int n,
                                                                         unsigned threads = 0) {
    std::vector<std::pair<int, std::uint64_t>> out;
    for (int k = 1; k <= n; ++k)
        for (std::uint64_t mask : enumerate_graphs(k, threads)) out.emplace_back(k, mask);
    return out;
}

}  // namespace widthkit

#endif
