#ifndef WIDTHKIT_NABLA_HPP
#define WIDTHKIT_NABLA_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "budget.hpp"
#include "exact.hpp"
#include "graph.hpp"

namespace widthkit {

namespace detail {

// A star minor is obtained by contracting a family of vertex-disjoint stars
// (a part is a star iff some member is adjacent to every other member;
// singletons count) and then deleting edges and vertices. Deleting edges
// never raises the density |E(H)|/|V(H)|, and deleting vertices is the same
// as leaving them out of the family, so the search ranges over star families
// that need not cover V. The quotient adjacency is maintained incrementally.
class Nabla1Search {
public:
    Nabla1Search(const Graph& g, SearchBudget& budget)
        : adj_(g.adjacency_masks()), n_(g.vertex_count()), budget_(budget) {
        // suffix edge counts for the branch-and-bound prune
        suffix_edges_.assign(n_ + 1, 0);
        for (int v = n_ - 1; v >= 0; --v) {
            std::uint64_t later = adj_[v] & ~((std::uint64_t{2} << v) - 1);
            suffix_edges_[v] =
                suffix_edges_[v + 1] + std::popcount(adj_[v]) - std::popcount(later);
        }
    }

    exact::Rat run() {
        best_edges_ = 0;
        best_parts_ = 1;
        assign(0);
        return exact::Rat(best_edges_, best_parts_);
    }

private:
    void assign(int v) {
        budget_.charge();
        int p = static_cast<int>(parts_.size());
        if (v == n_) {
            if (p >= 1 && edges_ * best_parts_ > best_edges_ * p) {
                best_edges_ = edges_;
                best_parts_ = p;
            }
            return;
        }
        // remaining vertices can add at most suffix_edges_[v] quotient edges
        // and never shrink the family
        if (p >= 1 && (edges_ + suffix_edges_[v]) * best_parts_ <= best_edges_ * p) return;

        std::uint64_t vbit = std::uint64_t{1} << v;
        for (int i = 0; i < p; ++i) {
            // v joins part i if the part stays a star
            std::uint64_t centers = centers_[i] & adj_[v];
            if ((parts_[i] & ~adj_[v]) == 0) centers |= vbit;
            if (!centers) continue;
            std::uint64_t saved_part = parts_[i], saved_centers = centers_[i];
            std::uint64_t added = join_quotient(i, v);
            parts_[i] |= vbit;
            centers_[i] = centers;
            assign(v + 1);
            parts_[i] = saved_part;
            centers_[i] = saved_centers;
            unjoin_quotient(i, added);
        }
        // open a singleton part
        parts_.push_back(vbit);
        centers_.push_back(vbit);
        qadj_.push_back(0);
        std::uint64_t added = join_quotient(p, v);
        assign(v + 1);
        unjoin_quotient(p, added);
        parts_.pop_back();
        centers_.pop_back();
        qadj_.pop_back();
        // or delete v
        assign(v + 1);
    }

    // connects part `target` to every part with a cross edge to v; returns
    // the mask of newly adjacent parts so the caller can undo
    std::uint64_t join_quotient(int target, int v) {
        std::uint64_t added = 0;
        for (int q = 0; q < static_cast<int>(parts_.size()); ++q) {
            if (q == target || (qadj_[target] >> q & 1)) continue;
            if (adj_[v] & parts_[q]) added |= std::uint64_t{1} << q;
        }
        qadj_[target] |= added;
        for (std::uint64_t rest = added; rest;) {
            int q = std::countr_zero(rest);
            rest &= rest - 1;
            qadj_[q] |= std::uint64_t{1} << target;
        }
        edges_ += std::popcount(added);
        return added;
    }

    void unjoin_quotient(int target, std::uint64_t added) {
        qadj_[target] &= ~added;
        for (std::uint64_t rest = added; rest;) {
            int q = std::countr_zero(rest);
            rest &= rest - 1;
            qadj_[q] &= ~(std::uint64_t{1} << target);
        }
        edges_ -= std::popcount(added);
    }

    std::vector<std::uint64_t> adj_;
    int n_;
    SearchBudget& budget_;
    std::vector<long long> suffix_edges_;
    std::vector<std::uint64_t> parts_, centers_, qadj_;
    long long edges_ = 0;
    long long best_edges_ = 0, best_parts_ = 1;
};

}  // namespace detail

/// Greatest reduced average degree with rank 1: the maximum density
/// |E(H)|/|V(H)| over all star minors of G, as an exact rational.
inline exact::Rat nabla1(const Graph& g, SearchBudget budget = SearchBudget()) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("nabla1: undefined for the empty graph");
    if (g.vertex_count() > 64) throw std::invalid_argument("nabla1: at most 64 vertices");
    detail::Nabla1Search search(g, budget);
    return search.run();
}

}  // namespace widthkit

#endif
