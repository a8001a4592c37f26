#ifndef WIDTHKIT_GF2_HPP
#define WIDTHKIT_GF2_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "budget.hpp"
#include "graph.hpp"

namespace widthkit {

/// Matrix over GF(2), row-major bit rows of fixed width.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols)
        : rows_(check(rows)), cols_(check(cols)), data_(static_cast<std::size_t>(rows), Bitset(cols)) {}

    static BinaryMatrix from_rows(int cols, const std::vector<std::vector<int>>& one_positions) {
        BinaryMatrix m(static_cast<int>(one_positions.size()), cols);
        for (std::size_t i = 0; i < one_positions.size(); ++i)
            for (int j : one_positions[i]) m.set(static_cast<int>(i), j);
        return m;
    }

    /// Parses rows of '0'/'1' characters, e.g. {"110", "011", "101"}.
    static BinaryMatrix from_strings(const std::vector<std::string>& rows) {
        int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        BinaryMatrix m(static_cast<int>(rows.size()), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != cols)
                throw std::invalid_argument("from_strings: ragged rows");
            for (int j = 0; j < cols; ++j)
                if (rows[i][j] == '1') m.set(static_cast<int>(i), j);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool test(int i, int j) const { return row(i).test(check_col(j)); }
    void set(int i, int j) { data_[check_row(i)].set(check_col(j)); }

    const Bitset& row(int i) const { return data_[check_row(i)]; }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < rows_; ++i) {
            out += data_[i].to_string();
            out += '\n';
        }
        return out;
    }

    bool operator==(const BinaryMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    static int check(int v) {
        if (v < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
        return v;
    }
    int check_row(int i) const {
        if (i < 0 || i >= rows_) throw std::invalid_argument("row index out of range");
        return i;
    }
    int check_col(int j) const {
        if (j < 0 || j >= cols_) throw std::invalid_argument("column index out of range");
        return j;
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Bitset> data_;
};

/// GF(2) rank by word-parallel row reduction.
inline int rank_gf2(const BinaryMatrix& m) {
    std::vector<Bitset> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        if (m.row(i).any()) rows.push_back(m.row(i));
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i].test(col)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != rank && rows[i].test(col)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

inline int distinct_rows(const BinaryMatrix& m) {
    std::set<Bitset> seen;
    for (int i = 0; i < m.rows(); ++i) seen.insert(m.row(i));
    return static_cast<int>(seen.size());
}

inline int distinct_nonzero_rows(const BinaryMatrix& m) {
    std::set<Bitset> seen;
    for (int i = 0; i < m.rows(); ++i)
        if (m.row(i).any()) seen.insert(m.row(i));
    return static_cast<int>(seen.size());
}

namespace detail {
inline Bitset vertex_set_to_bitset(const Graph& g, const std::vector<int>& x) {
    Bitset b(g.vertex_count());
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex set: vertex " + std::to_string(v) + " out of range");
        b.set(v);
    }
    return b;
}
}  // namespace detail

/// Bipartite adjacency matrix of G<X>: rows indexed by the complement of X in
/// ascending vertex order, columns by X in ascending order. Entry (i,j) = 1
/// iff the row vertex and column vertex are adjacent in G.
inline BinaryMatrix bipartite_adjacency(const Graph& g, const std::vector<int>& x) {
    Bitset in_x = detail::vertex_set_to_bitset(g, x);
    std::vector<int> cols = in_x.to_vector();
    std::vector<int> row_verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_x.test(v)) row_verts.push_back(v);
    BinaryMatrix m(static_cast<int>(row_verts.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < row_verts.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (g.has_edge(row_verts[i], cols[j])) m.set(static_cast<int>(i), static_cast<int>(j));
    return m;
}

/// cutrk_G(X) = GF(2) rank of the bipartite adjacency matrix of G<X>.
inline int cutrank(const Graph& g, const std::vector<int>& x) {
    return rank_gf2(bipartite_adjacency(g, x));
}

/// lambda_G(X): number of distinct neighborhoods-in-X among vertices outside
/// X. With no columns this is 1 if there is at least one row, else 0.
inline int lambda_of_set(const Graph& g, const std::vector<int>& x) {
    return distinct_rows(bipartite_adjacency(g, x));
}

/// c_G(X): number of distinct nonzero rows of the cut's matrix.
inline int c_of_set(const Graph& g, const std::vector<int>& x) {
    return distinct_nonzero_rows(bipartite_adjacency(g, x));
}

namespace detail {

// Mask-based fast paths for n <= 64; these drive the solvers and sweeps.

/// Rank of the cut (X, ~X) from neighbor masks: reduce rows {N(v) & ~X : v in X}.
inline int cutrank_mask(const std::vector<std::uint64_t>& adj, int n, std::uint64_t x) {
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t outside = full & ~x;
    std::uint64_t basis[64];
    int rank = 0;
    for (int v = 0; v < n; ++v) {
        if (!(x >> v & 1)) continue;
        std::uint64_t row = adj[v] & outside;
        for (int i = 0; i < rank; ++i) {
            std::uint64_t lowbit = basis[i] & (0 - basis[i]);
            if (row & lowbit) row ^= basis[i];
        }
        if (row) basis[rank++] = row;
    }
    return rank;
}

/// distinct rows of the cut's matrix, rows = outside of X (spec orientation).
inline int distinct_rows_mask(const std::vector<std::uint64_t>& adj, int n, std::uint64_t x) {
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t outside = full & ~x;
    std::vector<std::uint64_t> rows;
    for (int v = 0; v < n; ++v)
        if (outside >> v & 1) rows.push_back(adj[v] & x);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return static_cast<int>(rows.size());
}

inline int distinct_nonzero_rows_mask(const std::vector<std::uint64_t>& adj, int n,
                                      std::uint64_t x) {
    int d = distinct_rows_mask(adj, n, x);
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (int v = 0; v < n; ++v)
        if ((~x & full) >> v & 1 && (adj[v] & x) == 0) return d - 1;  // zero row present
    return d;
}

}  // namespace detail

/// lambda_G(k) = max of lambda_G(X) over all X with |X| <= k (exhaustive).
inline int lambda_of_k(const Graph& g, int k, SearchBudget budget = SearchBudget()) {
    if (k < 0) throw std::invalid_argument("lambda_of_k: k must be nonnegative");
    int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("lambda_of_k: at most 64 vertices supported");
    auto adj = g.adjacency_masks();
    int kk = std::min(k, n);
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    int best = detail::distinct_rows_mask(adj, n, 0);  // X = empty
    for (int size = 1; size <= kk; ++size) {
        // Gosper's hack: all size-subsets of the n low bits in increasing order.
        std::uint64_t x = size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
        while (true) {
            budget.charge();
            best = std::max(best, detail::distinct_rows_mask(adj, n, x));
            std::uint64_t c = x & (0 - x), r = x + c;
            if (r > full || r < x) break;  // next combination leaves the n-bit range
            x = (((x ^ r) >> 2) / c) | r;
            if (x > full) break;
        }
    }
    return best;
}

}  // namespace widthkit

#endif
