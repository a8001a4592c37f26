#ifndef WIDTHKIT_PLANARITY_HPP
#define WIDTHKIT_PLANARITY_HPP

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "graph.hpp"

namespace widthkit {

/// Exact planarity test. Euler-formula quick filters, then Boyer-Myrvold.
inline bool is_planar(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (n < 5) return true;
    if (m > 3 * n - 6) return false;
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace widthkit

#endif
