#ifndef WIDTHKIT_DECOMPOSITION_HPP
#define WIDTHKIT_DECOMPOSITION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "gf2.hpp"
#include "graph.hpp"

namespace widthkit {

using ordered_json = nlohmann::ordered_json;

/// Rank-decomposition (T, mu): a ternary tree (every node of degree 1 or 3)
/// whose leaves are in bijection with V(G). Node ids are arbitrary ints.
struct RankDecomposition {
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> leaf_of_vertex;  // leaf_of_vertex[v] = tree node carrying v

    std::vector<int> node_ids() const {
        std::set<int> ids;
        for (auto [a, b] : tree_edges) {
            ids.insert(a);
            ids.insert(b);
        }
        for (int l : leaf_of_vertex) ids.insert(l);
        return {ids.begin(), ids.end()};
    }
};

/// Structural check; returns the list of violated invariants (empty = valid).
inline std::vector<std::string> validate_rankdec(const Graph& g, const RankDecomposition& d) {
    std::vector<std::string> bad;
    int n = g.vertex_count();
    if (static_cast<int>(d.leaf_of_vertex.size()) != n) {
        bad.push_back("leaf_map must cover every vertex exactly once");
        return bad;
    }
    if (n <= 1) {
        if (!d.tree_edges.empty()) bad.push_back("graphs with at most 1 vertex admit no tree edges");
        return bad;
    }
    auto ids = d.node_ids();
    std::map<int, int> deg;
    for (int id : ids) deg[id] = 0;
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : d.tree_edges) {
        if (a == b) bad.push_back("tree edge is a loop");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) bad.push_back("duplicate tree edge");
        ++deg[a];
        ++deg[b];
    }
    if (d.tree_edges.size() + 1 != ids.size()) bad.push_back("tree must have |nodes|-1 edges");
    // connectivity
    if (!ids.empty()) {
        std::map<int, std::vector<int>> adj;
        for (auto [a, b] : d.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::set<int> vis{ids[0]};
        std::vector<int> stack{ids[0]};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (vis.insert(y).second) stack.push_back(y);
        }
        if (vis.size() != ids.size()) bad.push_back("tree is disconnected");
    }
    std::set<int> leaves, internal;
    for (auto& [id, dg] : deg) {
        if (dg == 1)
            leaves.insert(id);
        else if (dg == 3)
            internal.insert(id);
        else
            bad.push_back("node " + std::to_string(id) + " has degree " + std::to_string(dg) +
                          " (must be 1 or 3)");
    }
    std::set<int> mapped(d.leaf_of_vertex.begin(), d.leaf_of_vertex.end());
    if (mapped.size() != d.leaf_of_vertex.size()) bad.push_back("leaf_map is not injective");
    if (mapped != leaves) bad.push_back("leaf_map is not a bijection onto the leaves");
    return bad;
}

namespace detail {

/// Vertex sets of one side of every tree-edge cut of a rank-decomposition.
inline std::vector<std::vector<int>> edge_cut_sides(const Graph& g, const RankDecomposition& d) {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (neighbor, edge index)
    for (std::size_t i = 0; i < d.tree_edges.size(); ++i) {
        auto [a, b] = d.tree_edges[i];
        adj[a].emplace_back(b, static_cast<int>(i));
        adj[b].emplace_back(a, static_cast<int>(i));
    }
    std::map<int, int> vertex_of_leaf;
    for (int v = 0; v < g.vertex_count(); ++v) vertex_of_leaf[d.leaf_of_vertex[v]] = v;
    std::vector<std::vector<int>> sides;
    for (std::size_t i = 0; i < d.tree_edges.size(); ++i) {
        auto [a, b] = d.tree_edges[i];
        // leaves on the `a` side of edge i
        std::vector<int> side;
        std::set<int> vis{a};
        std::vector<int> stack{a};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (auto it = vertex_of_leaf.find(x); it != vertex_of_leaf.end())
                side.push_back(it->second);
            for (auto [y, ei] : adj[x])
                if (ei != static_cast<int>(i) && vis.insert(y).second) stack.push_back(y);
        }
        std::sort(side.begin(), side.end());
        sides.push_back(std::move(side));
    }
    return sides;
}

}  // namespace detail

/// Width of a rank-decomposition: max cut-rank over tree edges.
/// Graphs with at most one vertex have width 0 by convention.
inline int rankdec_width(const Graph& g, const RankDecomposition& d) {
    if (auto bad = validate_rankdec(g, d); !bad.empty()) throw validation_error(bad);
    if (g.vertex_count() <= 1) return 0;
    int w = 0;
    for (auto& side : detail::edge_cut_sides(g, d)) w = std::max(w, cutrank(g, side));
    return w;
}

/// beta_G(T,mu) = max over tree edges of max(c(X_e), c(Y_e)).
inline int beta(const Graph& g, const RankDecomposition& d) {
    if (auto bad = validate_rankdec(g, d); !bad.empty()) throw validation_error(bad);
    if (g.vertex_count() <= 1) return 0;
    int b = 0;
    for (auto& side : detail::edge_cut_sides(g, d)) {
        std::vector<int> other;
        std::set<int> in_side(side.begin(), side.end());
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_side.count(v)) other.push_back(v);
        b = std::max({b, c_of_set(g, side), c_of_set(g, other)});
    }
    return b;
}

/// Tree decomposition: tree over node ids 0..bags-1 with one bag per node.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;
};

/// Checks T1 (edges covered), T2 (occurrence sets induce subtrees),
/// T3 (bags cover V). Returns violations; never throws.
inline std::vector<std::string> validate_treedec(const Graph& g, const TreeDecomposition& d) {
    std::vector<std::string> bad;
    int k = static_cast<int>(d.bags.size());
    for (auto [a, b] : d.tree_edges)
        if (a < 0 || a >= k || b < 0 || b >= k || a == b) {
            bad.push_back("tree edge endpoints out of range");
            return bad;
        }
    // tree shape
    if (k > 0) {
        if (d.tree_edges.size() + 1 != static_cast<std::size_t>(k))
            bad.push_back("tree must have |nodes|-1 edges");
        std::vector<std::vector<int>> adj(k);
        for (auto [a, b] : d.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<bool> vis(k, false);
        std::vector<int> stack{0};
        vis[0] = true;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!vis[y]) {
                    vis[y] = true;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        if (cnt != k) bad.push_back("tree is disconnected");
    }
    for (auto& bag : d.bags)
        for (int v : bag)
            if (v < 0 || v >= g.vertex_count()) {
                bad.push_back("bag contains out-of-range vertex");
                return bad;
            }
    // T3
    std::set<int> covered;
    for (auto& bag : d.bags) covered.insert(bag.begin(), bag.end());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered.count(v)) bad.push_back("T3: vertex " + std::to_string(v) + " in no bag");
    // T1
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (auto& bag : d.bags) {
            bool has_u = std::find(bag.begin(), bag.end(), u) != bag.end();
            bool has_v = std::find(bag.begin(), bag.end(), v) != bag.end();
            if (has_u && has_v) {
                ok = true;
                break;
            }
        }
        if (!ok)
            bad.push_back("T1: edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} not covered by any bag");
    }
    // T2: occurrence nodes of each vertex induce a connected subtree
    if (k > 0 && d.tree_edges.size() + 1 == static_cast<std::size_t>(k)) {
        std::vector<std::vector<int>> adj(k);
        for (auto [a, b] : d.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> occ;
            for (int i = 0; i < k; ++i)
                if (std::find(d.bags[i].begin(), d.bags[i].end(), v) != d.bags[i].end())
                    occ.push_back(i);
            if (occ.size() <= 1) continue;
            std::set<int> inocc(occ.begin(), occ.end()), vis{occ[0]};
            std::vector<int> stack{occ[0]};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (inocc.count(y) && vis.insert(y).second) stack.push_back(y);
            }
            if (vis.size() != inocc.size())
                bad.push_back("T2: occurrences of vertex " + std::to_string(v) +
                              " are not connected");
        }
    }
    return bad;
}

/// Max bag size minus one.
inline int treedec_width(const TreeDecomposition& d) {
    if (d.bags.empty()) throw std::invalid_argument("treedec_width: empty decomposition");
    std::size_t mx = 0;
    for (auto& bag : d.bags) mx = std::max(mx, bag.size());
    return static_cast<int>(mx) - 1;
}

// -- JSON serialization (stable field order for golden files) --

inline ordered_json rankdec_to_json(const RankDecomposition& d) {
    ordered_json j;
    j["schema"] = 1;
    j["tree_edges"] = ordered_json::array();
    for (auto [a, b] : d.tree_edges) j["tree_edges"].push_back({a, b});
    ordered_json lm = ordered_json::object();
    for (std::size_t v = 0; v < d.leaf_of_vertex.size(); ++v)
        lm[std::to_string(v)] = d.leaf_of_vertex[v];
    j["leaf_map"] = std::move(lm);
    return j;
}

inline RankDecomposition rankdec_from_json(const ordered_json& j) {
    RankDecomposition d;
    for (auto& e : j.at("tree_edges")) d.tree_edges.emplace_back(e.at(0), e.at(1));
    const auto& lm = j.at("leaf_map");
    d.leaf_of_vertex.resize(lm.size());
    for (auto it = lm.begin(); it != lm.end(); ++it) {
        std::size_t v = std::stoul(it.key());
        if (v >= d.leaf_of_vertex.size())
            throw std::invalid_argument("leaf_map: vertex keys must be 0..n-1");
        d.leaf_of_vertex[v] = it.value();
    }
    return d;
}

inline ordered_json treedec_to_json(const TreeDecomposition& d) {
    ordered_json j;
    j["schema"] = 1;
    j["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        ordered_json node;
        node["id"] = i;
        node["bag"] = d.bags[i];
        j["nodes"].push_back(std::move(node));
    }
    j["edges"] = ordered_json::array();
    for (auto [a, b] : d.tree_edges) j["edges"].push_back({a, b});
    return j;
}

inline TreeDecomposition treedec_from_json(const ordered_json& j) {
    TreeDecomposition d;
    d.bags.resize(j.at("nodes").size());
    for (auto& node : j.at("nodes")) {
        std::size_t id = node.at("id");
        if (id >= d.bags.size()) throw std::invalid_argument("node ids must be 0..k-1");
        d.bags[id] = node.at("bag").get<std::vector<int>>();
    }
    for (auto& e : j.at("edges")) d.tree_edges.emplace_back(e.at(0), e.at(1));
    return d;
}

}  // namespace widthkit

#endif
