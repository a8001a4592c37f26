#ifndef WIDTHKIT_COMPILE_HPP
#define WIDTHKIT_COMPILE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "bitset.hpp"
#include "decomposition.hpp"
#include "graph.hpp"
#include "kexpr.hpp"

namespace widthkit {

struct CompiledKExpression {
    KExpression expr;
    std::vector<int> leaf_vertices;  // original vertex of the i-th leaf, in expression order
    int c = 0;                       // C = beta_G(T,mu); the expression uses <= 2C+1 labels
};

struct CompileOptions {
    /// Re-checks the two inductive labeling conditions at every tree node:
    /// equal labels share their outside-neighborhood, and label 2C+1 is
    /// exactly the set of vertices with no outside neighbors.
    bool check_invariants = false;
};

namespace detail {

class RankdecCompiler {
public:
    RankdecCompiler(const Graph& g, const RankDecomposition& d, CompileOptions opts)
        : g_(g), d_(d), opts_(opts), n_(g.vertex_count()) {}

    CompiledKExpression run() {
        if (auto bad = validate_rankdec(g_, d_); !bad.empty()) throw validation_error(bad);
        if (n_ == 0)
            throw std::invalid_argument("rankdec_to_kexpr: the empty graph has no expression");
        CompiledKExpression out;
        if (n_ == 1) {
            out.c = 0;
            out.expr.root = out.expr.add({KExpression::Kind::Leaf, 1, 0, -1, -1});
            out.leaf_vertices = {0};
            return out;
        }
        c_ = beta(g_, d_);
        big_ = 2 * c_ + 1;
        expr_ = &out.expr;
        if (n_ == 2) {
            // no internal tree node exists; emit the two-vertex expression directly
            int l0, l1;
            if (g_.has_edge(0, 1)) {
                l0 = out.expr.add({KExpression::Kind::Leaf, 1, 0, -1, -1});
                l1 = out.expr.add({KExpression::Kind::Leaf, 2, 0, -1, -1});
                int un = out.expr.add({KExpression::Kind::Union, 0, 0, l0, l1});
                out.expr.root = out.expr.add({KExpression::Kind::Join, 1, 2, un, -1});
            } else {
                l0 = out.expr.add({KExpression::Kind::Leaf, big_, 0, -1, -1});
                l1 = out.expr.add({KExpression::Kind::Leaf, big_, 0, -1, -1});
                out.expr.root = out.expr.add({KExpression::Kind::Union, 0, 0, l0, l1});
            }
            out.leaf_vertices = {0, 1};
            out.c = c_;
            return out;
        }

        build_tree_index();
        Fragment top = build(root_, -1);
        out.expr.root = top.expr_root;
        out.leaf_vertices = std::move(top.leaves);
        out.c = c_;
        return out;
    }

private:
    struct Fragment {
        int expr_root = -1;
        Bitset dv;               // vertex set of the subtree
        std::vector<int> lab;    // lab[v] for v in dv, 0 elsewhere
        std::vector<int> leaves;
    };

    void build_tree_index() {
        for (auto [a, b] : d_.tree_edges) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& [id, nb] : adj_) std::sort(nb.begin(), nb.end());
        vertex_of_leaf_.clear();
        for (int v = 0; v < n_; ++v) vertex_of_leaf_[d_.leaf_of_vertex[v]] = v;
        root_ = -1;
        for (auto& [id, nb] : adj_)
            if (nb.size() == 3) {
                root_ = id;
                break;  // adj_ is an ordered map: smallest internal id
            }
        if (root_ == -1) throw std::logic_error("no internal node in a tree with >= 3 leaves");
    }

    Fragment build(int node, int parent) {
        std::vector<int> children;
        for (int nb : adj_[node])
            if (nb != parent) children.push_back(nb);
        if (children.empty()) return make_leaf(vertex_of_leaf_.at(node));
        if (children.size() == 2)
            return merge(build(children[0], node), build(children[1], node));
        // the root is an internal node of degree 3: fold its three subtrees
        Fragment f = merge(build(children[0], node), build(children[1], node));
        return merge(std::move(f), build(children[2], node));
    }

    Fragment make_leaf(int vertex) {
        Fragment f;
        f.dv = Bitset(n_);
        f.dv.set(vertex);
        f.lab.assign(n_, 0);
        // a leaf with outside neighbors starts at label 1 so that label 2C+1
        // stays reserved for outside-isolated vertices
        f.lab[vertex] = g_.degree(vertex) > 0 ? 1 : big_;
        f.expr_root = expr_->add({KExpression::Kind::Leaf, f.lab[vertex], 0, -1, -1});
        f.leaves = {vertex};
        check_fragment(f);
        return f;
    }

    Fragment merge(Fragment left, Fragment right) {
        Fragment f;
        f.dv = left.dv | right.dv;
        Bitset outside = f.dv;
        for (int v = 0; v < n_; ++v)
            if (!f.dv.test(v))
                outside.set(v);
            else
                outside.reset(v);

        // shift the right fragment's working labels 1..C up to C+1..2C
        int rexpr = right.expr_root;
        std::vector<bool> present_r(big_ + 1, false);
        right.dv.for_each_set([&](std::size_t v) { present_r[right.lab[v]] = true; });
        for (int i = c_; i >= 1; --i)
            if (present_r[i]) rexpr = expr_->add({KExpression::Kind::Relabel, i, i + c_, rexpr, -1});
        f.lab.assign(n_, 0);
        left.dv.for_each_set([&](std::size_t v) { f.lab[v] = left.lab[v]; });
        right.dv.for_each_set([&](std::size_t v) {
            f.lab[v] = right.lab[v] == big_ ? big_ : right.lab[v] + c_;
        });

        int cur = expr_->add({KExpression::Kind::Union, 0, 0, left.expr_root, rexpr});
        f.leaves = std::move(left.leaves);
        f.leaves.insert(f.leaves.end(), right.leaves.begin(), right.leaves.end());

        // cross joins: one per label pair carrying at least one edge
        std::set<std::pair<int, int>> joins;
        left.dv.for_each_set([&](std::size_t x) {
            Bitset nb = g_.neighbors(static_cast<int>(x)) & right.dv;
            nb.for_each_set([&](std::size_t y) {
                int lx = f.lab[x], ly = f.lab[y];
                if (lx == big_ || ly == big_)
                    throw std::logic_error("compile: edge out of a 2C+1-labeled vertex");
                joins.emplace(lx, ly);
            });
        });
        for (auto [i, j] : joins) cur = expr_->add({KExpression::Kind::Join, i, j, cur, -1});

        // retire labels whose class lost all outside neighbors
        auto class_neighborhood = [&](int label) {
            Bitset nb(n_);
            f.dv.for_each_set([&](std::size_t v) {
                if (f.lab[v] == label) nb |= g_.neighbors(static_cast<int>(v));
            });
            nb &= outside;
            return nb;
        };
        std::vector<bool> present(big_ + 1, false);
        f.dv.for_each_set([&](std::size_t v) { present[f.lab[v]] = true; });
        for (int l = 1; l <= 2 * c_; ++l) {
            if (!present[l]) continue;
            if (class_neighborhood(l).none()) {
                cur = expr_->add({KExpression::Kind::Relabel, l, big_, cur, -1});
                f.dv.for_each_set([&](std::size_t v) {
                    if (f.lab[v] == l) f.lab[v] = big_;
                });
                present[l] = false;
                present[big_] = true;
            }
        }

        // merge labels with identical (nonempty) outside-neighborhoods;
        // groups are processed in lexicographic neighborhood order and each
        // keeps its smallest label
        std::map<int, Bitset> nb_of;
        for (int l = 1; l <= 2 * c_; ++l)
            if (present[l]) nb_of.emplace(l, class_neighborhood(l));
        std::vector<std::vector<int>> groups;
        {
            std::vector<std::pair<Bitset, std::vector<int>>> acc;
            for (auto& [l, nb] : nb_of) {
                bool found = false;
                for (auto& [key, ls] : acc)
                    if (key == nb) {
                        ls.push_back(l);
                        found = true;
                        break;
                    }
                if (!found) acc.emplace_back(nb, std::vector<int>{l});
            }
            std::sort(acc.begin(), acc.end(),
                      [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
            for (auto& [key, ls] : acc) groups.push_back(ls);
        }
        for (auto& ls : groups) {
            int target = ls.front();  // labels were collected in ascending order
            for (std::size_t i = 1; i < ls.size(); ++i) {
                cur = expr_->add({KExpression::Kind::Relabel, ls[i], target, cur, -1});
                f.dv.for_each_set([&](std::size_t v) {
                    if (f.lab[v] == ls[i]) f.lab[v] = target;
                });
                present[ls[i]] = false;
            }
        }

        // compact surviving labels above C down into free slots 1..C
        for (int i = c_ + 1; i <= 2 * c_; ++i) {
            if (!present[i]) continue;
            int target = 0;
            for (int j = 1; j <= c_; ++j)
                if (!present[j]) {
                    target = j;
                    break;
                }
            if (target == 0)
                throw std::logic_error("compile: more than C live labels after merging");
            cur = expr_->add({KExpression::Kind::Relabel, i, target, cur, -1});
            f.dv.for_each_set([&](std::size_t v) {
                if (f.lab[v] == i) f.lab[v] = target;
            });
            present[i] = false;
            present[target] = true;
        }

        f.expr_root = cur;
        check_fragment(f);
        return f;
    }

    void check_fragment(const Fragment& f) {
        if (!opts_.check_invariants) return;
        Bitset outside(n_);
        for (int v = 0; v < n_; ++v)
            if (!f.dv.test(v)) outside.set(v);
        auto verts = f.dv.to_vector();
        for (int x : verts) {
            Bitset nx = g_.neighbors(x) & outside;
            if (nx.none() && f.lab[x] != big_)
                throw std::logic_error("compile invariant: outside-isolated vertex not at 2C+1");
            if (nx.any() && f.lab[x] == big_)
                throw std::logic_error("compile invariant: live vertex parked at 2C+1");
            for (int y : verts) {
                if (y <= x || f.lab[x] != f.lab[y]) continue;
                Bitset ny = g_.neighbors(y) & outside;
                if (!(nx == ny))
                    throw std::logic_error(
                        "compile invariant: equal labels with different outside-neighborhoods");
            }
        }
    }

    const Graph& g_;
    const RankDecomposition& d_;
    CompileOptions opts_;
    int n_;
    int c_ = 0, big_ = 1;
    KExpression* expr_ = nullptr;
    std::map<int, std::vector<int>> adj_;
    std::map<int, int> vertex_of_leaf_;
    int root_ = -1;
};

}  // namespace detail

/// Compiles a rank-decomposition into a k-expression with at most
/// 2*beta_G(T,mu)+1 labels whose value is G (vertices appear in leaf order).
/// The tree is rooted at its smallest-id internal node; the root's three
/// subtrees are folded left to right.
inline CompiledKExpression rankdec_to_kexpr(const Graph& g, const RankDecomposition& d,
                                            CompileOptions opts = {}) {
    return detail::RankdecCompiler(g, d, opts).run();
}

/// Convenience check: evaluates the compiled expression and compares against
/// the input graph under the leaf-order vertex correspondence.
inline bool compiled_matches_input(const Graph& g, const CompiledKExpression& ce) {
    LabeledGraph lg = eval_kexpr(ce.expr);
    if (lg.graph.vertex_count() != g.vertex_count()) return false;
    if (static_cast<int>(ce.leaf_vertices.size()) != g.vertex_count()) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (lg.graph.has_edge(u, v) != g.has_edge(ce.leaf_vertices[u], ce.leaf_vertices[v]))
                return false;
    return true;
}

}  // namespace widthkit

#endif
