#ifndef WIDTHKIT_KEXPR_HPP
#define WIDTHKIT_KEXPR_HPP

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace widthkit {

/// AST of the 4-operation clique-width algebra:
///   Leaf(i)            a single vertex labeled i
///   Relabel(i,j,e)     every label-i vertex becomes label j   (i != j)
///   Join(i,j,e)        all edges between label i and label j  (i != j)
///   Union(l,r)         disjoint union, left operand's vertices first
/// Nodes live in an arena; the expression is a value type.
struct KExpression {
    enum class Kind { Leaf, Relabel, Join, Union };
    struct Node {
        Kind kind;
        int a = 0, b = 0;        // labels (Leaf uses a)
        int left = -1, right = -1;  // children (Relabel/Join use left)
    };
    std::vector<Node> nodes;
    int root = -1;
    int declared_k = 0;  // 0 = inferred from the labels used

    int add(Node n) {
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }

    /// Number of distinct labels referenced anywhere in the expression;
    /// an upper-bound certificate for the clique-width of its value.
    int width() const {
        if (root < 0) return 0;
        std::set<int> labels;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const Node& n = nodes[stack.back()];
            stack.pop_back();
            if (n.kind == Kind::Leaf) {
                labels.insert(n.a);
            } else if (n.kind == Kind::Union) {
                stack.push_back(n.left);
                stack.push_back(n.right);
            } else {
                labels.insert(n.a);
                labels.insert(n.b);
                stack.push_back(n.left);
            }
        }
        return static_cast<int>(labels.size());
    }

    bool structurally_equal(const KExpression& o) const { return eq(root, o, o.root); }

private:
    bool eq(int i, const KExpression& o, int j) const {
        if ((i < 0) != (j < 0)) return false;
        if (i < 0) return true;
        const Node &x = nodes[i], &y = o.nodes[j];
        if (x.kind != y.kind || x.a != y.a || x.b != y.b) return false;
        return eq(x.left, o, y.left) && eq(x.right, o, y.right);
    }
};

/// Width helper matching the operation-style surface.
inline int kexpr_width(const KExpression& e) { return e.width(); }

struct LabeledGraph {
    Graph graph;
    std::vector<int> labels;  // labels[v] in 1..k
};

/// Bottom-up evaluation. Union assigns fresh vertex ids left-then-right;
/// Join is idempotent (no parallel edges).
inline LabeledGraph eval_kexpr(const KExpression& e) {
    if (e.root < 0) throw std::invalid_argument("eval_kexpr: empty expression");
    struct Frame {
        int node;
        int stage;
    };
    std::vector<LabeledGraph> values;
    std::vector<Frame> stack{{e.root, 0}};
    std::vector<int> result_of(e.nodes.size(), -1);
    while (!stack.empty()) {
        auto [ni, stage] = stack.back();
        stack.pop_back();
        const auto& node = e.nodes[ni];
        if (stage == 0) {
            stack.push_back({ni, 1});
            if (node.kind != KExpression::Kind::Leaf) {
                stack.push_back({node.left, 0});
                if (node.kind == KExpression::Kind::Union) stack.push_back({node.right, 0});
            }
            continue;
        }
        switch (node.kind) {
            case KExpression::Kind::Leaf: {
                LabeledGraph lg{Graph(1), {node.a}};
                result_of[ni] = static_cast<int>(values.size());
                values.push_back(std::move(lg));
                break;
            }
            case KExpression::Kind::Relabel: {
                LabeledGraph lg = std::move(values[result_of[node.left]]);
                for (auto& l : lg.labels)
                    if (l == node.a) l = node.b;
                result_of[ni] = static_cast<int>(values.size());
                values.push_back(std::move(lg));
                break;
            }
            case KExpression::Kind::Join: {
                LabeledGraph lg = std::move(values[result_of[node.left]]);
                std::vector<int> is, js;
                for (int v = 0; v < lg.graph.vertex_count(); ++v) {
                    if (lg.labels[v] == node.a) is.push_back(v);
                    if (lg.labels[v] == node.b) js.push_back(v);
                }
                for (int u : is)
                    for (int w : js) lg.graph.add_edge(u, w);
                result_of[ni] = static_cast<int>(values.size());
                values.push_back(std::move(lg));
                break;
            }
            case KExpression::Kind::Union: {
                LabeledGraph l = std::move(values[result_of[node.left]]);
                LabeledGraph r = std::move(values[result_of[node.right]]);
                int nl = l.graph.vertex_count(), nr = r.graph.vertex_count();
                Graph g(nl + nr);
                for (auto [u, v] : l.graph.edges()) g.add_edge(u, v);
                for (auto [u, v] : r.graph.edges()) g.add_edge(nl + u, nl + v);
                std::vector<int> labels = std::move(l.labels);
                labels.insert(labels.end(), r.labels.begin(), r.labels.end());
                result_of[ni] = static_cast<int>(values.size());
                values.push_back({std::move(g), std::move(labels)});
                break;
            }
        }
    }
    return std::move(values[result_of[e.root]]);
}

namespace detail {

class KexprParser {
public:
    explicit KexprParser(std::string_view text) : text_(text) {}

    KExpression parse() {
        KExpression e;
        skip_ws();
        // optional "k=INT;" header
        if (peek_word("k")) {
            std::size_t save = pos_;
            pos_ += 1;
            skip_ws();
            if (!eat('=')) {
                pos_ = save;
            } else {
                skip_ws();
                e.declared_k = parse_int();
                if (e.declared_k < 1)
                    throw parse_error(parse_error::Kind::semantic, pos_, "declared k must be >= 1");
                skip_ws();
                expect(';', "';'");
                skip_ws();
            }
        }
        e.root = parse_expr(e, 0);
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error(parse_error::Kind::syntax, pos_, "trailing input after expression",
                              {"end of input"});
        if (e.declared_k > 0)
            for (const auto& n : e.nodes) {
                int mx = std::max(n.a, (n.kind == KExpression::Kind::Leaf) ? 0 : n.b);
                if (mx > e.declared_k)
                    throw parse_error(parse_error::Kind::semantic, pos_,
                                      "label " + std::to_string(mx) + " exceeds declared k=" +
                                          std::to_string(e.declared_k));
            }
        return e;
    }

private:
    int parse_expr(KExpression& e, int depth) {
        if (depth > 100000)
            throw parse_error(parse_error::Kind::syntax, pos_, "expression nested too deeply");
        skip_ws();
        std::size_t at = pos_;
        if (eat_word("v")) {
            expect('(', "'('");
            int i = parse_label(at);
            expect(')', "')'");
            return e.add({KExpression::Kind::Leaf, i, 0, -1, -1});
        }
        if (eat_word("rel")) return parse_binary_label_op(e, depth, KExpression::Kind::Relabel, at);
        if (eat_word("join")) return parse_binary_label_op(e, depth, KExpression::Kind::Join, at);
        if (eat_word("u")) {
            expect('(', "'('");
            int l = parse_expr(e, depth + 1);
            skip_ws();
            expect(',', "','");
            int r = parse_expr(e, depth + 1);
            skip_ws();
            expect(')', "')'");
            return e.add({KExpression::Kind::Union, 0, 0, l, r});
        }
        throw parse_error(parse_error::Kind::syntax, pos_, "expected an expression",
                          {"v(", "rel(", "join(", "u("});
    }

    int parse_binary_label_op(KExpression& e, int depth, KExpression::Kind kind, std::size_t at) {
        expect('(', "'('");
        int i = parse_label(at);
        skip_ws();
        expect(',', "','");
        int j = parse_label(at);
        if (i == j)
            throw parse_error(parse_error::Kind::semantic, at,
                              std::string(kind == KExpression::Kind::Relabel ? "rel" : "join") +
                                  " requires distinct labels, got i=j=" + std::to_string(i));
        skip_ws();
        expect(',', "','");
        int child = parse_expr(e, depth + 1);
        skip_ws();
        expect(')', "')'");
        return e.add({kind, i, j, child, -1});
    }

    int parse_label(std::size_t at) {
        skip_ws();
        int v = parse_int();
        if (v < 1)
            throw parse_error(parse_error::Kind::semantic, at,
                              "labels must be positive, got " + std::to_string(v));
        return v;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start)
            throw parse_error(parse_error::Kind::syntax, pos_, "expected an integer", {"INT"});
        long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > 1000000)
                throw parse_error(parse_error::Kind::semantic, start, "label out of range");
        }
        return static_cast<int>(v);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    bool peek_word(std::string_view w) const {
        if (text_.substr(pos_, w.size()) != w) return false;
        std::size_t after = pos_ + w.size();
        // must not be a longer identifier
        return after >= text_.size() || !isalpha_(text_[after]);
    }
    bool eat_word(std::string_view w) {
        if (!peek_word(w)) return false;
        pos_ += w.size();
        skip_ws();
        return true;
    }
    static bool isalpha_(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        skip_ws();
        if (!eat(c))
            throw parse_error(parse_error::Kind::syntax, pos_,
                              "expected " + what, {what});
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar (whitespace insignificant, optional "k=INT;" header):
///   expr := "v(" INT ")" | "rel(" INT "," INT "," expr ")"
///         | "join(" INT "," INT "," expr ")" | "u(" expr "," expr ")"
inline KExpression parse_kexpr(std::string_view text) {
    return detail::KexprParser(text).parse();
}

inline std::string serialize_kexpr(const KExpression& e) {
    std::string out;
    if (e.declared_k > 0) out += "k=" + std::to_string(e.declared_k) + ";";
    // iterative post-ordering into text
    struct Frame {
        int node;
        int stage;
    };
    std::vector<Frame> stack{{e.root, 0}};
    while (!stack.empty()) {
        auto [ni, stage] = stack.back();
        stack.pop_back();
        if (ni < 0) continue;
        const auto& n = e.nodes[ni];
        switch (n.kind) {
            case KExpression::Kind::Leaf:
                out += "v(" + std::to_string(n.a) + ")";
                break;
            case KExpression::Kind::Relabel:
            case KExpression::Kind::Join:
                if (stage == 0) {
                    out += (n.kind == KExpression::Kind::Relabel ? "rel(" : "join(");
                    out += std::to_string(n.a) + "," + std::to_string(n.b) + ",";
                    stack.push_back({ni, 1});
                    stack.push_back({n.left, 0});
                } else {
                    out += ")";
                }
                break;
            case KExpression::Kind::Union:
                if (stage == 0) {
                    out += "u(";
                    stack.push_back({ni, 1});
                    stack.push_back({n.left, 0});
                } else if (stage == 1) {
                    out += ",";
                    stack.push_back({ni, 2});
                    stack.push_back({n.right, 0});
                } else {
                    out += ")";
                }
                break;
        }
    }
    return out;
}

}  // namespace widthkit

#endif
