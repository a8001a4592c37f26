#ifndef WIDTHKIT_GEN_HPP
#define WIDTHKIT_GEN_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "enumerate.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "hypergraph.hpp"
#include "minors.hpp"
#include "nabla.hpp"
#include "planarity.hpp"
#include "version.hpp"

namespace widthkit {

enum class GraphClass { All, Planar, MinorFree, TopminorFree, KrrFree, Nabla1Le };

inline const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::All: return "all";
        case GraphClass::Planar: return "planar";
        case GraphClass::MinorFree: return "minor_free";
        case GraphClass::TopminorFree: return "topminor_free";
        case GraphClass::KrrFree: return "krr_free";
        case GraphClass::Nabla1Le: return "nabla1_le";
    }
    return "?";
}

inline GraphClass graph_class_from_string(const std::string& s) {
    if (s == "all") return GraphClass::All;
    if (s == "planar") return GraphClass::Planar;
    if (s == "minor_free") return GraphClass::MinorFree;
    if (s == "topminor_free") return GraphClass::TopminorFree;
    if (s == "krr_free") return GraphClass::KrrFree;
    if (s == "nabla1_le") return GraphClass::Nabla1Le;
    throw std::invalid_argument("unknown graph class '" + s + "'");
}

struct CorpusSpec {
    GraphClass cls = GraphClass::All;
    int r = 0;  // class parameter for minor_free/topminor_free/krr_free/nabla1_le
    int n_min = 1;
    int n_max = 8;
    int count = 10;
    std::uint64_t seed = 0;
    int retry_budget = 2000;  // rejection-sampling attempts per graph
};

/// True iff g belongs to the spec's class (exact membership tests).
inline bool class_member(GraphClass cls, int r, const Graph& g) {
    switch (cls) {
        case GraphClass::All: return true;
        case GraphClass::Planar: return is_planar(g);
        case GraphClass::MinorFree: return !has_minor(g, r);
        case GraphClass::TopminorFree: return !has_topological_minor(g, r);
        case GraphClass::KrrFree: return !has_krr_subgraph(g, r);
        case GraphClass::Nabla1Le:
            return g.vertex_count() > 0 && nabla1(g) <= exact::Rat(r);
    }
    return false;
}

struct GeneratedCorpus {
    std::vector<Graph> graphs;
    bool partial = false;  // rejection sampling ran out of retries
    nlohmann::ordered_json manifest;
};

namespace detail {

inline Graph random_graph(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double p = unit(rng);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < p) g.add_edge(i, j);
    return g;
}

inline Graph random_planar(std::mt19937_64& rng, int n) {
    if (n < 3) return random_graph(rng, n);  // every graph this small is planar
    Triangulation t = stacked_triangulation(n, rng());
    Graph g = t.graph;
    auto edges = g.edges();
    std::uniform_int_distribution<std::size_t> del_count(0, edges.size());
    std::size_t k = del_count(rng);
    // deterministic shuffle-then-prefix edge deletion; subgraphs stay planar
    for (std::size_t i = edges.size(); i > 1; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(edges[i - 1], edges[pick(rng)]);
    }
    for (std::size_t i = 0; i < k; ++i) g.remove_edge(edges[i].first, edges[i].second);
    return g;
}

}  // namespace detail

/// Deterministic corpus generation: the same spec and seed always produce the
/// same graphs. Classes other than all/planar use rejection sampling against
/// the exact membership tests; exhausting the retry budget yields a partial
/// corpus flagged in the result.
inline GeneratedCorpus generate_corpus(const CorpusSpec& spec) {
    if (spec.n_min < 1 || spec.n_max < spec.n_min)
        throw std::invalid_argument("generate_corpus: bad vertex range");
    if (spec.count < 0) throw std::invalid_argument("generate_corpus: bad count");
    GeneratedCorpus out;
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> pick_n(spec.n_min, spec.n_max);
    for (int i = 0; i < spec.count; ++i) {
        bool found = false;
        for (int attempt = 0; attempt < spec.retry_budget; ++attempt) {
            int n = pick_n(rng);
            Graph g = spec.cls == GraphClass::Planar ? detail::random_planar(rng, n)
                                                     : detail::random_graph(rng, n);
            if (spec.cls == GraphClass::All || spec.cls == GraphClass::Planar ||
                class_member(spec.cls, spec.r, g)) {
                out.graphs.push_back(std::move(g));
                found = true;
                break;
            }
        }
        if (!found) {
            out.partial = true;
            break;
        }
    }

    nlohmann::ordered_json manifest;
    manifest["schema"] = 1;
    manifest["tool"] = std::string(kToolName) + " " + kVersion;
    manifest["class"] = to_string(spec.cls);
    if (spec.cls != GraphClass::All && spec.cls != GraphClass::Planar) manifest["r"] = spec.r;
    manifest["n_min"] = spec.n_min;
    manifest["n_max"] = spec.n_max;
    manifest["count"] = spec.count;
    manifest["seed"] = spec.seed;
    manifest["partial"] = out.partial;
    manifest["graphs"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < out.graphs.size(); ++i) {
        nlohmann::ordered_json row;
        char name[32];
        std::snprintf(name, sizeof(name), "g%06zu.g6", i);
        row["file"] = name;
        row["n"] = out.graphs[i].vertex_count();
        row["m"] = out.graphs[i].edge_count();
        nlohmann::ordered_json wit;
        wit["class"] = to_string(spec.cls);
        if (spec.cls != GraphClass::All && spec.cls != GraphClass::Planar) wit["r"] = spec.r;
        wit["checked"] = spec.cls != GraphClass::All;
        row["witness"] = std::move(wit);
        manifest["graphs"].push_back(std::move(row));
    }
    out.manifest = std::move(manifest);
    return out;
}

/// Exhaustive corpus: every graph on n_min..n_max vertices up to isomorphism
/// (internal canonical-form census; class must be `all`).
inline GeneratedCorpus exhaustive_corpus(int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min || n_max > 9)
        throw std::invalid_argument("exhaustive_corpus: supported range is 1..9");
    GeneratedCorpus out;
    for (int n = n_min; n <= n_max; ++n)
        for (std::uint64_t mask : enumerate_graphs(n))
            out.graphs.push_back(Graph::from_edge_mask(n, mask));
    nlohmann::ordered_json manifest;
    manifest["schema"] = 1;
    manifest["tool"] = std::string(kToolName) + " " + kVersion;
    manifest["class"] = "all";
    manifest["exhaustive"] = true;
    manifest["n_min"] = n_min;
    manifest["n_max"] = n_max;
    manifest["count"] = out.graphs.size();
    manifest["graphs"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < out.graphs.size(); ++i) {
        nlohmann::ordered_json row;
        char name[32];
        std::snprintf(name, sizeof(name), "g%06zu.g6", i);
        row["file"] = name;
        row["n"] = out.graphs[i].vertex_count();
        row["m"] = out.graphs[i].edge_count();
        manifest["graphs"].push_back(std::move(row));
    }
    out.manifest = std::move(manifest);
    return out;
}

}  // namespace widthkit

#endif
