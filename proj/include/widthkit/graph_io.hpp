#ifndef WIDTHKIT_GRAPH_IO_HPP
#define WIDTHKIT_GRAPH_IO_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace widthkit {

// graph6: the standard 6-bit ASCII encoding of small simple graphs.
// Header N(n), then the upper triangle in column-major pair order
// (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, MSB first, +63.

inline std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("to_graph6: graph too large");
    }
    int bits = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > text.size())
            throw parse_error(parse_error::Kind::syntax, text.size(), "graph6: truncated input");
    };
    auto byte = [&](std::size_t at) {
        unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126)
            throw parse_error(parse_error::Kind::syntax, at, "graph6: byte out of range 63..126");
        return static_cast<int>(c - 63);
    };
    need(1);
    long long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        need(4);
        if (static_cast<unsigned char>(text[1]) == 126)
            throw parse_error(parse_error::Kind::syntax, 1, "graph6: >=258048 vertices unsupported");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    long long pairs = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos != body)
        throw parse_error(parse_error::Kind::syntax, text.size(),
                          "graph6: body length mismatch (expected " + std::to_string(body) +
                              " bytes)");
    Graph g(static_cast<int>(n));
    long long t = 0;
    int bits = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t) {
            if (bits == 0) {
                acc = byte(pos);
                ++pos;
                bits = 6;
            }
            if (acc & (1 << (bits - 1))) g.add_edge(i, j);
            --bits;
        }
    if (bits > 0 && (acc & ((1 << bits) - 1)) != 0)
        throw parse_error(parse_error::Kind::syntax, pos - 1, "graph6: nonzero padding bits");
    return g;
}

// Plain edge-list text: "n m" header line, then m lines "u v", 0-indexed.

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw parse_error(parse_error::Kind::syntax, 0, "edge list: bad 'n m' header");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw parse_error(parse_error::Kind::syntax, static_cast<std::size_t>(in.tellg()),
                              "edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(parse_error::Kind::semantic, 0,
                              "edge list: endpoint out of range on edge " + std::to_string(i));
        if (u == v)
            throw parse_error(parse_error::Kind::semantic, 0,
                              "edge list: loop on edge " + std::to_string(i));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error(parse_error::Kind::semantic, 0,
                              "edge list: duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra)
        throw parse_error(parse_error::Kind::syntax, 0, "edge list: trailing data after edges");
    return g;
}

}  // namespace widthkit

#endif
