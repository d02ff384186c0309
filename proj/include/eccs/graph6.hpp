#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace eccs {

namespace detail {
inline int g6_byte(char c, const char* what) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw MalformedGraph6(std::string("bad byte in ") + what);
    return b - 63;
}
}  // namespace detail


// Decode one graph6 line. Accepts the optional ">>graph6<<" prefix.
// Bits run over the upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
inline Graph parse_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw MalformedGraph6("empty graph6 string");

    size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw MalformedGraph6("graph6 orders above 258047 not supported");
        if (s.size() < 4) throw MalformedGraph6("truncated order field");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | detail::g6_byte(s[k], "order field");
        pos = 4;
    } else {
        n = detail::g6_byte(s[0], "order field");
        pos = 1;
    }
    if (n == 0) throw MalformedGraph6("graph of order 0 not supported");
    if (n > kMaxOrder) throw SizeLimit("graph6 order beyond supported maximum 2000");

    const long nbits = n * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) < nbytes)
        throw MalformedGraph6("truncated bit field");
    if (static_cast<long>(s.size()) - static_cast<long>(pos) > nbytes)
        throw MalformedGraph6("trailing garbage after bit field");

    std::vector<Edge> edges;
    long bit = 0;
    int cur = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (have == 0) {
                cur = detail::g6_byte(s[pos + bit / 6], "bit field");
                have = 6;
            }
            if ((cur >> (have - 1)) & 1) edges.emplace_back(i, j);
            --have;
        }
    }
    if (have > 0 && (cur & ((1 << have) - 1)) != 0)
        throw MalformedGraph6("nonzero padding bits");
    return Graph(static_cast<int>(n), std::move(edges));
}

// Encode to canonical graph6 (shortest header form, zero padding).
inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder) throw SizeLimit("graph6 order beyond supported maximum 2000");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int cur = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + 63));
    return out;
}

// One graph per nonempty line.
inline std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == ">>graph6<<") continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

// Edge-list text: header line "p q", then q lines "u v" (0-based).
inline Graph parse_edge_list(std::istream& in) {
    long long p = 0, q = 0;
    if (!(in >> p >> q)) throw MalformedEdgeList("missing \"p q\" header line");
    if (p < 1 || q < 0) throw MalformedEdgeList("bad header values");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(q));
    for (long long k = 0; k < q; ++k) {
        long long u, v;
        if (!(in >> u >> v)) throw MalformedEdgeList("expected " + std::to_string(q) + " edges");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw MalformedEdgeList("trailing tokens after edge list");
    try {
        return Graph(static_cast<int>(p), std::move(edges));
    } catch (const BadParams& e) {
        throw MalformedEdgeList(e.what());
    }
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace eccs
