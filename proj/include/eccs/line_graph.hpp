#pragma once

#include <vector>

#include "graph.hpp"

namespace eccs {

inline Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

// Line graph; vertex k is the k-th edge of g in lexicographic order.
inline Graph line_graph(const Graph& g) {
    const int q = g.size();
    if (q == 0) throw EmptyEdgeSet("line graph of an edgeless graph");
    const auto& ed = g.edges();
    std::vector<Edge> e;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            const auto& [u1, v1] = ed[a];
            const auto& [u2, v2] = ed[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) e.emplace_back(a, b);
        }
    return Graph(q, std::move(e));
}

// Vertex-edge incidence, rows = vertices, columns = lex-ordered edges.
struct IncidenceMatrix {
    int p = 0, q = 0;
    std::vector<signed char> r;  // row-major p x q
    int at(int v, int e) const { return r[static_cast<size_t>(v) * q + e]; }
};

inline IncidenceMatrix incidence(const Graph& g) {
    IncidenceMatrix m;
    m.p = g.order();
    m.q = g.size();
    m.r.assign(static_cast<size_t>(m.p) * m.q, 0);
    for (int e = 0; e < m.q; ++e) {
        m.r[static_cast<size_t>(g.edges()[e].first) * m.q + e] = 1;
        m.r[static_cast<size_t>(g.edges()[e].second) * m.q + e] = 1;
    }
    return m;
}

}  // namespace eccs
