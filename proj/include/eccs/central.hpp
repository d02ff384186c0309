#pragma once

#include <string>
#include <vector>

#include "distance.hpp"
#include "graph.hpp"

namespace eccs {

// Roles of the vertex blocks in the product constructions. Order in the
// result is always: g1 vertices, g1 subdivision vertices, g2 vertices,
// g3 vertices (whichever are present).
enum class BlockRole { g1_vertices, g1_subdivisions, g2_vertices, g3_vertices };

inline std::string to_string(BlockRole r) {
    switch (r) {
        case BlockRole::g1_vertices: return "V1";
        case BlockRole::g1_subdivisions: return "I1";
        case BlockRole::g2_vertices: return "V2";
        case BlockRole::g3_vertices: return "V3";
    }
    return "?";
}

struct Block {
    BlockRole role;
    int start;
    int count;
};

struct LabeledProduct {
    Graph graph;
    std::vector<Block> blocks;
};

namespace detail {

// Central-graph edges into `e`: complement of g on [0,p) plus the two
// incidences of each subdivision vertex p+k (k-th lex edge of g).
inline void central_edges(const Graph& g, std::vector<Edge>& e) {
    const int p = g.order();
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (!g.adjacent(i, j)) e.emplace_back(i, j);
    for (int k = 0; k < g.size(); ++k) {
        e.emplace_back(g.edges()[k].first, p + k);
        e.emplace_back(g.edges()[k].second, p + k);
    }
}

inline void shift_edges(const Graph& g, int off, std::vector<Edge>& e) {
    for (const auto& [u, v] : g.edges()) e.emplace_back(off + u, off + v);
}

inline void join_ranges(int a0, int a1, int b0, int b1, std::vector<Edge>& e) {
    for (int u = a0; u < a1; ++u)
        for (int v = b0; v < b1; ++v) e.emplace_back(u, v);
}

}  // namespace detail

// Central graph: subdivide every edge, then join all originally nonadjacent
// vertex pairs. Needs at least one edge.
inline LabeledProduct central(const Graph& g) {
    if (g.size() == 0) throw EmptyEdgeSet("central graph needs at least one edge");
    const int p = g.order(), q = g.size();
    std::vector<Edge> e;
    detail::central_edges(g, e);
    return {Graph(p + q, std::move(e)),
            {{BlockRole::g1_vertices, 0, p}, {BlockRole::g1_subdivisions, p, q}}};
}

// Central vertex join: central(g1), then join every vertex of g1 with every
// vertex of g2.
inline LabeledProduct central_vertex_join(const Graph& g1, const Graph& g2) {
    if (g1.size() == 0) throw EmptyEdgeSet("central vertex join needs an edge in g1");
    const int p1 = g1.order(), q1 = g1.size(), p2 = g2.order();
    std::vector<Edge> e;
    detail::central_edges(g1, e);
    detail::shift_edges(g2, p1 + q1, e);
    detail::join_ranges(0, p1, p1 + q1, p1 + q1 + p2, e);
    return {Graph(p1 + q1 + p2, std::move(e)),
            {{BlockRole::g1_vertices, 0, p1},
             {BlockRole::g1_subdivisions, p1, q1},
             {BlockRole::g2_vertices, p1 + q1, p2}}};
}

// Central edge join: central(g1), then join every subdivision vertex of g1
// with every vertex of g2.
inline LabeledProduct central_edge_join(const Graph& g1, const Graph& g2) {
    if (g1.size() == 0) throw EmptyEdgeSet("central edge join needs an edge in g1");
    const int p1 = g1.order(), q1 = g1.size(), p2 = g2.order();
    std::vector<Edge> e;
    detail::central_edges(g1, e);
    detail::shift_edges(g2, p1 + q1, e);
    detail::join_ranges(p1, p1 + q1, p1 + q1, p1 + q1 + p2, e);
    return {Graph(p1 + q1 + p2, std::move(e)),
            {{BlockRole::g1_vertices, 0, p1},
             {BlockRole::g1_subdivisions, p1, q1},
             {BlockRole::g2_vertices, p1 + q1, p2}}};
}

// Central vertex-edge join: central(g1), vertices of g1 joined with g2,
// subdivision vertices of g1 joined with g3.
inline LabeledProduct central_vertex_edge_join(const Graph& g1, const Graph& g2,
                                               const Graph& g3) {
    if (g1.size() == 0) throw EmptyEdgeSet("central vertex-edge join needs an edge in g1");
    const int p1 = g1.order(), q1 = g1.size(), p2 = g2.order(), p3 = g3.order();
    const int off2 = p1 + q1, off3 = p1 + q1 + p2;
    std::vector<Edge> e;
    detail::central_edges(g1, e);
    detail::shift_edges(g2, off2, e);
    detail::shift_edges(g3, off3, e);
    detail::join_ranges(0, p1, off2, off2 + p2, e);
    detail::join_ranges(p1, p1 + q1, off3, off3 + p3, e);
    return {Graph(p1 + q1 + p2 + p3, std::move(e)),
            {{BlockRole::g1_vertices, 0, p1},
             {BlockRole::g1_subdivisions, p1, q1},
             {BlockRole::g2_vertices, off2, p2},
             {BlockRole::g3_vertices, off3, p3}}};
}

// Eccentric graph: same vertex set, u ~ v iff d(u,v) = min(e(u), e(v)).
// Connectivity of this graph decides irreducibility of the eccentricity
// matrix. Throws Disconnected for disconnected input.
inline Graph eccentric_graph(const Graph& g) {
    auto dm = all_pairs_distances(g);
    auto ec = eccentricities(dm);
    const int n = g.order();
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dm.at(i, j) == std::min(ec[i], ec[j])) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

}  // namespace eccs
