#pragma once

#include <array>
#include <optional>
#include <unordered_set>

#include "distance.hpp"
#include "generators.hpp"
#include "graph.hpp"

namespace eccs {

inline std::optional<int> regular_degree(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

inline bool is_regular(const Graph& g) { return regular_degree(g).has_value(); }

inline bool is_triangle_free(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        // intersect sorted neighbor lists
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            (a[i] < b[j]) ? ++i : ++j;
        }
    }
    return true;
}

inline bool is_self_centered(const Graph& g) {
    auto e = eccentricities(g);  // throws Disconnected
    return radius(e) == diameter(e);
}

// Property (+): every edge uv has some w adjacent to neither u nor v.
inline bool has_property_dagger(const Graph& g) {
    const int n = g.order();
    for (const auto& [u, v] : g.edges()) {
        bool found = false;
        for (int w = 0; w < n && !found; ++w)
            if (w != u && w != v && !g.adjacent(w, u) && !g.adjacent(w, v)) found = true;
        if (!found) return false;
    }
    return true;
}

// Shortest cycle length; 0 means acyclic (no cycle, girth undefined/infinite).
inline int girth(const Graph& g) {
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(n), parent(n), queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue[tail++] = v;
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

inline bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1), queue(n);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    queue[tail++] = v;
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

// All 10-bit upper-triangle masks of 5-vertex graphs isomorphic to f1/f2/f3,
// precomputed once; the induced scan then only hashes subset masks.
inline const std::unordered_set<unsigned>& forbidden_masks() {
    static const std::unordered_set<unsigned> masks = [] {
        std::unordered_set<unsigned> out;
        std::array<int, 5> perm = {0, 1, 2, 3, 4};
        auto bit = [](int i, int j) {  // upper-triangle rank of pair (i<j)
            if (i > j) std::swap(i, j);
            return j * (j - 1) / 2 + i;
        };
        for (const Graph& f : {f1(), f2(), f3()}) {
            std::array<int, 5> p = perm;
            do {
                unsigned m = 0;
                for (const auto& [u, v] : f.edges()) m |= 1u << bit(p[u], p[v]);
                out.insert(m);
            } while (std::next_permutation(p.begin(), p.end()));
        }
        return out;
    }();
    return masks;
}

}  // namespace detail

// True when some 5-subset induces f1 (path on 5), f2 (triangle with a pendant
// 2-path) or f3 (bowtie). Exhaustive over 5-subsets, so capped at n <= 60.
inline bool has_induced_forbidden(const Graph& g) {
    const int n = g.order();
    if (n > 60) throw SizeLimit("induced-subgraph scan capped at 60 vertices");
    if (n < 5) return false;
    const auto& bad = detail::forbidden_masks();
    std::array<int, 5> s{};
    for (s[0] = 0; s[0] < n - 4; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n - 3; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n - 2; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n - 1; ++s[3])
                    for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
                        unsigned m = 0;
                        int b = 0;
                        for (int j = 1; j < 5; ++j)
                            for (int i = 0; i < j; ++i, ++b)
                                if (g.adjacent(s[i], s[j])) m |= 1u << b;
                        if (bad.count(m)) return true;
                    }
    return false;
}

struct Predicates {
    std::optional<int> regular;
    bool triangle_free = false;
    bool self_centered = false;
    bool property_dagger = false;
    int girth = 0;  // 0 = acyclic
    bool induced_forbidden = false;
};

// Aggregate classification; requires a connected graph (self-centeredness
// needs eccentricities).
inline Predicates predicates(const Graph& g) {
    Predicates p;
    p.regular = regular_degree(g);
    p.triangle_free = is_triangle_free(g);
    p.self_centered = is_self_centered(g);
    p.property_dagger = has_property_dagger(g);
    p.girth = girth(g);
    p.induced_forbidden = has_induced_forbidden(g);
    return p;
}

}  // namespace eccs
