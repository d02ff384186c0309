#pragma once

#include <queue>
#include <vector>

#include "graph.hpp"

namespace eccs {

// Dense all-pairs distances, flat row-major.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;
    int at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
};

using EccentricityVector = std::vector<int>;

// BFS from every vertex; throws Disconnected when some pair is unreachable.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<size_t>(n) * n, -1);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int* row = dm.d.data() + static_cast<size_t>(s) * n;
        row[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int v : g.neighbors(u)) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue[tail++] = v;
                }
            }
        }
        if (tail != n) throw Disconnected("graph is disconnected (vertex " +
                                          std::to_string(s) + " misses part of the graph)");
    }
    return dm;
}

inline EccentricityVector eccentricities(const DistanceMatrix& dm) {
    EccentricityVector e(dm.n, 0);
    for (int i = 0; i < dm.n; ++i)
        for (int j = 0; j < dm.n; ++j)
            if (dm.at(i, j) > e[i]) e[i] = dm.at(i, j);
    return e;
}

inline EccentricityVector eccentricities(const Graph& g) {
    return eccentricities(all_pairs_distances(g));
}

inline int radius(const EccentricityVector& e) {
    int r = e.empty() ? 0 : e[0];
    for (int x : e) r = std::min(r, x);
    return r;
}

inline int diameter(const EccentricityVector& e) {
    int d = 0;
    for (int x : e) d = std::max(d, x);
    return d;
}

// Total eccentricity: sum of all vertex eccentricities.
inline long long total_eccentricity(const EccentricityVector& e) {
    long long s = 0;
    for (int x : e) s += x;
    return s;
}

inline long long total_eccentricity(const Graph& g) {
    return total_eccentricity(eccentricities(g));
}

// Eccentric connectivity index: sum over vertices of degree * eccentricity.
inline long long eccentric_connectivity_index(const Graph& g, const EccentricityVector& e) {
    long long s = 0;
    for (int v = 0; v < g.order(); ++v) s += static_cast<long long>(g.degree(v)) * e[v];
    return s;
}

inline long long eccentric_connectivity_index(const Graph& g) {
    return eccentric_connectivity_index(g, eccentricities(g));
}

}  // namespace eccs
