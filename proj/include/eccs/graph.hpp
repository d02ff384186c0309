#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace eccs {

using Edge = std::pair<int, int>;

// Library-wide order cap (matches the supported graph6 range).
inline constexpr int kMaxOrder = 2000;

// Simple undirected graph: no loops, no multi-edges, vertices 0..n-1.
// Immutable after construction; adjacency kept both as sorted lists and as a
// bitset for O(1) adjacency tests.
class Graph {
public:
    // Optional provenance label ("cycle(4)", a file path, ...); purely
    // informational, ignored by all algorithms and comparisons.
    std::string name;

    explicit Graph(int n) : Graph(n, {}) {}

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 1) throw BadParams("graph needs at least one vertex");
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<size_t>(n) * words_, 0);
        adj_.resize(n);
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n || u == v)
                throw BadParams("invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            if (test_bit(u, v))
                throw BadParams("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            set_bit(u, v);
            set_bit(v, u);
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return u != v && test_bit(u, v); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Lexicographically sorted edge list with u < v; this ordering defines the
    // subdivision-vertex labels used by the central-graph constructions.
    const std::vector<Edge>& edges() const { return edges_; }

private:
    bool test_bit(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }
    void set_bit(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
    }

    int n_;
    int words_;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<uint64_t> bits_;
};

inline bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n;
}

}  // namespace eccs
