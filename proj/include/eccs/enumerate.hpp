#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

namespace eccs {

// Exhaustive generation of small graphs up to isomorphism, plus a brute-force
// isomorphism test. Everything here is sized for test corpora: the documented
// caps keep runtimes in seconds.

namespace detail {

inline int pair_rank(int i, int j) {  // i < j, upper triangle by columns
    return j * (j - 1) / 2 + i;
}

inline uint32_t perm_image(uint32_t mask, const std::vector<Edge>& edges,
                           const int* p) {
    uint32_t out = 0;
    for (const auto& [u, v] : edges) {
        int a = p[u], b = p[v];
        if (a > b) std::swap(a, b);
        out |= 1u << pair_rank(a, b);
    }
    (void)mask;
    return out;
}

inline std::vector<Edge> mask_edges(uint32_t mask, int n) {
    std::vector<Edge> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_rank(i, j) & 1) e.emplace_back(i, j);
    return e;
}

inline uint32_t canonical_mask(uint32_t mask, int n, const std::vector<std::vector<int>>& perms) {
    auto edges = mask_edges(mask, n);
    uint32_t best = ~0u;
    for (const auto& p : perms) best = std::min(best, perm_image(mask, edges, p.data()));
    return best;
}

inline std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool mask_connected(uint32_t mask, int n) {
    std::vector<uint32_t> adj(n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_rank(i, j) & 1) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

}  // namespace detail

// All graphs on n vertices up to isomorphism (canonical representatives).
// Grows representatives one vertex at a time; dedupe is by minimum adjacency
// bitmask over all n! relabelings, hence the n <= 7 cap.
inline std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1) throw BadParams("enumerate_graphs needs n >= 1");
    if (n > 7) throw SizeLimit("exhaustive all-graph enumeration capped at 7 vertices");
    std::vector<uint32_t> reps = {0};  // the 1-vertex graph
    for (int m = 2; m <= n; ++m) {
        auto perms = detail::all_perms(m);
        std::unordered_set<uint32_t> seen;
        std::vector<uint32_t> next;
        for (uint32_t parent : reps) {
            for (uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
                uint32_t cand = parent;
                for (int v = 0; v < m - 1; ++v)
                    if (nb >> v & 1) cand |= 1u << detail::pair_rank(v, m - 1);
                uint32_t canon = detail::canonical_mask(cand, m, perms);
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        reps = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    std::sort(reps.begin(), reps.end());
    for (uint32_t mask : reps) out.emplace_back(n, detail::mask_edges(mask, n));
    return out;
}

inline std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1) throw BadParams("enumerate_connected_graphs needs n >= 1");
    if (n > 7) throw SizeLimit("exhaustive all-graph enumeration capped at 7 vertices");
    std::vector<uint32_t> reps = {0};
    for (int m = 2; m <= n; ++m) {
        auto perms = detail::all_perms(m);
        std::unordered_set<uint32_t> seen;
        std::vector<uint32_t> next;
        for (uint32_t parent : reps) {
            for (uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
                uint32_t cand = parent;
                for (int v = 0; v < m - 1; ++v)
                    if (nb >> v & 1) cand |= 1u << detail::pair_rank(v, m - 1);
                uint32_t canon = detail::canonical_mask(cand, m, perms);
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        reps = std::move(next);
    }
    std::vector<Graph> out;
    std::sort(reps.begin(), reps.end());
    for (uint32_t mask : reps)
        if (detail::mask_connected(mask, n)) out.emplace_back(n, detail::mask_edges(mask, n));
    return out;
}

namespace detail {

// Canonical code of a free tree: AHU strings rooted at the center (or the
// sorted pair of codes across the bicentral edge).
inline std::string tree_code(const Graph& t) {
    const int n = t.order();
    if (n == 1) return "V()";
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> nxt;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int u : t.neighbors(v))
                if (!removed[u] && --deg[u] == 1) nxt.push_back(u);
        }
        layer = std::move(nxt);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);

    // rooted AHU code with explicit parent
    auto code = [&](auto&& self, int v, int parent) -> std::string {
        std::vector<std::string> kids;
        for (int u : t.neighbors(v))
            if (u != parent) kids.push_back(self(self, u, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        return s;
    };
    if (centers.size() == 1) return "V" + code(code, centers[0], -1);
    std::string a = code(code, centers[0], centers[1]);
    std::string b = code(code, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "E" + a + b;
}

}  // namespace detail

// All free trees on n vertices up to isomorphism, by leaf extension with
// canonical-code dedupe.
inline std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw BadParams("enumerate_trees needs n >= 1");
    if (n > 16) throw SizeLimit("tree enumeration capped at 16 vertices");
    std::vector<Graph> cur = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& t : cur) {
            for (int v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, m - 1);
                Graph bigger(m, std::move(edges));
                if (seen.insert(detail::tree_code(bigger)).second)
                    next.push_back(std::move(bigger));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Brute-force graph isomorphism via backtracking, intended for corpora
// dedupe and test assertions.
inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
    const int n = g1.order();
    // Worst case is factorial, but degree stratification keeps the structured
    // inputs we care about (joins of small graphs) near-linear in practice.
    if (n > 24) throw SizeLimit("brute-force isomorphism capped at 24 vertices");
    std::vector<int> d1(n), d2(n);
    for (int v = 0; v < n; ++v) {
        d1[v] = g1.degree(v);
        d2[v] = g2.degree(v);
    }
    {
        auto s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    // map vertices of g1 in descending-degree order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d1[a] > d1[b]; });
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        const int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || d1[v] != d2[w]) continue;
            bool ok = true;
            for (int k = 0; k < idx && ok; ++k) {
                const int v2 = order[k];
                if (g1.adjacent(v, v2) != g2.adjacent(w, map[v2])) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

namespace detail {

// Cheap isomorphism invariant: per-vertex triangle counts, each paired with
// the sorted triangle counts of its neighbors, plus the sorted multiset of
// common-neighbor counts over all vertex pairs.
inline std::vector<int> iso_invariant(const Graph& g) {
    const int n = g.order();
    std::vector<int> tri(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            for (int w : g.neighbors(v))
                if (u < w && g.adjacent(u, w)) ++tri[v];
    std::vector<std::vector<int>> per(n);
    for (int v = 0; v < n; ++v) {
        per[v].push_back(tri[v]);
        std::vector<int> nb;
        for (int u : g.neighbors(v)) nb.push_back(tri[u]);
        std::sort(nb.begin(), nb.end());
        per[v].insert(per[v].end(), nb.begin(), nb.end());
    }
    std::sort(per.begin(), per.end());
    std::vector<int> key;
    for (auto& row : per) {
        key.insert(key.end(), row.begin(), row.end());
        key.push_back(-1);
    }
    std::vector<int> common;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int c = 0;
            for (int u : g.neighbors(i))
                if (g.adjacent(u, j)) ++c;
            common.push_back(2 * c + (g.adjacent(i, j) ? 1 : 0));
        }
    std::sort(common.begin(), common.end());
    key.insert(key.end(), common.begin(), common.end());
    return key;
}

}  // namespace detail

// All connected r-regular graphs on n vertices up to isomorphism.
// Backtracking over labeled graphs with the first neighborhood pinned to
// {1..r}, then dedupe by invariant bucket + exact isomorphism.
inline std::vector<Graph> enumerate_regular_connected(int n, int r) {
    if (n < 1 || r < 0 || r >= std::max(n, 1)) {
        if (!(n >= 1 && r == 0)) throw BadParams("bad (n, r) for regular enumeration");
    }
    if (n > 10) throw SizeLimit("regular enumeration capped at 10 vertices");
    if (r == 0) return n == 1 ? std::vector<Graph>{Graph(1)} : std::vector<Graph>{};
    if ((static_cast<long long>(n) * r) % 2 != 0 || r >= n) return {};

    std::vector<uint32_t> adj(n, 0);
    std::vector<int> deg(n, 0);
    std::map<std::vector<int>, std::vector<size_t>> buckets;
    std::vector<Graph> reps;

    auto add_edge = [&](int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
        ++deg[u];
        ++deg[v];
    };
    auto del_edge = [&](int u, int v) {
        adj[u] &= ~(1u << v);
        adj[v] &= ~(1u << u);
        --deg[u];
        --deg[v];
    };
    auto emit = [&] {
        // connectivity first (cheap), then isomorphism dedupe
        uint32_t seen = 1, frontier = 1;
        while (frontier) {
            uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= adj[v];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != (1u << n) - 1) return;
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[i] >> j & 1) edges.emplace_back(i, j);
        Graph g(n, std::move(edges));
        auto key = detail::iso_invariant(g);
        auto& bucket = buckets[key];
        for (size_t idx : bucket)
            if (is_isomorphic(g, reps[idx])) return;
        bucket.push_back(reps.size());
        reps.push_back(std::move(g));
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            emit();
            return;
        }
        const int need = r - deg[v];
        if (need == 0) {
            self(self, v + 1);
            return;
        }
        if (need < 0) return;
        std::vector<int> cands;
        for (int u = v + 1; u < n; ++u)
            if (deg[u] < r) cands.push_back(u);
        const int k = static_cast<int>(cands.size());
        if (k < need) return;
        // choose `need` of cands via bitmask-free combination recursion
        std::vector<int> chosen;
        auto pick = [&](auto&& pickself, int start) -> void {
            if (static_cast<int>(chosen.size()) == need) {
                // feasibility: every later vertex must still be completable
                for (int u = v + 1; u < n; ++u) {
                    int rem = r - deg[u];
                    if (rem == 0) continue;
                    int avail = 0;
                    for (int w = v + 1; w < n; ++w)
                        if (w != u && deg[w] < r && !(adj[u] >> w & 1)) ++avail;
                    if (rem > avail) return;
                }
                self(self, v + 1);
                return;
            }
            for (int i = start; i < k; ++i) {
                int u = cands[i];
                if (deg[u] >= r) continue;
                add_edge(v, u);
                chosen.push_back(u);
                pickself(pickself, i + 1);
                chosen.pop_back();
                del_edge(v, u);
            }
        };
        pick(pick, 0);
    };

    for (int u = 1; u <= r; ++u) add_edge(0, u);
    rec(rec, 1);
    return reps;
}

}  // namespace eccs
