#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace eccs {

// Named constructions. Vertex numbering conventions are part of the contract:
// they fix the block layouts of the product graphs built on top.

namespace detail {
inline Graph named(Graph g, std::string name) {
    g.name = std::move(name);
    return g;
}
}  // namespace detail

inline Graph cycle(int n) {
    if (n < 3) throw BadParams("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return detail::named(Graph(n, std::move(e)), "cycle(" + std::to_string(n) + ")");
}

inline Graph path(int n) {
    if (n < 1) throw BadParams("path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return detail::named(Graph(n, std::move(e)), "path(" + std::to_string(n) + ")");
}

inline Graph complete(int n) {
    if (n < 1) throw BadParams("complete needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return detail::named(Graph(n, std::move(e)), "complete(" + std::to_string(n) + ")");
}

// Parts are [0,a) and [a,a+b).
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw BadParams("complete_bipartite needs a,b >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return detail::named(Graph(a + b, std::move(e)),
                         "complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

// Star on n vertices, center 0 (= K_{1,n-1}).
inline Graph star(int n) {
    if (n < 2) throw BadParams("star needs n >= 2");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return detail::named(Graph(n, std::move(e)), "star(" + std::to_string(n) + ")");
}

// Outer cycle 0..4, spokes i -- i+5, inner 5-cycle with step 2.
inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return detail::named(Graph(10, std::move(e)), "petersen");
}

// K_{2k} minus the perfect matching {2i, 2i+1}.
inline Graph cocktail_party(int k) {
    if (k < 1) throw BadParams("cocktail_party needs k >= 1");
    const int n = 2 * k;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(j == i + 1 && i % 2 == 0)) e.emplace_back(i, j);
    return detail::named(Graph(n, std::move(e)), "cocktail_party(" + std::to_string(k) + ")");
}

// The three forbidden configurations for line graphs of diameter at most 2.
// f1: path on 5 vertices.
inline Graph f1() { return detail::named(path(5), "f1"); }

// f2: triangle {0,1,2} with a pendant path 2-3-4.
inline Graph f2() {
    return detail::named(Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}), "f2");
}

// f3: two triangles sharing vertex 2 (bowtie).
inline Graph f3() {
    return detail::named(Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}), "f3");
}

inline const std::vector<std::string>& generator_names() {
    static const std::vector<std::string> names = {
        "cycle",    "path", "complete",       "complete_bipartite",
        "star",     "petersen", "cocktail_party", "f1",
        "f2",       "f3"};
    return names;
}

// Dispatcher used by the CLI: generate("cycle", {4}) and friends.
inline Graph generate(const std::string& name, const std::vector<long>& params) {
    auto arity = [&](size_t k) {
        if (params.size() != k)
            throw BadParams("generator " + name + " expects " + std::to_string(k) +
                            " parameter(s), got " + std::to_string(params.size()));
    };
    auto as_int = [](long v) {
        if (v < 0 || v > kMaxOrder) throw BadParams("generator parameter out of range");
        return static_cast<int>(v);
    };
    if (name == "cycle") { arity(1); return cycle(as_int(params[0])); }
    if (name == "path") { arity(1); return path(as_int(params[0])); }
    if (name == "complete") { arity(1); return complete(as_int(params[0])); }
    if (name == "complete_bipartite") {
        arity(2);
        return complete_bipartite(as_int(params[0]), as_int(params[1]));
    }
    if (name == "star") { arity(1); return star(as_int(params[0])); }
    if (name == "petersen") { arity(0); return petersen(); }
    if (name == "cocktail_party") { arity(1); return cocktail_party(as_int(params[0])); }
    if (name == "f1") { arity(0); return f1(); }
    if (name == "f2") { arity(0); return f2(); }
    if (name == "f3") { arity(0); return f3(); }
    std::string known;
    for (const auto& s : generator_names()) known += (known.empty() ? "" : ", ") + s;
    throw BadParams("unknown generator \"" + name + "\" (known: " + known + ")");
}

}  // namespace eccs
