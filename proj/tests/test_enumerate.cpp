#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "eccs/enumerate.hpp"
#include "eccs/generators.hpp"
#include "eccs/predicates.hpp"

using namespace eccs;

TEST_CASE("enumeration counts match the literature", "[enumerate]") {
    SECTION("all graphs up to isomorphism") {
        const int expected[] = {1, 2, 4, 11, 34, 156};
        for (int n = 1; n <= 6; ++n)
            REQUIRE(enumerate_graphs(n).size() == static_cast<size_t>(expected[n - 1]));
    }
    SECTION("connected graphs") {
        const int expected[] = {1, 1, 2, 6, 21, 112};
        for (int n = 1; n <= 6; ++n) {
            const auto gs = enumerate_connected_graphs(n);
            REQUIRE(gs.size() == static_cast<size_t>(expected[n - 1]));
            for (const auto& g : gs) REQUIRE(is_connected(g));
        }
    }
    SECTION("caps and bad input") {
        REQUIRE_THROWS_AS(enumerate_graphs(8), SizeLimit);
        REQUIRE_THROWS_AS(enumerate_connected_graphs(8), SizeLimit);
        REQUIRE_THROWS_AS(enumerate_graphs(0), BadParams);
    }
}

TEST_CASE("tree enumeration", "[enumerate]") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        const auto ts = enumerate_trees(n);
        REQUIRE(ts.size() == static_cast<size_t>(expected[n - 1]));
        for (const auto& t : ts) {
            REQUIRE(t.order() == n);
            REQUIRE(t.size() == n - 1);
            REQUIRE(is_connected(t));
        }
    }
    REQUIRE_THROWS_AS(enumerate_trees(17), SizeLimit);
}

TEST_CASE("regular graph enumeration", "[enumerate]") {
    SECTION("cubic counts") {
        REQUIRE(enumerate_regular_connected(4, 3).size() == 1);
        REQUIRE(enumerate_regular_connected(6, 3).size() == 2);
        REQUIRE(enumerate_regular_connected(8, 3).size() == 5);
    }
    SECTION("4-regular counts") {
        REQUIRE(enumerate_regular_connected(5, 4).size() == 1);
        REQUIRE(enumerate_regular_connected(6, 4).size() == 1);
        REQUIRE(enumerate_regular_connected(7, 4).size() == 2);
        REQUIRE(enumerate_regular_connected(8, 4).size() == 6);
    }
    SECTION("degenerate cases") {
        REQUIRE(enumerate_regular_connected(5, 3).empty());  // odd order, odd degree
        REQUIRE(enumerate_regular_connected(1, 0).size() == 1);
        REQUIRE(enumerate_regular_connected(2, 0).empty());
        REQUIRE(enumerate_regular_connected(7, 2).size() == 1);  // the 7-cycle
        REQUIRE_THROWS_AS(enumerate_regular_connected(11, 3), SizeLimit);
    }
    SECTION("outputs are regular and pairwise non-isomorphic") {
        const auto gs = enumerate_regular_connected(8, 3);
        for (const auto& g : gs) REQUIRE(regular_degree(g) == 3);
        for (size_t i = 0; i < gs.size(); ++i)
            for (size_t j = i + 1; j < gs.size(); ++j)
                REQUIRE_FALSE(is_isomorphic(gs[i], gs[j]));
    }
}

TEST_CASE("brute-force isomorphism", "[enumerate]") {
    SECTION("relabelings are detected") {
        const Graph p = petersen();
        const int perm[10] = {3, 7, 0, 9, 5, 1, 8, 2, 6, 4};
        std::vector<Edge> edges;
        for (auto [u, v] : p.edges()) edges.emplace_back(perm[u], perm[v]);
        REQUIRE(is_isomorphic(p, Graph(10, edges)));
    }
    SECTION("same degree sequence, different graphs") {
        const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        REQUIRE_FALSE(is_isomorphic(cycle(6), two_triangles));
        REQUIRE_FALSE(is_isomorphic(path(4), star(4)));
        const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                              {0, 3}, {1, 4}, {2, 5}});
        REQUIRE_FALSE(is_isomorphic(complete_bipartite(3, 3), prism));
    }
    SECTION("size cap") {
        REQUIRE_THROWS_AS(is_isomorphic(Graph(25), Graph(25)), SizeLimit);
    }
}
