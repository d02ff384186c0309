#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "eccs/distance.hpp"
#include "eccs/generators.hpp"
#include "eccs/graph.hpp"
#include "eccs/graph6.hpp"
#include "eccs/predicates.hpp"
#include "eccs/rational.hpp"

using namespace eccs;

TEST_CASE("graph construction validates input", "[graph]") {
    REQUIRE_THROWS_AS(Graph(0), BadParams);
    REQUIRE_THROWS_AS(Graph(2, {{0, 0}}), BadParams);
    REQUIRE_THROWS_AS(Graph(2, {{0, 5}}), BadParams);
    REQUIRE_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), BadParams);  // duplicate after swap

    const Graph g(3, {{2, 0}, {0, 1}});
    REQUIRE(g.order() == 3);
    REQUIRE(g.size() == 2);
    REQUIRE(g.adjacent(0, 2));
    REQUIRE(g.adjacent(1, 0));
    REQUIRE_FALSE(g.adjacent(1, 2));
    REQUIRE_FALSE(g.adjacent(1, 1));
    REQUIRE(g.degree(0) == 2);
    REQUIRE(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    REQUIRE(g.neighbors(0) == std::vector<int>{1, 2});
}

TEST_CASE("connectivity", "[graph]") {
    REQUIRE(is_connected(Graph(1)));
    REQUIRE(is_connected(path(5)));
    REQUIRE_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    REQUIRE_FALSE(is_connected(Graph(2)));
}

TEST_CASE("generators", "[generators]") {
    const Graph c = cycle(4);
    REQUIRE(c.order() == 4);
    REQUIRE(c.size() == 4);
    for (int v = 0; v < 4; ++v) REQUIRE(c.degree(v) == 2);
    REQUIRE(c.name == "cycle(4)");

    REQUIRE(path(1).size() == 0);
    REQUIRE(path(5).size() == 4);
    REQUIRE(complete(4).size() == 6);
    REQUIRE(complete(1).size() == 0);

    const Graph kb = complete_bipartite(2, 3);
    REQUIRE(kb.order() == 5);
    REQUIRE(kb.size() == 6);
    REQUIRE(is_bipartite(kb));

    REQUIRE(star(5).degree(0) == 4);
    REQUIRE(star(5).size() == 4);

    const Graph p = petersen();
    REQUIRE(p.order() == 10);
    REQUIRE(p.size() == 15);
    REQUIRE(regular_degree(p) == 3);
    REQUIRE(girth(p) == 5);

    const Graph cp = cocktail_party(3);
    REQUIRE(cp.order() == 6);
    REQUIRE(regular_degree(cp) == 4);

    REQUIRE(f1().order() == 5);
    REQUIRE(f2().size() == 5);
    REQUIRE(f3().size() == 6);

    REQUIRE_THROWS_AS(cycle(2), BadParams);
    REQUIRE_THROWS_AS(star(1), BadParams);

    SECTION("dispatcher") {
        REQUIRE(generate("cycle", {5}).size() == 5);
        REQUIRE(generate("petersen", {}).order() == 10);
        REQUIRE(generate("complete_bipartite", {2, 2}).size() == 4);
        REQUIRE_THROWS_AS(generate("nope", {}), BadParams);
        REQUIRE_THROWS_AS(generate("cycle", {}), BadParams);
        REQUIRE_THROWS_AS(generate("cycle", {4, 4}), BadParams);
        REQUIRE(generator_names().size() == 10);
    }
}

TEST_CASE("graph6 codec", "[graph6]") {
    SECTION("known encodings") {
        REQUIRE(to_graph6(complete(2)) == "A_");
        REQUIRE(to_graph6(cycle(4)) == "Cl");
        REQUIRE(to_graph6(cycle(5)) == "Dhc");
        REQUIRE(to_graph6(path(4)) == "Ch");
        REQUIRE(to_graph6(complete(3)) == "Bw");
        REQUIRE(to_graph6(petersen()) == "IheA@GUAo");
        REQUIRE(to_graph6(complete_bipartite(3, 3)) == "EFz_");
    }
    SECTION("decoding") {
        const Graph k2 = parse_graph6("A_");
        REQUIRE(k2.order() == 2);
        REQUIRE(k2.size() == 1);

        const Graph s = parse_graph6("D?{");  // star, center 4
        REQUIRE(s.order() == 5);
        REQUIRE(s.degree(4) == 4);
        REQUIRE(s.size() == 4);

        const Graph q = parse_graph6("DQw");
        REQUIRE(q.edges() == std::vector<Edge>{{0, 2}, {0, 4}, {1, 3}, {1, 4}, {2, 4}});
        REQUIRE(to_graph6(q) == "DQw");

        REQUIRE(parse_graph6(">>graph6<<A_").size() == 1);
    }
    SECTION("long-form header at n >= 63") {
        const Graph g(63);
        const std::string s = to_graph6(g);
        REQUIRE(s.substr(0, 3) == "~??");
        const Graph back = parse_graph6(s);
        REQUIRE(back.order() == 63);
        REQUIRE(back.size() == 0);
    }
    SECTION("malformed input") {
        REQUIRE_THROWS_AS(parse_graph6(""), MalformedGraph6);
        REQUIRE_THROWS_AS(parse_graph6("A"), MalformedGraph6);
        REQUIRE_THROWS_AS(parse_graph6("bogus!!"), MalformedGraph6);
    }
    SECTION("stream of lines") {
        std::istringstream in("A_\n\nCl\nDhc\n");
        const auto gs = read_graph6(in);
        REQUIRE(gs.size() == 3);
        REQUIRE(gs[1].order() == 4);
    }
}

TEST_CASE("edge-list io", "[graph6]") {
    const Graph g = parse_edge_list("4 2\n0 1\n2 3\n");
    REQUIRE(g.order() == 4);
    REQUIRE(g.size() == 2);
    REQUIRE(g.adjacent(2, 3));

    REQUIRE_THROWS_AS(parse_edge_list("nonsense"), MalformedEdgeList);
    REQUIRE_THROWS_AS(parse_edge_list("4 2\n0 1\n"), MalformedEdgeList);  // missing edge
    REQUIRE_THROWS_AS(parse_edge_list("2 1\n0 9\n"), MalformedEdgeList);  // out of range

    const Graph c = cycle(5);
    REQUIRE(parse_edge_list(to_edge_list(c)).edges() == c.edges());
}

TEST_CASE("distances and eccentricities", "[distance]") {
    const Graph p4 = path(4);
    const DistanceMatrix dm = all_pairs_distances(p4);
    REQUIRE(dm.at(0, 3) == 3);
    REQUIRE(dm.at(1, 2) == 1);
    REQUIRE(dm.at(2, 2) == 0);

    const EccentricityVector ev = eccentricities(dm);
    REQUIRE(ev == EccentricityVector{3, 2, 2, 3});
    REQUIRE(radius(ev) == 2);
    REQUIRE(diameter(ev) == 3);
    REQUIRE(total_eccentricity(ev) == 10);
    REQUIRE(eccentric_connectivity_index(p4) == 14);

    REQUIRE(eccentricities(petersen()) == EccentricityVector(10, 2));
    REQUIRE_THROWS_AS(all_pairs_distances(Graph(3, {{0, 1}})), Disconnected);
}

TEST_CASE("predicates", "[predicates]") {
    REQUIRE(regular_degree(cycle(5)) == 2);
    REQUIRE_FALSE(regular_degree(path(3)).has_value());
    REQUIRE(regular_degree(Graph(3)) == 0);

    REQUIRE(is_triangle_free(cycle(4)));
    REQUIRE_FALSE(is_triangle_free(complete(3)));

    REQUIRE(is_self_centered(cycle(4)));
    REQUIRE_FALSE(is_self_centered(path(4)));

    REQUIRE(girth(petersen()) == 5);
    REQUIRE(girth(cycle(7)) == 7);
    REQUIRE(girth(complete(4)) == 3);
    REQUIRE(girth(path(4)) == 0);  // acyclic

    REQUIRE(is_bipartite(cycle(4)));
    REQUIRE_FALSE(is_bipartite(cycle(5)));

    REQUIRE(has_property_dagger(petersen()));
    REQUIRE(has_property_dagger(cycle(5)));
    REQUIRE_FALSE(has_property_dagger(cycle(4)));
    REQUIRE_FALSE(has_property_dagger(path(4)));

    REQUIRE(has_induced_forbidden(f1()));
    REQUIRE(has_induced_forbidden(f2()));
    REQUIRE(has_induced_forbidden(f3()));
    REQUIRE(has_induced_forbidden(cycle(6)));  // induced 5-vertex path
    REQUIRE_FALSE(has_induced_forbidden(complete(4)));
    REQUIRE_FALSE(has_induced_forbidden(star(5)));
    REQUIRE_FALSE(has_induced_forbidden(cycle(4)));
}

TEST_CASE("rational arithmetic", "[rational]") {
    REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-1, -2) == Rational(1, 2));
    REQUIRE(Rational(1, -2) == Rational(-1, 2));
    REQUIRE(Rational(3, 2) * Rational(4, 3) == Rational(2));
    REQUIRE(Rational(1) / Rational(3) == Rational(1, 3));
    REQUIRE(-Rational(1, 3) == Rational(-1, 3));
    REQUIRE(Rational(7).is_integer());
    REQUIRE(Rational(7).str() == "7");
    REQUIRE(Rational(5, 6).str() == "5/6");
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(1, 2).to_double() == 0.5);
    REQUIRE_THROWS_AS(Rational(1, 0), BadParams);
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), BadParams);
}
