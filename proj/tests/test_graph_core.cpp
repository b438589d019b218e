#include <doctest.h>

#include <algorithm>
#include <set>

#include "graphpow/distance.hpp"
#include "graphpow/generators.hpp"
#include "graphpow/graph.hpp"
#include "graphpow/power.hpp"

using namespace graphpow;

TEST_CASE("from_edges builds a deduplicated symmetric adjacency") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));

    Graph isolated = Graph::from_edges(2, {});
    CHECK(isolated.edge_count() == 0);

    Graph dup = Graph::from_edges(4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(dup.edge_count() == 2);
}

TEST_CASE("from_edges rejects bad pairs, naming them") {
    CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{0, 3}}),
                         doctest::Contains("(0, 3)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{1, 1}}),
                         doctest::Contains("(1, 1)"), std::invalid_argument);
}

TEST_CASE("bfs distances on cycles, capped paths, disconnected graphs") {
    DistanceField c6 = bfs_distances(cycle(6), 0);
    const int expect[6] = {0, 1, 2, 3, 2, 1};
    for (int v = 0; v < 6; ++v) CHECK(c6.distance(v) == expect[v]);

    DistanceField p5 = bfs_distances(path(5), 0, 2);
    CHECK(p5[0] == 0);
    CHECK(p5[1] == 1);
    CHECK(p5[2] == 2);
    CHECK_FALSE(p5[3].has_value());
    CHECK_FALSE(p5[4].has_value());

    DistanceField disc = bfs_distances(Graph(2), 0);
    CHECK(disc[0] == 0);
    CHECK_FALSE(disc.reachable(1));
    CHECK_THROWS_AS(disc.distance(1), std::domain_error);

    CHECK_THROWS_AS(bfs_distances(Graph(2), 5), std::invalid_argument);
}

TEST_CASE("power edge counts and identities") {
    CHECK(power(path(5), 2).edge_count() == 7);
    Graph c6k3 = power(cycle(6), 3);
    CHECK(c6k3.edge_count() == 15);  // complete at k >= diameter

    Graph g = cycle(9);
    CHECK(power(g, 1) == g);
    CHECK_THROWS_AS(power(g, 0), std::invalid_argument);
}

TEST_CASE("diameter") {
    CHECK(diameter(cycle(12)) == 6);
    Graph k5 = power(cycle(5), 2);
    CHECK(diameter(k5) == 1);
    CHECK(diameter(h_family(3, 2)) == 8);
    CHECK_THROWS_AS(diameter(Graph(3)), std::domain_error);
}

TEST_CASE("geodesic paths break ties toward the lowest-index predecessor") {
    CHECK(geodesic_path(path(5), 0, 4) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(geodesic_path(cycle(6), 0, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(geodesic_path(cycle(6), 2, 2) == std::vector<int>{2});
    CHECK_THROWS_AS(geodesic_path(Graph(2), 0, 1), std::domain_error);
}

TEST_CASE("balls") {
    CHECK(ball(cycle(6), 0, 1) == std::vector<int>{0, 1, 5});
    CHECK(ball(cycle(6), 4, 0) == std::vector<int>{4});
    Graph g = h_family(3, 1);
    for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(static_cast<int>(ball(g, v, 1).size()) == g.degree(v) + 1);
}

TEST_CASE("degree stats are exact") {
    DegreeStats c8 = degree_stats(cycle(8));
    CHECK(c8.min_degree == 2);
    CHECK(c8.max_degree == 2);
    CHECK(c8.degree_sum == 16);
    CHECK(c8.average == Rational(16, 8));

    DegreeStats p4 = degree_stats(path(4));
    CHECK(p4.degree_sum == 6);
    CHECK(p4.average == Rational(6, 4));

    DegreeStats c12k5 = degree_stats(power(cycle(12), 5));
    CHECK(c12k5.min_degree == 10);
    CHECK(c12k5.max_degree == 10);
    CHECK(c12k5.average == Rational(10, 1));
}

TEST_CASE("connectivity and regularity") {
    CHECK(is_connected(cycle(7)));
    CHECK(regularity(cycle(7)) == 2);
    CHECK(is_connected(path(4)));
    CHECK_FALSE(regularity(path(4)).has_value());

    Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_connected(two_triangles));
    CHECK(regularity(two_triangles) == 2);
}

TEST_CASE("power composition, monotonicity, completeness, ball-degree identity") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = random_tree(11, seed);
        for (int extra = 0; extra < 3; ++extra)
            g.add_edge(static_cast<int>((seed + extra) % 11),
                       static_cast<int>((seed + extra * 3 + 5) % 11));
        for (int k = 1; k <= 4; ++k) {
            Graph pk = power(g, k);
            CHECK(power(power(g, 1), k) == pk);
            Graph pk1 = power(g, k + 1);
            for (int v = 0; v < g.vertex_count(); ++v)  // edge sets nest
                for (int u = v + 1; u < g.vertex_count(); ++u)
                    if (pk.adjacent(u, v)) CHECK(pk1.adjacent(u, v));
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(static_cast<int>(ball(g, v, k).size()) - 1 == pk.degree(v));
        }
        int diam = diameter(g);
        Graph complete = power(g, diam);
        CHECK(complete.edge_count() ==
              static_cast<long long>(g.vertex_count()) * (g.vertex_count() - 1) / 2);
    }
}

TEST_CASE("bfs distances satisfy the triangle inequality on sampled triples") {
    Graph g = random_regular(24, 3, 7);
    std::vector<DistanceField> fields;
    for (int v = 0; v < g.vertex_count(); ++v) fields.push_back(bfs_distances(g, v));
    for (int a = 0; a < g.vertex_count(); a += 3)
        for (int b = 1; b < g.vertex_count(); b += 4)
            for (int c = 2; c < g.vertex_count(); c += 5)
                CHECK(fields[a].distance(c) <= fields[a].distance(b) + fields[b].distance(c));
}

TEST_CASE("distance fields respect edges and caps") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = random_tree(15, seed);
        int u = static_cast<int>(seed % 15), v = static_cast<int>((seed * 5 + 3) % 15);
        if (u != v) g.add_edge(u, v);
        DistanceField df = bfs_distances(g, 0);
        // adjacent vertices differ by at most 1 when both reachable
        for (int u = 0; u < 15; ++u)
            g.for_each_neighbor(u, [&](int v) {
                if (df.reachable(u) && df.reachable(v))
                    CHECK(std::abs(df.distance(u) - df.distance(v)) <= 1);
            });
        DistanceField capped = bfs_distances(g, 0, 2);
        CHECK(capped.cap() == 2);
        for (int v = 0; v < 15; ++v) {
            if (capped[v]) CHECK(*capped[v] <= 2);  // finite entries never exceed the cap
            if (df.distance(v) <= 2)
                CHECK(capped[v] == df.distance(v));
            else
                CHECK_FALSE(capped[v].has_value());
        }
    }
}

TEST_CASE("power is bit-identical at any thread count") {
    Graph g = random_regular(300, 4, 11);
    Graph single = power(g, 3, 1);
    for (int threads : {2, 3, 8}) CHECK(power(g, 3, threads) == single);

    Graph big = random_regular(2000, 6, 5);  // exercises the CSR path
    CHECK(power(big, 3, 4) == power(big, 3, 1));
}
