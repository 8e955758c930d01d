#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "cliquekit/graph.hpp"
#include "support/generators.hpp"

using namespace cliquekit;

TEST_CASE("triangle") {
    const Graph g = build_graph({{1, 2}, {2, 3}, {3, 1}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    for (vertex_id v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.label(0) == 1);  // first-seen order
    CHECK(g.label(2) == 3);
}

TEST_CASE("degenerate input: duplicates, reversals, self-loops") {
    const Graph g = build_graph({{1, 2}, {2, 1}, {1, 1}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("empty edge list gives the empty graph") {
    const Graph g = build_graph({});
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("star degrees") {
    const Graph g = build_graph({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(g.degree(*g.find_vertex(0)) == 4);
    for (vertex_label leaf : {1, 2, 3, 4}) CHECK(g.degree(*g.find_vertex(leaf)) == 1);
}

TEST_CASE("degree out of range is a usage error") {
    const Graph g = build_graph({{1, 2}});
    CHECK_THROWS_AS(g.degree(2), std::out_of_range);
    CHECK_THROWS_AS(g.neighbors(9), std::out_of_range);
}

TEST_CASE("build is deterministic") {
    const std::vector<EdgeRecord> edges{{5, 3}, {3, 7}, {7, 5}, {5, 9}};
    const Graph a = build_graph(edges);
    const Graph b = build_graph(edges);
    CHECK(a == b);
}

TEST_CASE("universe preserves isolated vertices in declared order") {
    const std::vector<vertex_label> universe{10, 20, 30};
    const std::vector<EdgeRecord> edges{{20, 30}};
    const Graph g = build_graph(edges, universe);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.label(0) == 10);
    CHECK(g.degree(0) == 0);
}

TEST_CASE("structural invariants hold for arbitrary messy input") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> label(0, 30);
    for (int round = 0; round < 100; ++round) {
        std::vector<EdgeRecord> edges;
        const int count = std::uniform_int_distribution<int>(0, 120)(rng);
        for (int i = 0; i < count; ++i)
            edges.push_back({label(rng), label(rng)});  // may be loops or duplicates
        const Graph g = build_graph(edges);

        std::size_t degree_sum = 0;
        std::set<std::pair<vertex_id, vertex_id>> seen;
        for (vertex_id v = 0; v < g.vertex_count(); ++v) {
            degree_sum += g.degree(v);
            vertex_id prev = 0;
            bool first = true;
            for (vertex_id u : g.neighbors(v)) {
                REQUIRE(u != v);                       // no self-loops
                REQUIRE((first || u > prev));          // sorted, no duplicates
                REQUIRE(g.adjacent(u, v));             // symmetry
                first = false;
                prev = u;
                seen.insert({std::min(u, v), std::max(u, v)});
            }
        }
        REQUIRE(degree_sum == 2 * g.edge_count());
        REQUIRE(seen.size() == g.edge_count());
    }
}

TEST_CASE("adjacency agrees with the input pair set") {
    std::mt19937 rng(99);
    const auto pairs = testgen::gnp_edges(25, 0.3, rng);
    const Graph g = testgen::graph_from_pairs(25, pairs);
    std::set<std::pair<int, int>> edge_set(pairs.begin(), pairs.end());
    for (int a = 0; a < 25; ++a)
        for (int b = a + 1; b < 25; ++b) {
            const bool expected = edge_set.count({a, b}) > 0;
            REQUIRE(g.adjacent(*g.find_vertex(a), *g.find_vertex(b)) == expected);
        }
}
