#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cliquekit/isomorphism.hpp"
#include "cliquekit/search.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cliquekit;

namespace {

SearchParams unlimited() {
    SearchParams p;
    p.time_limit = 0.0;
    return p;
}

const std::vector<std::pair<int, int>> triangle_edges{{0, 1}, {1, 2}, {2, 0}};
const std::vector<std::pair<int, int>> k4_edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
const std::vector<std::pair<int, int>> path3_edges{{0, 1}, {1, 2}};
const std::vector<std::pair<int, int>> c4_edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
const std::vector<std::pair<int, int>> c5_edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
const std::vector<std::pair<int, int>> k5_edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

}  // namespace

TEST_CASE("triangle into K4 embeds as a homomorphism of full size") {
    const Graph gq = testgen::graph_from_pairs(3, triangle_edges);
    const Graph gp = testgen::graph_from_pairs(4, k4_edges);

    const auto cg = build_iso_graph(gp, gq);
    const auto clique = get_max_clique(cg.graph(), unlimited());
    REQUIRE(clique.has_value());
    CHECK(clique->size() == 3);

    const IsoResult result = find_subgraph_isomorphism(gp, gq, unlimited());
    REQUIRE(result.is_full);
    REQUIRE(result.search_done);
    // edge preservation, checked directly on the output
    for (const auto& [q1, p1] : result.mapping)
        for (const auto& [q2, p2] : result.mapping) {
            if (q1 == q2) continue;
            if (gq.adjacent(*gq.find_vertex(q1), *gq.find_vertex(q2)))
                CHECK(gp.adjacent(*gp.find_vertex(p1), *gp.find_vertex(p2)));
        }
}

TEST_CASE("an edge cannot embed into an edgeless pair") {
    const Graph gq = testgen::graph_from_pairs(2, {{0, 1}});
    const Graph gp = testgen::graph_from_pairs(2, {});
    const auto cg = build_iso_graph(gp, gq);
    const auto clique = get_max_clique(cg.graph(), unlimited());
    REQUIRE(clique.has_value());
    CHECK(clique->size() == 1);
    const IsoResult result = find_subgraph_isomorphism(gp, gq, unlimited());
    CHECK_FALSE(result.is_full);
    CHECK(result.search_done);
    CHECK(result.mapping.size() == 1);
}

TEST_CASE("path into itself embeds fully") {
    const Graph g = testgen::graph_from_pairs(3, path3_edges);
    const auto cg = build_iso_graph(g, g);
    const auto clique = get_max_clique(cg.graph(), unlimited());
    REQUIRE(clique.has_value());
    CHECK(clique->size() == 3);
}

TEST_CASE("C4 into K5 is a full match") {
    const Graph gq = testgen::graph_from_pairs(4, c4_edges);
    const Graph gp = testgen::graph_from_pairs(5, k5_edges);
    const IsoResult result = find_subgraph_isomorphism(gp, gq, unlimited());
    CHECK(result.is_full);
    CHECK(result.mapping.size() == 4);
}

TEST_CASE("K4 into C5 is conclusively impossible") {
    const Graph gq = testgen::graph_from_pairs(4, k4_edges);
    const Graph gp = testgen::graph_from_pairs(5, c5_edges);
    const IsoResult result = find_subgraph_isomorphism(gp, gq, unlimited());
    CHECK_FALSE(result.is_full);
    CHECK(result.search_done);
}

TEST_CASE("any graph embeds into itself") {
    std::mt19937 rng(63);
    for (int round = 0; round < 10; ++round) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const Graph g = testgen::gnp_graph(n, 0.5, rng);
        const IsoResult result = find_subgraph_isomorphism(g, g, unlimited());
        CHECK(result.is_full);
    }
}

TEST_CASE("strict mode demands an induced embedding") {
    const Graph gq = testgen::graph_from_pairs(3, path3_edges);
    const Graph gp = testgen::graph_from_pairs(4, k4_edges);
    // P3 maps into K4 as a subgraph, but no induced P3 exists in a complete graph
    CHECK(find_subgraph_isomorphism(gp, gq, unlimited(), false).is_full);
    CHECK_FALSE(find_subgraph_isomorphism(gp, gq, unlimited(), true).is_full);
}

TEST_CASE("empty inputs are rejected") {
    const Graph g = testgen::graph_from_pairs(2, {{0, 1}});
    const Graph empty;
    CHECK_THROWS_AS(build_iso_graph(g, empty), std::invalid_argument);
    CHECK_THROWS_AS(build_iso_graph(empty, g), std::invalid_argument);
}

TEST_CASE("clique answer agrees with brute-force injection search") {
    std::mt19937 rng(1009);
    for (int round = 0; round < 80; ++round) {
        // every combination with |P| * |Q| <= 36 is fair game
        const std::size_t nq = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::size_t np = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const auto q_pairs = testgen::gnp_edges(nq, 0.5, rng);
        const auto p_pairs = testgen::gnp_edges(np, 0.5, rng);
        const Graph gq = testgen::graph_from_pairs(nq, q_pairs);
        const Graph gp = testgen::graph_from_pairs(np, p_pairs);
        const auto dq = oracle::dense_from_edges(nq, q_pairs);
        const auto dp = oracle::dense_from_edges(np, p_pairs);

        const IsoResult plain = find_subgraph_isomorphism(gp, gq, unlimited(), false);
        REQUIRE(plain.search_done);
        REQUIRE(plain.is_full == oracle::has_injection(dp, dq, false));

        const IsoResult strict = find_subgraph_isomorphism(gp, gq, unlimited(), true);
        REQUIRE(strict.search_done);
        REQUIRE(strict.is_full == oracle::has_injection(dp, dq, true));
    }
}
