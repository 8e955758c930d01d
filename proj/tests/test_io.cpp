#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "cliquekit/io.hpp"
#include "support/generators.hpp"

using namespace cliquekit;

namespace {

std::set<std::pair<vertex_label, vertex_label>> edge_label_set(const Graph& g) {
    std::set<std::pair<vertex_label, vertex_label>> out;
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        for (vertex_id u : g.neighbors(v)) {
            const vertex_label a = g.label(v);
            const vertex_label b = g.label(u);
            out.insert({std::min(a, b), std::max(a, b)});
        }
    return out;
}

}  // namespace

TEST_CASE("mtx: banner, comments, triangle") {
    std::istringstream in(
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "% a comment\n"
        "3 3 3\n"
        "1 2\n"
        "2 3\n"
        "3 1\n");
    const MtxContents contents = parse_mtx(in);
    CHECK(contents.rows == 3);
    CHECK(contents.nnz == 3);
    REQUIRE(contents.records.size() == 3);
    CHECK(contents.records[0] == EdgeRecord{1, 2});
}

TEST_CASE("mtx: missing banner is a format error") {
    std::istringstream in("3 3 1\n1 2\n");
    CHECK_THROWS_AS(parse_mtx(in), ParseError);
}

TEST_CASE("mtx: nnz disagreement names the offending line") {
    SECTION("too many data lines") {
        std::istringstream in(
            "%%MatrixMarket matrix coordinate pattern symmetric\n"
            "3 3 1\n"
            "1 2\n"
            "2 3\n");
        try {
            parse_mtx(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
            CHECK(std::string(e.what()).find("line 4") != std::string::npos);
        }
    }
    SECTION("too few data lines") {
        std::istringstream in(
            "%%MatrixMarket matrix coordinate pattern symmetric\n"
            "3 3 3\n"
            "1 2\n");
        CHECK_THROWS_AS(parse_mtx(in), ParseError);
    }
}

TEST_CASE("mtx: value fields beyond the indices are ignored") {
    std::istringstream in(
        "%%MatrixMarket matrix coordinate real general\n"
        "2 2 2\n"
        "1 2 0.5\n"
        "2 1 0.25\n");
    const Graph g = load_mtx_graph(in);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);  // both orientations merged
}

TEST_CASE("mtx: non-square sizes load with a warning") {
    std::istringstream in(
        "%%MatrixMarket matrix coordinate pattern general\n"
        "2 3 2\n"
        "1 3\n"
        "2 3\n");
    std::ostringstream warnings;
    const Graph g = load_mtx_graph(in, &warnings);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(warnings.str().find("non-square") != std::string::npos);
}

TEST_CASE("mtx: declared but unused indices become isolated vertices") {
    std::istringstream in(
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "5 5 1\n"
        "2 1\n");
    const Graph g = load_mtx_graph(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("edge list: pairs in file order, SNAP comments skipped") {
    std::istringstream in(
        "# SNAP-style header\n"
        "0 1\n"
        "1 2\n");
    const auto records = parse_edge_list(in);
    REQUIRE(records.size() == 2);
    CHECK(records[0] == EdgeRecord{0, 1});
    CHECK(records[1] == EdgeRecord{1, 2});
}

TEST_CASE("edge list: non-integer token is a format error with line number") {
    std::istringstream in("0 1\nx 2\n");
    try {
        parse_edge_list(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("adjacency matrix: loaders and validation") {
    SECTION("all ones off the diagonal is a triangle") {
        const Graph g = from_adjacency_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
    }
    SECTION("zero matrix is edgeless but keeps its vertices") {
        const Graph g = from_adjacency_matrix({{0, 0}, {0, 0}});
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 0);
    }
    SECTION("asymmetry is a validation error") {
        CHECK_THROWS_AS(from_adjacency_matrix({{0, 1}, {0, 0}}), std::invalid_argument);
    }
    SECTION("nonzero diagonal is a validation error") {
        CHECK_THROWS_AS(from_adjacency_matrix({{1, 0}, {0, 0}}), std::invalid_argument);
    }
    SECTION("non 0/1 entries are a validation error") {
        CHECK_THROWS_AS(from_adjacency_matrix({{0, 2}, {2, 0}}), std::invalid_argument);
    }
}

TEST_CASE("adjacency list: loaders and symmetrization") {
    SECTION("triangle") {
        const Graph g = from_adjacency_list({{1, 2}, {0, 2}, {0, 1}});
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
    }
    SECTION("one-sided listing is symmetrized with a warning") {
        std::ostringstream warnings;
        const Graph g = from_adjacency_list({{1}, {}}, &warnings);
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 1);
        CHECK(g.adjacent(0, 1));
        CHECK_FALSE(warnings.str().empty());
    }
    SECTION("out-of-range neighbor is a validation error") {
        CHECK_THROWS_AS(from_adjacency_list({{5}}), std::invalid_argument);
    }
    SECTION("self entry is a validation error") {
        CHECK_THROWS_AS(from_adjacency_list({{0}, {}}), std::invalid_argument);
    }
}

TEST_CASE("all four loaders agree on random graphs") {
    std::mt19937 rng(2024);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const auto pairs = testgen::gnp_edges(n, 0.4, rng);

        // matrix route
        std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
        for (const auto& [a, b] : pairs) matrix[a][b] = matrix[b][a] = 1;
        const Graph via_matrix = from_adjacency_matrix(matrix);

        // adjacency list route
        std::vector<std::vector<std::size_t>> lists(n);
        for (const auto& [a, b] : pairs) {
            lists[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));
            lists[static_cast<std::size_t>(b)].push_back(static_cast<std::size_t>(a));
        }
        const Graph via_list = from_adjacency_list(lists);

        // mtx route (1-based labels, shifted back for comparison)
        std::ostringstream mtx;
        mtx << "%%MatrixMarket matrix coordinate pattern symmetric\n";
        mtx << n << " " << n << " " << pairs.size() << "\n";
        for (const auto& [a, b] : pairs) mtx << (b + 1) << " " << (a + 1) << "\n";
        std::istringstream mtx_in(mtx.str());
        const Graph via_mtx = load_mtx_graph(mtx_in);

        // raw edge list route (vertices appearing in edges only)
        const Graph via_edges = testgen::graph_from_pairs(n, pairs);

        const auto canonical = edge_label_set(via_edges);
        CHECK(edge_label_set(via_matrix) == canonical);
        CHECK(edge_label_set(via_list) == canonical);
        CHECK(via_matrix == via_list);

        std::set<std::pair<vertex_label, vertex_label>> mtx_shifted;
        for (const auto& [a, b] : edge_label_set(via_mtx)) mtx_shifted.insert({a - 1, b - 1});
        CHECK(mtx_shifted == canonical);
    }
}

TEST_CASE("mtx round trip preserves the edge set") {
    std::mt19937 rng(5);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 15)(rng);
        const Graph g = testgen::gnp_graph(n, 0.35, rng);

        std::ostringstream out;
        write_mtx(g, out);
        const std::string text = out.str();
        CHECK(text.rfind("%%MatrixMarket matrix coordinate pattern symmetric\n", 0) == 0);
        CHECK(text.back() == '\n');

        std::istringstream in(text);
        const Graph parsed = load_mtx_graph(in);
        CHECK(parsed.edge_count() == g.edge_count());

        // labels were written as id+1 (0-based input labels), so shift back
        std::set<std::pair<vertex_label, vertex_label>> shifted;
        for (const auto& [a, b] : edge_label_set(parsed)) shifted.insert({a - 1, b - 1});
        CHECK(shifted == edge_label_set(g));
    }
}

TEST_CASE("garbage input always surfaces as a parse error, never a crash") {
    std::mt19937 rng(13);
    const std::string alphabet = "0123456789 %-.abcMN\n\t";
    for (int round = 0; round < 300; ++round) {
        std::string text = (round % 2 == 0) ? "%%MatrixMarket matrix coordinate pattern symmetric\n"
                                            : "";
        const int len = std::uniform_int_distribution<int>(0, 120)(rng);
        for (int i = 0; i < len; ++i)
            text += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
        const auto degree_sum_holds = [](const Graph& g) {
            std::size_t sum = 0;
            for (vertex_id v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
            return sum == 2 * g.edge_count();
        };
        std::istringstream mtx_in(text);
        try {
            const Graph g = load_mtx_graph(mtx_in);
            CHECK(degree_sum_holds(g));
        } catch (const ParseError&) {
        }
        std::istringstream edges_in(text);
        try {
            const Graph g = load_edge_list_graph(edges_in);
            CHECK(degree_sum_holds(g));
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("serializer writes each edge once with the higher index first") {
    const Graph g = build_graph({{1, 2}, {2, 3}, {3, 1}});
    std::ostringstream out;
    write_mtx(g, out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);  // banner
    std::getline(lines, line);  // size
    CHECK(line == "3 3 3");
    int data_lines = 0;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        long long i = 0, j = 0;
        REQUIRE((ls >> i >> j));
        CHECK(i > j);
        ++data_lines;
    }
    CHECK(data_lines == 3);
}
