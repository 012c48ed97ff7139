#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "ecq/error.hpp"
#include "ecq/graph.hpp"
#include "ecq/graph_io.hpp"
#include "support.hpp"

using namespace ecq;

TEST_SUITE_BEGIN("graph");

TEST_CASE("parse_edge_list basics") {
    Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));

    Graph dup = parse_edge_list("0 1\n1 0");
    CHECK(dup.node_count() == 2);
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("parse_edge_list rejects bad input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("2 2"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\nx y"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 2 3"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n-1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n=2\n0 5"), std::invalid_argument);
}

TEST_CASE("parse_edge_list honors n= header and comments") {
    Graph g = parse_edge_list("# a comment\nn=5\n0 1  # trailing comment\n");
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 1);
    Graph lonely = parse_edge_list("n=3\n");
    CHECK(lonely.node_count() == 3);
    CHECK(lonely.edge_count() == 0);
    CHECK_FALSE(lonely.connected());
}

TEST_CASE("edge list round trip") {
    for (const auto& [name, g] : ecqtest::roster()) {
        CAPTURE(name);
        Graph back = parse_edge_list(serialize_edge_list(g));
        CHECK(back.node_count() == g.node_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("builtin rosters match the published graph features") {
    struct Row {
        const char* name;
        std::vector<long> params;
        int nodes;
        int edges;
        double dens;  // rounded to 2 decimals
    };
    // |V|, |E|, density of every reconstructible graph in the results table
    const std::vector<Row> rows = {
        {"bull", {}, 5, 5, 0.5},
        {"complete_bipartite", {3, 5}, 8, 15, 0.54},
        {"complete", {5}, 5, 10, 1.0},
        {"florentine_families", {}, 15, 20, 0.19},
        {"tutte", {}, 46, 69, 0.07},
        {"lollipop", {10, 20}, 30, 65, 0.15},
        {"karate_club", {}, 34, 78, 0.14},
        {"sedgewick_maze", {}, 8, 10, 0.36},
        {"g8_spider", {}, 16, 15, 0.13},
    };
    for (const auto& row : rows) {
        CAPTURE(row.name);
        Graph g = builtin(row.name, row.params);
        CHECK(g.node_count() == row.nodes);
        CHECK(static_cast<int>(g.edge_count()) == row.edges);
        CHECK(std::abs(density(g) - row.dens) <= 0.005 + 1e-12);
    }
}

TEST_CASE("bull roster fixes the degree sequence") {
    Graph g = builtin("bull");
    Matrix a = adjacency(g);
    std::vector<int> rowsum;
    for (int i = 0; i < 5; ++i) {
        int s = 0;
        for (int j = 0; j < 5; ++j) s += static_cast<int>(a(i, j));
        rowsum.push_back(s);
    }
    CHECK(rowsum == std::vector<int>{2, 3, 3, 1, 1});
}

TEST_CASE("g8_spider roster satisfies the eigenvector equation at lambda = sqrt(7)") {
    // Reconstruction check: center 3/sqrt(42), hubs 1/sqrt(6), leaves 1/sqrt(42).
    Graph g = builtin("g8_spider");
    REQUIRE(g.node_count() == 16);
    REQUIRE(g.edge_count() == 15);
    CHECK(g.connected());
    std::vector<double> x(16, 1.0 / std::sqrt(42.0));
    x[0] = 3.0 / std::sqrt(42.0);
    x[1] = x[2] = x[3] = 1.0 / std::sqrt(6.0);
    const double lambda = std::sqrt(7.0);
    Matrix a = adjacency(g);
    std::vector<double> ax = matvec(a, x);
    for (int i = 0; i < 16; ++i) CHECK(ax[i] == doctest::Approx(lambda * x[i]).epsilon(1e-12));
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 5);
    CHECK(g.degree(2) == 5);
    CHECK(g.degree(3) == 5);
    for (int leaf = 4; leaf < 16; ++leaf) CHECK(g.degree(leaf) == 1);
}

TEST_CASE("adjacency examples") {
    Matrix p3 = adjacency(builtin("path", {3}));
    CHECK(p3(0, 1) == 1.0);
    CHECK(p3(1, 2) == 1.0);
    CHECK(p3(0, 2) == 0.0);
    CHECK(p3(0, 0) == 0.0);

    Matrix k3 = adjacency(builtin("complete", {3}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3(i, j) == (i == j ? 0.0 : 1.0));
}

TEST_CASE("adjacency is symmetric with zero diagonal on roster and random graphs") {
    auto check = [](const Graph& g) {
        Matrix a = adjacency(g);
        for (int i = 0; i < g.node_count(); ++i) {
            CHECK(a(i, i) == 0.0);
            for (int j = i + 1; j < g.node_count(); ++j) CHECK(a(i, j) == a(j, i));
        }
    };
    for (const auto& [name, g] : ecqtest::roster()) {
        CAPTURE(name);
        check(g);
    }
    for (int k = 0; k < 100; ++k) {
        const long n = 5 + (k * 7) % 26;
        const long m = 1 + k % 4;
        check(builtin("barabasi_albert", {n, std::min(m, n - 1)}, 1000 + k));
    }
}

TEST_CASE("degrees and dhat") {
    DegreeVector p3 = degrees(builtin("path", {3}));
    CHECK(p3.d == std::vector<int>{1, 2, 1});
    const double r6 = std::sqrt(6.0);
    CHECK(p3.dhat[0] == doctest::Approx(1.0 / r6));
    CHECK(p3.dhat[1] == doctest::Approx(2.0 / r6));

    DegreeVector k5 = degrees(builtin("complete", {5}));
    CHECK(k5.d == std::vector<int>(5, 4));
    double norm = 0.0;
    for (double v : k5.dhat) norm += v * v;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));

    DegreeVector g8 = degrees(builtin("g8_spider"));
    CHECK(g8.d[0] == 3);
    CHECK(g8.d[1] == 5);
    CHECK(g8.d[15] == 1);

    CHECK_THROWS_AS(degrees(parse_edge_list("n=3\n")), std::domain_error);
}

TEST_CASE("density requires n >= 2") {
    CHECK(density(builtin("complete", {5})) == doctest::Approx(1.0));
    CHECK(density(builtin("bull")) == doctest::Approx(0.5));
    CHECK(density(builtin("g8_spider")) == doctest::Approx(0.125));
    CHECK_THROWS_AS(density(builtin("complete", {1})), std::invalid_argument);
}

TEST_CASE("builtin rejects unknown names and bad parameters") {
    CHECK_THROWS_AS(builtin("petersen"), std::invalid_argument);
    CHECK_THROWS_AS(builtin("lollipop", {2, 5}), std::invalid_argument);
    CHECK_THROWS_AS(builtin("complete", {}), std::invalid_argument);
    CHECK_THROWS_AS(builtin("barabasi_albert", {5, 5}), std::invalid_argument);
}

TEST_CASE("barabasi_albert is deterministic and simple") {
    Graph a = builtin("barabasi_albert", {50, 5}, 7);
    Graph b = builtin("barabasi_albert", {50, 5, 7});
    CHECK(a.edges() == b.edges());
    CHECK(a.node_count() == 50);
    // seed clique K_5 plus 45 nodes of degree-5 attachments
    CHECK(a.edge_count() == 10 + 45 * 5);
    CHECK(a.connected());
    Graph c = builtin("barabasi_albert", {50, 5}, 8);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("florentine labels") {
    Graph g = builtin("florentine_families");
    CHECK(g.labels().size() == 15);
    CHECK(g.node_name(1) == "Medici");
    CHECK(g.node_name(12) == "Guadagni");
    CHECK(builtin("bull").labels().empty());
}

TEST_CASE("graph immutability across accessors") {
    // Value-type behavior: copies are independent snapshots.
    Graph g = builtin("bull");
    Graph copy = g;
    CHECK(copy.edges() == g.edges());
    CHECK(&copy.edges() != &g.edges());
}

TEST_CASE("json export schema") {
    Graph g = builtin("florentine_families");
    std::string js = graph_to_json(g);
    CHECK(js.find("\"format_version\": 1") != std::string::npos);
    CHECK(js.find("\"n\": 15") != std::string::npos);
    CHECK(js.find("\"Medici\"") != std::string::npos);
}

TEST_CASE("dot export colors by category") {
    Graph g = builtin("g8_spider");
    auto cat = categories_from_highlight(16, {0});
    std::string dot = graph_to_dot(g, cat, default_palette());
    CHECK(dot.find("0 [label=\"0\", fillcolor=\"#35b779\"]") != std::string::npos);
    CHECK(dot.find("1 [label=\"1\", fillcolor=\"#440154\"]") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK_THROWS_AS(categories_from_highlight(16, {99}), std::invalid_argument);
}

TEST_SUITE_END();
