#include <doctest.h>

#include <stdexcept>

#include <random>

#include "fslab/families.hpp"
#include "fslab/fs.hpp"
#include "fslab/graph_io.hpp"

using namespace fslab;

TEST_CASE("edge text format") {
    Graph g = lollipop_graph(5, 3);
    Graph back = parse_edge_text(to_edge_text(g));
    CHECK(back == g);
    CHECK(to_edge_text(Graph(3)) == "3\n");
    CHECK_THROWS_AS(parse_edge_text("4\n0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_text(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_text("3\n0 7"), std::out_of_range);
}

TEST_CASE("compact format is pinned bit-exact") {
    // P4 edges (0,1),(1,2),(2,3): pair bits 1,0,0,1,0,1 -> nibbles 1001 0100.
    CHECK(to_compact(path_graph(4)) == "4:94");
    CHECK(parse_compact("4:94") == path_graph(4));
    CHECK(to_compact(Graph(1)) == "1:");
    CHECK(to_compact(complete_graph(3)) == "3:e");

    CHECK_THROWS_AS(parse_compact("4:9"), std::invalid_argument);   // wrong digit count
    CHECK_THROWS_AS(parse_compact("4:9z"), std::invalid_argument);  // bad hex
    CHECK_THROWS_AS(parse_compact("494"), std::invalid_argument);   // no colon
}

TEST_CASE("round trips on random graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        CHECK(parse_compact(to_compact(g)) == g);
        CHECK(parse_edge_text(to_edge_text(g)) == g);
        CHECK(parse_graph(to_compact(g)) == g);
        CHECK(parse_graph(to_edge_text(g)) == g);
    }
}

TEST_CASE("bijection text form") {
    Bijection b{2, 0, 3, 1};
    CHECK(parse_bijection(to_text(b)) == b);
    CHECK_THROWS_AS(parse_bijection("0 0 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bijection("0 1 4"), std::invalid_argument);
}

TEST_CASE("component report json") {
    FsInstance inst(star_graph(4), cycle_graph(4), FsMode::Explicit);
    ComponentReport rep = components(inst);
    rep.per_component_kappa = per_component_kappa(inst, rep);
    CHECK(component_report_json(rep) ==
          R"({"schemaVersion":1,"count":2,"sizes":[12,12],"perComponentKappa":[2,2]})");

    ComponentReport plain = components(complete_graph(4), path_graph(4));
    CHECK(component_report_json(plain) == R"({"schemaVersion":1,"count":1,"sizes":[24]})");
}
