#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "divrank/errors.hpp"
#include "divrank/io.hpp"
#include "divrank/reductions.hpp"

using namespace divrank;

TEST_CASE("graph text format") {
    auto g = io::parse_graph(
        "# a triangle\n"
        "3\n"
        "0 1 1   # first edge\n"
        "\n"
        "1 2 1\n"
        "0 2 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(io::graph_text(g) == "3\n0 1 1\n0 2 1\n1 2 1\n");
    CHECK(io::parse_graph(io::graph_text(g)) == g);

    std::istringstream in("2\n1 0 3\n");
    auto k2 = io::parse_graph(in);
    CHECK(k2.multiplicity(0, 1) == 3);
    CHECK(io::parse_graph("1\n").vertex_count() == 1);
}

TEST_CASE("graph parse errors") {
    CHECK_THROWS_AS(io::parse_graph(""), InputError);
    CHECK_THROWS_AS(io::parse_graph("# nothing\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("2 3\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("-1\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("2\n0 1\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("2\n0 1 0\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("2\n0 x 1\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("2\n0 2 1\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("2\n1 1 1\n"), InputError);
    CHECK_THROWS_AS(io::parse_graph("{\"n\": 2, \"edges\": [[0, 1]]}"), InputError);
    CHECK_THROWS_AS(io::parse_graph("{\"edges\": []}"), InputError);
    CHECK_THROWS_AS(io::parse_graph("{\"n\": 2,"), InputError);
    CHECK_THROWS_AS(io::read_graph_file("/nonexistent/divrank.graph"), InputError);
}

TEST_CASE("graph JSON") {
    auto g = io::parse_graph(R"({"n": 3, "edges": [[0, 1, 2], [1, 2, 1]]})");
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.degree(1) == 3);
    CHECK(io::graph_from_json(io::to_json(g)) == g);
    CHECK(io::parse_graph(R"({"n": 2})").edge_count() == 0);
}

TEST_CASE("divisor formats") {
    CHECK(io::parse_divisor("1 -2 3\n") == Divisor{1, -2, 3});
    CHECK(io::parse_divisor("# chips\n  0 0\n") == Divisor{0, 0});
    CHECK(io::parse_divisor("[4, -1]") == Divisor{4, -1});
    CHECK(io::parse_divisor(R"({"chips": [1, 2]})") == Divisor{1, 2});
    CHECK(io::divisor_text({1, -2, 3}) == "1 -2 3\n");
    CHECK(io::divisor_from_json(io::to_json(Divisor{5, 0})) == Divisor{5, 0});

    CHECK_THROWS_AS(io::parse_divisor(""), InputError);
    CHECK_THROWS_AS(io::parse_divisor("1 2\n3\n"), InputError);
    CHECK_THROWS_AS(io::parse_divisor("1 2.5\n"), InputError);
    CHECK_THROWS_AS(io::parse_divisor("[1, \"a\"]"), InputError);
    CHECK_THROWS_AS(io::parse_divisor(R"({"tau": [1]})"), InputError);
}

TEST_CASE("threshold formats") {
    CHECK(io::parse_thresholds("2 2 2\n").values().size() == 3);
    CHECK(io::parse_thresholds(R"({"tau": [1, 0]})")[0] == 1);
    CHECK(io::parse_thresholds("[0, 3]")[1] == 3);
    CHECK_THROWS_AS(io::parse_thresholds("1 -1\n"), InputError);
}

TEST_CASE("instance bundles parse as graph and divisor") {
    std::vector<Edge> e{{0, 1, 1}};
    Multigraph k2(2, e);
    auto inst = reduce_tss_to_rec(k2, Thresholds({1, 1}));
    const std::string text = io::to_json(inst).dump();
    CHECK(io::parse_graph(text) == inst.gprime);
    CHECK(io::parse_divisor(text) == inst.x);
    auto j = io::to_json(inst);
    CHECK(j.at("N") == 4);
    CHECK(j.at("M").is_null());
    CHECK(j.at("roles").size() == 8);
    CHECK(j.at("roles")[0] == "i:0");

    auto composed = reduce_tss_to_nonhalt(k2, Thresholds({1, 1}));
    auto jc = io::to_json(composed);
    CHECK(jc.at("M") == 3);
    CHECK(jc.at("new_vertex") == 8);
    CHECK(jc.at("roles").back() == "new");
    CHECK(io::parse_graph(jc.dump()) == composed.second.gpp);
}

TEST_CASE("file round trip") {
    const std::string path = "divrank_io_roundtrip.graph";
    {
        std::ofstream out(path);
        out << "4\n0 1 1\n1 2 2\n2 3 1\n";
    }
    auto g = io::read_graph_file(path);
    CHECK(g.degree(1) == 3);
    std::remove(path.c_str());
}
