#include <random>
#include <vector>

#include "doctest.h"

#include "divrank/divisor.hpp"
#include "divrank/errors.hpp"
#include "divrank/multigraph.hpp"
#include "support/families.hpp"

using namespace divrank;

namespace {

Multigraph k2(Chips m = 1) {
    std::vector<Edge> e{{0, 1, m}};
    return Multigraph(2, e);
}

Multigraph c3() {
    std::vector<Edge> e{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
    return Multigraph(3, e);
}

}  // namespace

TEST_CASE("degree and multiplicity") {
    CHECK(k2().degree(0) == 1);
    CHECK(k2().degree(1) == 1);
    CHECK(k2(4).degree(0) == 4);
    CHECK(k2(4).degree(1) == 4);
    for (VertexId v = 0; v < 3; ++v) CHECK(c3().degree(v) == 2);

    CHECK(k2().multiplicity(0, 1) == 1);
    CHECK(k2().multiplicity(0, 0) == 0);
    CHECK(k2(6).multiplicity(0, 1) == 6);

    CHECK_THROWS_AS(k2().degree(2), InputError);
    CHECK_THROWS_AS(k2().multiplicity(0, 5), InputError);
}

TEST_CASE("degree vector") {
    CHECK(degree_vector(c3()) == Divisor{2, 2, 2});
    CHECK(degree_vector(k2()) == Divisor{1, 1});
    std::vector<Edge> star{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
    CHECK(degree_vector(Multigraph(4, star)) == Divisor{3, 1, 1, 1});
}

TEST_CASE("connectivity and genus") {
    CHECK(c3().is_connected());
    CHECK_FALSE(Multigraph(2).is_connected());
    std::vector<Edge> e{{0, 1, 1}};
    CHECK_FALSE(Multigraph(3, e).is_connected());
    CHECK(Multigraph(1).is_connected());

    CHECK(c3().genus() == 1);
    std::vector<Edge> path{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
    CHECK(Multigraph(4, path).genus() == 0);
    CHECK(k2(4).genus() == 3);
    CHECK_THROWS_AS(Multigraph(2).genus(), InputError);
}

TEST_CASE("construction rejects bad edges") {
    std::vector<Edge> loop{{1, 1, 1}};
    CHECK_THROWS_AS(Multigraph(2, loop), InputError);
    std::vector<Edge> far{{0, 3, 1}};
    CHECK_THROWS_AS(Multigraph(2, far), InputError);
    std::vector<Edge> neg{{0, 1, -1}};
    CHECK_THROWS_AS(Multigraph(2, neg), InputError);
}

TEST_CASE("repeated pairs accumulate; edges() lists each pair once") {
    std::vector<Edge> e{{0, 1, 2}, {1, 0, 3}, {1, 2, 1}};
    Multigraph g(3, e);
    CHECK(g.multiplicity(0, 1) == 5);
    CHECK(g.edge_count() == 6);
    auto listed = g.edges();
    REQUIRE(listed.size() == 2);
    CHECK(listed[0] == Edge{0, 1, 5});
    CHECK(listed[1] == Edge{1, 2, 1});
    CHECK_FALSE(g.is_simple());
    CHECK(c3().is_simple());
}

TEST_CASE("handshake, symmetry and genus sign on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 7;
        Multigraph g = testing::random_connected_multigraph(rng, n, trial % 9);
        Chips total = 0;
        for (VertexId v = 0; v < n; ++v) total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
        CHECK(degree_vector(g).degree() == 2 * g.edge_count());
        for (VertexId u = 0; u < n; ++u) {
            CHECK(g.multiplicity(u, u) == 0);
            for (VertexId v = 0; v < n; ++v) CHECK(g.multiplicity(u, v) == g.multiplicity(v, u));
        }
        CHECK(g.genus() >= 0);
    }
}

TEST_CASE("family generator sanity") {
    // Connected simple labelled graphs: 1 on two vertices, 4 on three, 38 on four.
    CHECK(testing::connected_simple_graphs(2, false).size() == 1);
    CHECK(testing::connected_simple_graphs(3, false).size() == 4);
    CHECK(testing::connected_simple_graphs(4, false).size() == 38);
    // Up to isomorphism: path and triangle; six graphs on four vertices.
    CHECK(testing::connected_simple_graphs(3, true).size() == 2);
    CHECK(testing::connected_simple_graphs(4, true).size() == 6);
}
