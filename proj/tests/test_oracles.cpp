#include <random>
#include <vector>

#include "doctest.h"

#include "divrank/errors.hpp"
#include "divrank/oracles.hpp"
#include "support/families.hpp"

using namespace divrank;
using namespace divrank::oracles;

namespace {

Multigraph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId v = 0; v < n; ++v) e.push_back({v, (v + 1) % n, 1});
    return Multigraph(n, e);
}

Multigraph path(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId v = 0; v + 1 < n; ++v) e.push_back({v, v + 1, 1});
    return Multigraph(n, e);
}

}  // namespace

TEST_CASE("lattice basics") {
    LaplacianLattice c3(cycle(3));
    CHECK(c3.tree_count() == 3);
    CHECK(c3.equivalent({2, 0, 0}, {0, 1, 1}));
    CHECK_FALSE(c3.equivalent({1, 0, 0}, {0, 1, 0}));
    CHECK(c3.winnable({-1, 1, 1}));
    CHECK_FALSE(c3.winnable({-1, 1, 0}));
    CHECK_FALSE(c3.winnable({-1, 0, 0}));

    std::vector<Edge> k4e;
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) k4e.push_back({u, v, 1});
    CHECK(LaplacianLattice(Multigraph(4, k4e)).tree_count() == 16);
    CHECK(LaplacianLattice(Multigraph(1)).tree_count() == 1);
}

TEST_CASE("lattice and bounded winnability agree") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& g : testing::connected_multigraphs(n, 3, true)) {
            LaplacianLattice lat(g);
            testing::for_each_divisor(
                n, [](VertexId) { return -2; }, [&g](VertexId v) { return g.degree(v); },
                [&](const Divisor& h) {
                    CHECK(lat.winnable(h) == winnable_bounded(g, h, default_winnability_bound(g, h)));
                });
        }
    }
}

TEST_CASE("rank_definitional examples") {
    CHECK(rank_definitional(cycle(3), {0, 0, 0}) == 0);
    CHECK(rank_definitional(cycle(3), {-1, 0, 0}) == -1);
    CHECK(rank_definitional(cycle(3), {1, 0, 0}) == 0);
    CHECK(rank_definitional(cycle(3), {1, 1, 1}) == 2);
    CHECK(rank_definitional(path(2), {1, 1}) == 2);
    CHECK(rank_definitional(Multigraph(1), {3}) == 3);
    CHECK(rank_definitional(cycle(3), {1, 1, 0}, WinnabilityMethod::Bounded) ==
          rank_definitional(cycle(3), {1, 1, 0}));
}

TEST_CASE("recurrent_permutation") {
    CHECK(recurrent_permutation(cycle(3), {2, 1, 0}));
    CHECK_FALSE(recurrent_permutation(path(2), {0, 0}));
    CHECK_FALSE(recurrent_permutation(cycle(3), {2, 0, 0}));
    CHECK(recurrent_permutation(path(2), {1, 0}));
}

TEST_CASE("ts_subset_enumeration") {
    CHECK(ts_subset_enumeration(cycle(3), Thresholds({2, 2, 2})) == 2);
    CHECK(ts_subset_enumeration(path(3), Thresholds({1, 1, 1})) == 1);
    CHECK(ts_subset_enumeration(cycle(4), Thresholds({0, 0, 0, 0})) == 0);
    CHECK(ts_subset_enumeration(path(3), Thresholds({2, 3, 2})) == 3);
    std::vector<Edge> multi{{0, 1, 2}};
    CHECK_THROWS_AS(ts_subset_enumeration(Multigraph(2, multi), Thresholds({1, 1})), InputError);
}

TEST_CASE("fingerprint is stable and sensitive") {
    auto a = fingerprint(cycle(3), {1, 2, 3});
    CHECK(a.size() == 16);
    CHECK(a == fingerprint(cycle(3), {1, 2, 3}));
    CHECK(a != fingerprint(cycle(3), {1, 2, 4}));
    CHECK(a != fingerprint(path(3), {1, 2, 3}));
}

TEST_CASE("verify_reduction_chain") {
    auto check_all = [](const Multigraph& g, const Thresholds& tau, std::int64_t ts) {
        auto reports = verify_reduction_chain(g, tau);
        CHECK(reports.size() == 6);
        for (const auto& r : reports) {
            INFO(r.quantity);
            CHECK(r.agrees);
            CHECK(r.fingerprint.size() == 16);
        }
        CHECK(reports.front().pipeline == ts);
    };
    check_all(cycle(3), Thresholds({2, 2, 2}), 2);
    check_all(path(2), Thresholds({1, 1}), 1);
    check_all(path(3), Thresholds({0, 0, 0}), 0);
}

// A threshold of d(v) + 1 forces v into every target set, but v_i can collect
// at most d(v) chips from its ports, so the gadget charges an extra chip.
TEST_CASE("verify_reduction_chain surfaces disagreements") {
    auto reports = verify_reduction_chain(path(2), Thresholds({2, 1}));
    REQUIRE(reports.size() == 6);
    CHECK(reports[0].agrees);
    CHECK(reports[0].pipeline == 1);
    CHECK_FALSE(reports[1].agrees);
    CHECK(reports[1].pipeline == 2);
    CHECK(reports[1].oracle == 1);
    CHECK_FALSE(reports[2].agrees);
    CHECK(reports[3].agrees);
}
