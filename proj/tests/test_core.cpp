#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "goldens.hpp"
#include "oracles.hpp"
#include "spg/core.hpp"

using namespace spg;

TEST_CASE("permutation validation and inverse") {
    REQUIRE_THROWS_AS(Permutation::from_values({1, 1, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(Permutation::from_values({0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Permutation::from_values({2, 3}), std::invalid_argument);

    auto pi = Permutation::from_values(golden::g11_pi);
    auto Pi = pi.inverse();
    REQUIRE(Pi.values() == golden::g11_Pi);
    REQUIRE(Pi.inverse() == pi);
    REQUIRE(Permutation::identity(4).inverse() == Permutation::identity(4));
}

TEST_CASE("reference graph matches the frozen edge set") {
    auto Pi = Permutation::from_values(golden::g11_Pi);
    auto g = build_reference(Pi);
    REQUIRE(g.size() == 11);

    std::set<golden::Edge> expect(golden::g11_edges.begin(), golden::g11_edges.end());
    for (std::uint32_t u = 1; u <= 11; ++u)
        for (std::uint32_t v = u + 1; v <= 11; ++v) {
            bool want = expect.count({u, v}) > 0;
            REQUIRE(g.adjacent(u, v) == want);
            REQUIRE(g.adjacent(v, u) == want);
        }
    REQUIRE(g.edge_count() == golden::g11_edges.size());
    REQUIRE(g.degree(3) == golden::g11_deg3);
    REQUIRE(g.neighbors(4) ==
            std::vector<std::uint32_t>{3, 5, 6, 7, 8, 10, 11});
}

TEST_CASE("inversions equal the edge count") {
    auto Pi = Permutation::from_values(golden::g11_Pi);
    REQUIRE(inversions_count(Pi) == golden::g11_edges.size());

    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        auto p = oracle::random_permutation(1 + rng() % 60, rng);
        REQUIRE(inversions_count(p) == build_reference(p).edge_count());
    }
}

TEST_CASE("bfs distances on the worked instance") {
    auto Pi = Permutation::from_values(golden::g11_Pi);
    auto g = build_reference(Pi);
    auto d5 = g.bfs_all(5);
    REQUIRE(d5[5] == 0);
    REQUIRE(d5[1] == 1);
    REQUIRE(d5[9] == golden::g11_dist_5_9);
    auto d9 = g.bfs_all(9);
    REQUIRE(d9[5] == golden::g11_dist_5_9);

    /* disconnected: identity permutation has no edges */
    auto id = Permutation::identity(5);
    auto empty = build_reference(id);
    auto d1 = empty.bfs_all(1);
    REQUIRE(d1[1] == 0);
    for (std::uint32_t v = 2; v <= 5; ++v) REQUIRE(d1[v] == kInfDist);
}

TEST_CASE("bipartite goldens are consistent") {
    auto p4 = build_reference(Permutation::from_values(golden::p4_Pi));
    std::set<golden::Edge> e4(golden::p4_edges.begin(), golden::p4_edges.end());
    for (std::uint32_t u = 1; u <= 4; ++u)
        for (std::uint32_t v = u + 1; v <= 4; ++v)
            REQUIRE(p4.adjacent(u, v) == (e4.count({u, v}) > 0));
    REQUIRE(oracle::lds_length(golden::p4_Pi) == 2);
    REQUIRE(oracle::has_ham_path(p4));
    REQUIRE_FALSE(oracle::has_ham_cycle(p4));

    auto c4 = build_reference(Permutation::from_values(golden::c4_Pi));
    std::set<golden::Edge> ec(golden::c4_edges.begin(), golden::c4_edges.end());
    for (std::uint32_t u = 1; u <= 4; ++u)
        for (std::uint32_t v = u + 1; v <= 4; ++v)
            REQUIRE(c4.adjacent(u, v) == (ec.count({u, v}) > 0));
    REQUIRE(oracle::has_ham_cycle(c4));
    REQUIRE(c4.bfs_all(1)[2] == golden::c4_dist_1_2);
}
