#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "goldens.hpp"
#include "oracles.hpp"
#include "spg/algos.hpp"

using spg::CliqueColoring;
using spg::Permutation;
using spg::SuccinctPermGraph;
using spg::vertex;

namespace {

/* coloring proper for G, exactly omega colors, best an omega-clique */
void check_clique_coloring(const spg::ReferenceGraph& ref, const CliqueColoring& cc) {
    const std::uint32_t n = ref.size();
    REQUIRE(cc.color.size() == n);
    std::set<std::uint32_t> used;
    for (const std::uint32_t c : cc.color) {
        REQUIRE(c >= 1);
        REQUIRE(c <= cc.omega);
        used.insert(c);
    }
    REQUIRE(used.size() == cc.omega);
    for (vertex u = 1; u <= n; ++u)
        for (vertex v = u + 1; v <= n; ++v)
            if (ref.adjacent(u, v)) REQUIRE(cc.color[u - 1] != cc.color[v - 1]);
    REQUIRE(cc.best.size() == cc.omega);
    REQUIRE(std::is_sorted(cc.best.begin(), cc.best.end()));
    for (std::size_t i = 0; i < cc.best.size(); ++i)
        for (std::size_t j = i + 1; j < cc.best.size(); ++j)
            REQUIRE(ref.adjacent(cc.best[i], cc.best[j]));
}

/* best independent in G, color a partition of G into omega cliques */
void check_mis_cover(const spg::ReferenceGraph& ref, const CliqueColoring& cc) {
    const std::uint32_t n = ref.size();
    REQUIRE(cc.color.size() == n);
    std::set<std::uint32_t> used;
    for (const std::uint32_t c : cc.color) {
        REQUIRE(c >= 1);
        REQUIRE(c <= cc.omega);
        used.insert(c);
    }
    REQUIRE(used.size() == cc.omega);
    for (vertex u = 1; u <= n; ++u)
        for (vertex v = u + 1; v <= n; ++v)
            if (cc.color[u - 1] == cc.color[v - 1]) REQUIRE(ref.adjacent(u, v));
    REQUIRE(cc.best.size() == cc.omega);
    REQUIRE(std::is_sorted(cc.best.begin(), cc.best.end()));
    for (std::size_t i = 0; i < cc.best.size(); ++i)
        for (std::size_t j = i + 1; j < cc.best.size(); ++j)
            REQUIRE_FALSE(ref.adjacent(cc.best[i], cc.best[j]));
}

} // namespace

TEST_CASE("algorithms: worked example", "[algos]") {
    const Permutation Pi = Permutation::from_values(golden::g11_Pi);
    const SuccinctPermGraph g = SuccinctPermGraph::build(Pi);
    const spg::ReferenceGraph ref = spg::build_reference(Pi);

    SECTION("maximum clique and minimum coloring") {
        const CliqueColoring cc = spg::max_clique_min_coloring(g);
        REQUIRE(cc.omega == 4);
        REQUIRE(cc.omega == oracle::max_clique_size(ref));
        check_clique_coloring(ref, cc);
    }

    SECTION("maximum independent set and minimum clique cover") {
        const CliqueColoring mis = spg::max_independent_set_min_clique_cover(g);
        REQUIRE(mis.omega == oracle::max_independent_size(ref));
        check_mis_cover(ref, mis);
    }

    SECTION("batch distances") {
        REQUIRE(spg::apsp(g, {{5, 9}, {1, 2}}) == std::vector<std::uint32_t>{3, 1});
        REQUIRE(spg::apsp(g, {{7, 7}}) == std::vector<std::uint32_t>{0});
        REQUIRE_THROWS_AS(spg::apsp(g, {{0, 1}}), std::out_of_range);
        REQUIRE_THROWS_AS(spg::apsp(g, {{1, 12}}), std::out_of_range);
    }

    SECTION("batch shortest paths") {
        const auto rs = spg::spath_pairs(g, {{5, 9}, {1, 2}, {4, 4}});
        REQUIRE(rs.size() == 3);
        REQUIRE(rs[0].reachable);
        REQUIRE(oracle::path_is_valid(ref, rs[0].path, 5, 9, 3));
        REQUIRE(rs[1].reachable);
        REQUIRE(rs[1].path == std::vector<vertex>{1, 2});
        REQUIRE(rs[2].reachable);
        REQUIRE(rs[2].path == std::vector<vertex>{4});
    }
}

TEST_CASE("algorithms: complete and edgeless graphs", "[algos]") {
    SECTION("complete graph") {
        const std::uint32_t n = 9;
        std::vector<std::uint32_t> rows(n);
        for (std::uint32_t i = 0; i < n; ++i) rows[i] = n - i;
        const Permutation Pi = Permutation::from_values(rows);
        const SuccinctPermGraph g = SuccinctPermGraph::build(Pi);
        const spg::ReferenceGraph ref = spg::build_reference(Pi);

        const CliqueColoring cc = spg::max_clique_min_coloring(g);
        REQUIRE(cc.omega == n);
        for (vertex v = 1; v <= n; ++v) REQUIRE(cc.color[v - 1] == v);
        check_clique_coloring(ref, cc);

        const CliqueColoring mis = spg::max_independent_set_min_clique_cover(g);
        REQUIRE(mis.omega == 1);
        REQUIRE(mis.best == std::vector<vertex>{1});
        for (vertex v = 1; v <= n; ++v) REQUIRE(mis.color[v - 1] == 1);
    }

    SECTION("edgeless graph") {
        const std::uint32_t n = 7;
        const Permutation Pi = Permutation::identity(n);
        const SuccinctPermGraph g = SuccinctPermGraph::build(Pi);
        const spg::ReferenceGraph ref = spg::build_reference(Pi);

        const CliqueColoring cc = spg::max_clique_min_coloring(g);
        REQUIRE(cc.omega == 1);
        for (vertex v = 1; v <= n; ++v) REQUIRE(cc.color[v - 1] == 1);
        REQUIRE(cc.best == std::vector<vertex>{1});

        const CliqueColoring mis = spg::max_independent_set_min_clique_cover(g);
        REQUIRE(mis.omega == n);
        for (vertex v = 1; v <= n; ++v) REQUIRE(mis.best[v - 1] == v);
        check_mis_cover(ref, mis);
    }
}

TEST_CASE("algorithms: backtrace is deterministic", "[algos]") {
    /* both in-neighbors of vertex 4 extend a length-1 path; the smaller id
     * must win the tie */
    const SuccinctPermGraph g =
        SuccinctPermGraph::build(Permutation::from_values({3, 1, 4, 2}));
    const CliqueColoring cc = spg::max_clique_min_coloring(g);
    REQUIRE(cc.omega == 2);
    REQUIRE(cc.best == std::vector<vertex>{1, 2});
}

TEST_CASE("algorithms: random instances match exhaustive search", "[algos]") {
    std::mt19937_64 rng(50923);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 12);
        const Permutation Pi = oracle::random_permutation(n, rng);
        const SuccinctPermGraph g = SuccinctPermGraph::build(Pi);
        const spg::ReferenceGraph ref = spg::build_reference(Pi);

        const CliqueColoring cc = spg::max_clique_min_coloring(g);
        if (cc.omega != oracle::max_clique_size(ref)) FAIL("clique size mismatch, n=" << n);
        check_clique_coloring(ref, cc);

        const CliqueColoring mis = spg::max_independent_set_min_clique_cover(g);
        if (mis.omega != oracle::max_independent_size(ref))
            FAIL("independent set size mismatch, n=" << n);
        check_mis_cover(ref, mis);
    }
}

TEST_CASE("algorithms: batch distances match breadth-first search", "[algos]") {
    std::mt19937_64 rng(77001);

    SECTION("identity permutation is all-unreachable") {
        const std::uint32_t n = 6;
        const SuccinctPermGraph g = SuccinctPermGraph::build(Permutation::identity(n));
        const auto all = spg::apsp(g);
        REQUIRE(all.size() == static_cast<std::size_t>(n) * n);
        for (vertex u = 1; u <= n; ++u)
            for (vertex v = 1; v <= n; ++v)
                REQUIRE(all[(u - 1) * n + (v - 1)] ==
                        (u == v ? 0 : spg::kInfDist));
    }

    SECTION("full matrix and pair list vs reference") {
        for (const std::uint32_t n : {1u, 2u, 17u, 60u, 200u}) {
            const Permutation Pi = oracle::random_permutation(n, rng);
            const SuccinctPermGraph g = SuccinctPermGraph::build(Pi);
            const spg::ReferenceGraph ref = spg::build_reference(Pi);
            const auto all = spg::apsp(g);
            REQUIRE(all.size() == static_cast<std::size_t>(n) * n);
            std::vector<std::pair<vertex, vertex>> pairs;
            for (vertex u = 1; u <= n; ++u) {
                const auto row = ref.bfs_all(u);
                for (vertex v = 1; v <= n; ++v) {
                    if (all[static_cast<std::size_t>(u - 1) * n + (v - 1)] != row[v])
                        FAIL("distance mismatch at (" << u << "," << v << "), n=" << n);
                }
                pairs.emplace_back(u, 1 + static_cast<vertex>(rng() % n));
            }
            const auto some = spg::apsp(g, pairs);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                REQUIRE(some[i] ==
                        all[static_cast<std::size_t>(pairs[i].first - 1) * n +
                            (pairs[i].second - 1)]);
        }
    }
}

TEST_CASE("algorithms: batch paths are valid and minimal", "[algos]") {
    std::mt19937_64 rng(31337);
    for (const std::uint32_t n : {2u, 40u, 120u}) {
        const Permutation Pi = oracle::random_permutation(n, rng);
        const SuccinctPermGraph g = SuccinctPermGraph::build(Pi);
        const spg::ReferenceGraph ref = spg::build_reference(Pi);
        std::vector<std::pair<vertex, vertex>> pairs;
        for (int i = 0; i < 50; ++i)
            pairs.emplace_back(1 + static_cast<vertex>(rng() % n),
                               1 + static_cast<vertex>(rng() % n));
        const auto rs = spg::spath_pairs(g, pairs);
        REQUIRE(rs.size() == pairs.size());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const auto [u, v] = pairs[i];
            const std::uint32_t d = ref.bfs_all(u)[v];
            REQUIRE(rs[i].from == u);
            REQUIRE(rs[i].to == v);
            if (d == spg::kInfDist) {
                REQUIRE_FALSE(rs[i].reachable);
                REQUIRE(rs[i].path.empty());
            } else {
                REQUIRE(rs[i].reachable);
                REQUIRE(oracle::path_is_valid(ref, rs[i].path, u, v, d));
            }
        }
    }
}
