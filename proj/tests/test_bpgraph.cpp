#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "spg/bpgraph.hpp"
#include "spg/pgraph.hpp"

using namespace spg;

namespace {

/* Random rows made of two shuffled increasing subsequences. */
Permutation random_bipartite(std::uint32_t n, std::mt19937_64& rng) {
    const std::uint32_t kk = std::uniform_int_distribution<std::uint32_t>(0, n)(rng);
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 1u);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<bool> pos_a(n + 1, false), row_a(n + 1, false);
    for (std::uint32_t i = 0; i < kk; ++i) pos_a[idx[i]] = true;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::uint32_t i = 0; i < kk; ++i) row_a[idx[i]] = true;
    std::vector<std::uint32_t> arows, brows;
    for (std::uint32_t r = 1; r <= n; ++r) (row_a[r] ? arows : brows).push_back(r);
    std::vector<std::uint32_t> rows(n);
    std::size_t ia = 0, ib = 0;
    for (std::uint32_t p = 1; p <= n; ++p) rows[p - 1] = pos_a[p] ? arows[ia++] : brows[ib++];
    return Permutation::from_values(std::move(rows));
}

void check_sequence_is_path(const ReferenceGraph& ref, const std::vector<vertex>& p,
                            bool cycle) {
    REQUIRE(p.size() == ref.size());
    std::vector<vertex> s = p;
    std::sort(s.begin(), s.end());
    for (vertex v = 1; v <= ref.size(); ++v) REQUIRE(s[v - 1] == v);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) REQUIRE(ref.adjacent(p[i], p[i + 1]));
    if (cycle) REQUIRE(ref.adjacent(p.back(), p.front()));
}

} // namespace

TEST_CASE("bipartite graph worked examples") {
    SECTION("path on four vertices") {
        auto Pi = Permutation::from_values({3, 1, 4, 2});
        for (bool oracles : {false, true}) {
            auto g = BipartitePermGraph::build(Pi, oracles);
            REQUIRE(g.size() == 4);
            REQUIRE(g.isolated_count() == 0);
            REQUIRE(g.has_oracles() == oracles);
            REQUIRE(g.is_a(1));
            REQUIRE_FALSE(g.is_a(2));
            REQUIRE(g.is_a(3));
            REQUIRE_FALSE(g.is_a(4));
            REQUIRE(g.pi_inv(1) == 3);
            for (vertex v = 1; v <= 4; ++v) REQUIRE(g.pi_inv(v) == Pi.at(v));

            REQUIRE(g.adjacent(1, 2));
            REQUIRE(g.adjacent(1, 4));
            REQUIRE(g.adjacent(3, 4));
            REQUIRE_FALSE(g.adjacent(1, 3));
            REQUIRE_FALSE(g.adjacent(2, 3));
            REQUIRE_FALSE(g.adjacent(2, 4));
            REQUIRE_FALSE(g.adjacent(2, 2));

            REQUIRE(g.neighbors(1) == std::vector<vertex>{2, 4});
            REQUIRE(g.degree(1) == 2);
            REQUIRE(g.degree(2) == 1);

            /* path 2-1-4-3 */
            REQUIRE(g.distance(2, 3) == 3);
            REQUIRE(g.distance(3, 2) == 3);
            REQUIRE(g.spath_first(2, 3) == 1);
            REQUIRE(g.spath(2, 3) == std::vector<vertex>{2, 1, 4, 3});

            auto hp = g.hamiltonian_path();
            REQUIRE(hp.has_value());
            REQUIRE(*hp == std::vector<vertex>{2, 1, 4, 3});
            REQUIRE_FALSE(g.hamiltonian_cycle().has_value());
        }
    }
    SECTION("four-cycle") {
        auto Pi = Permutation::from_values({3, 4, 1, 2});
        for (bool oracles : {false, true}) {
            auto g = BipartitePermGraph::build(Pi, oracles);
            REQUIRE(g.pi_inv(4) == 2);
            REQUIRE(g.distance(1, 2) == 2);
            REQUIRE(g.distance(3, 4) == 2);
            auto ref = build_reference(Pi);
            auto hp = g.hamiltonian_path();
            REQUIRE(hp.has_value());
            check_sequence_is_path(ref, *hp, false);
            auto hc = g.hamiltonian_cycle();
            REQUIRE(hc.has_value());
            REQUIRE(*hc == std::vector<vertex>{1, 3, 2, 4});
            check_sequence_is_path(ref, *hc, true);
        }
    }
    SECTION("identity: all isolated") {
        auto g = BipartitePermGraph::build(Permutation::identity(5));
        REQUIRE(g.isolated_count() == 5);
        for (vertex v = 1; v <= 5; ++v) {
            REQUIRE(g.isolated(v));
            REQUIRE(g.degree(v) == 0);
            REQUIRE(g.neighbors(v).empty());
            REQUIRE(g.pi_inv(v) == v);
        }
        REQUIRE(g.distance(1, 2) == kInfDist);
        REQUIRE_THROWS_AS(g.spath_first(1, 2), std::invalid_argument);
        REQUIRE_FALSE(g.hamiltonian_path().has_value());
        REQUIRE_FALSE(g.hamiltonian_cycle().has_value());
    }
    SECTION("single vertex") {
        auto g = BipartitePermGraph::build(Permutation::identity(1));
        REQUIRE(g.hamiltonian_path() == std::vector<vertex>{1});
        REQUIRE_FALSE(g.hamiltonian_cycle().has_value());
        REQUIRE(g.distance(1, 1) == 0);
    }
}

TEST_CASE("bipartite build validation and relabeling") {
    /* a triangle is not bipartite */
    REQUIRE_THROWS_AS(BipartitePermGraph::build(Permutation::from_values({3, 2, 1})),
                      std::invalid_argument);
    /* isolated vertex at the bottom id is rejected, relabeling repairs it */
    auto Pi = Permutation::from_values({1, 3, 2});
    REQUIRE_THROWS_AS(BipartitePermGraph::build(Pi), std::invalid_argument);
    auto rel = relabel_for_bpg(Pi);
    REQUIRE(rel.to_new == std::vector<vertex>{0, 3, 1, 2});
    REQUIRE(rel.pi_inverse.values() == std::vector<std::uint32_t>{2, 1, 3});
    auto g = BipartitePermGraph::build(rel.pi_inverse);
    REQUIRE(g.isolated_count() == 1);
    REQUIRE(g.adjacent(1, 2));
    /* relabeling is an isomorphism */
    auto ref_old = build_reference(Pi);
    auto ref_new = build_reference(rel.pi_inverse);
    for (vertex u = 1; u <= 3; ++u)
        for (vertex v = u + 1; v <= 3; ++v)
            REQUIRE(ref_old.adjacent(u, v) ==
                    ref_new.adjacent(rel.to_new[u], rel.to_new[v]));
    /* canonical inputs relabel to themselves */
    auto rel2 = relabel_for_bpg(rel.pi_inverse);
    REQUIRE(rel2.pi_inverse.values() == rel.pi_inverse.values());
    REQUIRE(rel2.to_new == std::vector<vertex>{0, 1, 2, 3});
}

TEST_CASE("bipartite graph matches the reference") {
    std::mt19937_64 rng(0x6d14aa07ULL);
    for (std::uint32_t i = 0; i < 150; ++i) {
        const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(1, 120)(rng);
        auto rel = relabel_for_bpg(random_bipartite(n, rng));
        const auto& Pi = rel.pi_inverse;
        auto ref = build_reference(Pi);
        auto ga = BipartitePermGraph::build(Pi, false);
        auto gb = BipartitePermGraph::build(Pi, true);
        for (vertex v = 1; v <= n; ++v) {
            if (ga.pi_inv(v) != Pi.at(v)) FAIL("row decode mismatch at instance " << i);
            if (ga.degree(v) != ref.degree(v))
                FAIL("degree mismatch: instance " << i << " v=" << v << " got " << ga.degree(v)
                                                  << " want " << ref.degree(v));
            if (ga.neighbors(v) != ref.neighbors(v))
                FAIL("neighbors mismatch: instance " << i << " v=" << v);
            if (ga.isolated(v) != (ref.degree(v) == 0))
                FAIL("isolated flag mismatch: instance " << i << " v=" << v);
        }
        for (vertex u = 1; u <= n; ++u) {
            auto d_ref = ref.bfs_all(u);
            for (vertex v = 1; v <= n; ++v) {
                if (ga.adjacent(u, v) != ref.adjacent(u, v))
                    FAIL("adjacency mismatch: instance " << i << " (" << u << "," << v << ")");
                const auto dwalk = ga.distance(u, v);
                const auto dcasc = gb.distance(u, v);
                if (dwalk != d_ref[v])
                    FAIL("walk distance mismatch: instance " << i << " (" << u << "," << v
                                                             << ") got " << dwalk << " want "
                                                             << d_ref[v]);
                if (dcasc != d_ref[v])
                    FAIL("oracle distance mismatch: instance " << i << " (" << u << "," << v
                                                               << ") got " << dcasc << " want "
                                                               << d_ref[v]);
                if (u != v && d_ref[v] != kInfDist) {
                    const vertex h = ga.spath_first(u, v);
                    if (!ref.adjacent(u, h) || ga.distance(h, v) != d_ref[v] - 1)
                        FAIL("hop mismatch: instance " << i << " (" << u << "," << v << ")");
                }
            }
        }
        std::uniform_int_distribution<std::uint32_t> pick(1, n);
        for (int t = 0; t < 8 && n >= 2; ++t) {
            const vertex u = pick(rng), v = pick(rng);
            if (u == v) continue;
            const auto d = gb.distance(u, v);
            if (d == kInfDist) continue;
            if (!oracle::path_is_valid(ref, ga.spath(u, v), u, v, d))
                FAIL("spath invalid: instance " << i << " (" << u << "," << v << ")");
        }
    }
    SUCCEED("150 instances, both variants agree with BFS");
}

TEST_CASE("the id order is a strong ordering") {
    std::mt19937_64 rng(0x53c2b871ULL);
    std::uint64_t checked = 0;
    for (std::uint32_t i = 0; i < 200; ++i) {
        const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(2, 100)(rng);
        auto rel = relabel_for_bpg(random_bipartite(n, rng));
        const auto& Pi = rel.pi_inverse;
        auto g = BipartitePermGraph::build(Pi);
        /* edges as (A-endpoint, B-endpoint) */
        std::vector<std::pair<vertex, vertex>> edges;
        std::vector<std::uint32_t> rows(n + 1);
        for (vertex v = 1; v <= n; ++v) rows[v] = Pi.at(v);
        for (vertex u = 1; u <= n; ++u)
            for (vertex v = u + 1; v <= n; ++v)
                if (rows[u] > rows[v]) edges.push_back(g.is_a(u) ? std::pair{u, v}
                                                                 : std::pair{v, u});
        const auto adj = [&](vertex x, vertex y) {
            if (x > y) std::swap(x, y);
            return rows[x] > rows[y];
        };
        for (std::size_t p = 0; p < edges.size(); ++p)
            for (std::size_t q = p + 1; q < edges.size(); ++q) {
                auto [a1, b1] = edges[p];
                auto [a2, b2] = edges[q];
                if (a1 == a2 || b1 == b2) continue;
                if (a1 > a2) {
                    std::swap(a1, a2);
                    std::swap(b1, b2);
                }
                if (b1 > b2) { /* crossing pair: both swapped edges must exist */
                    if (!adj(a1, b2) || !adj(a2, b1))
                        FAIL("strong ordering violated: instance "
                             << i << " edges (" << a1 << "," << b1 << "),(" << a2 << "," << b2
                             << ")");
                    ++checked;
                }
            }
    }
    REQUIRE(checked > 10000);
}

TEST_CASE("hamiltonian search agrees with exhaustive enumeration") {
    std::uint64_t graphs = 0, with_path = 0, with_cycle = 0;
    for (std::uint32_t n = 1; n <= 8; ++n) {
        std::vector<std::uint32_t> rows(n);
        std::iota(rows.begin(), rows.end(), 1u);
        do {
            if (oracle::lds_length(rows) > 2) continue;
            /* relabeling is an isomorphism, so Hamiltonicity is preserved */
            auto rel = relabel_for_bpg(Permutation::from_values(rows));
            const auto& Pi = rel.pi_inverse;
            auto g = BipartitePermGraph::build(Pi);
            auto ref = build_reference(Pi);
            ++graphs;

            auto hp = g.hamiltonian_path();
            if (hp.has_value() != oracle::has_ham_path(ref))
                FAIL("path existence mismatch at n=" << n << " graph " << graphs);
            if (hp) {
                check_sequence_is_path(ref, *hp, false);
                ++with_path;
            }
            auto hc = g.hamiltonian_cycle();
            const bool want_cycle = n >= 3 && oracle::has_ham_cycle(ref);
            if (hc.has_value() != want_cycle)
                FAIL("cycle existence mismatch at n=" << n << " graph " << graphs);
            if (hc) {
                check_sequence_is_path(ref, *hc, true);
                ++with_cycle;
            }
        } while (std::next_permutation(rows.begin(), rows.end()));
    }
    INFO("graphs=" << graphs << " with_path=" << with_path << " with_cycle=" << with_cycle);
    REQUIRE(graphs > 2000);
    REQUIRE(with_path > 100);
    REQUIRE(with_cycle > 10);
}

TEST_CASE("bipartite serialization round-trip") {
    std::mt19937_64 rng(0xfe3d0211ULL);
    auto rel = relabel_for_bpg(random_bipartite(90, rng));
    for (bool oracles : {false, true}) {
        auto g = BipartitePermGraph::build(rel.pi_inverse, oracles);
        std::ostringstream os;
        g.serialize(os);
        const std::string bytes = os.str();
        std::istringstream is(bytes);
        auto h = BipartitePermGraph::load(is);
        REQUIRE(h.size() == g.size());
        REQUIRE(h.isolated_count() == g.isolated_count());
        REQUIRE(h.has_oracles() == oracles);
        std::ostringstream os2;
        h.serialize(os2);
        REQUIRE(os2.str() == bytes);
        for (vertex u = 1; u <= 90; u += 3)
            for (vertex v = 1; v <= 90; v += 5) {
                REQUIRE(h.adjacent(u, v) == g.adjacent(u, v));
                REQUIRE(h.distance(u, v) == g.distance(u, v));
            }
        std::string bad = bytes;
        bad[0] = 'X';
        std::istringstream ib(bad);
        REQUIRE_THROWS(BipartitePermGraph::load(ib));
    }
}

TEST_CASE("bipartite space budget") {
    std::mt19937_64 rng(0x0ddba11ULL);
    const std::uint32_t n = 1u << 16;
    auto rel = relabel_for_bpg(random_bipartite(n, rng));
    auto ga = BipartitePermGraph::build(rel.pi_inverse, false);
    const auto sa = ga.report_bits();
    INFO("payload=" << sa.payload << " directories=" << sa.directories
                    << " oracles=" << sa.oracles);
    REQUIRE(sa.payload == 2ull * n);
    REQUIRE(sa.directories <= n / 2);
    REQUIRE(sa.oracles == 0);

    auto gb = BipartitePermGraph::build(rel.pi_inverse, true);
    const auto sb = gb.report_bits();
    INFO("oracle variant total=" << sb.total());
    REQUIRE(sb.total() <= 10ull * n);

    /* smoke queries at scale */
    REQUIRE(ga.distance(1, n) == gb.distance(1, n));
    const vertex v = n / 2;
    REQUIRE(ga.degree(v) == gb.degree(v));
    REQUIRE(ga.neighbors(v) == gb.neighbors(v));
}
