#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "goldens.hpp"
#include "oracles.hpp"
#include "spg/pgraph.hpp"

using namespace spg;

namespace {

std::optional<vertex> opt_of(std::uint32_t raw) {
    return raw == 0 ? std::nullopt : std::optional<vertex>(raw);
}

void fail_ctx(const char* what, std::uint64_t inst, vertex u, vertex v, std::uint64_t got,
              std::uint64_t want) {
    std::ostringstream os;
    os << what << " mismatch (instance " << inst << ", u=" << u << ", v=" << v << "): got " << got
       << " want " << want;
    FAIL(os.str());
}

/* Drain the stateless cursor and check the stream against the neighbor set. */
void check_cursor(const SuccinctPermGraph& g, const ReferenceGraph& ref, vertex u,
                  std::uint64_t inst) {
    std::vector<vertex> seen;
    auto w = g.next_neighbor(u);
    while (w) {
        seen.push_back(*w);
        w = g.next_neighbor(u, *w);
    }
    auto want = ref.neighbors(u);
    auto sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail_ctx("cursor duplicate", inst, u, 0, seen.size(), want.size());
    if (sorted != want) fail_ctx("cursor set", inst, u, 0, seen.size(), want.size());
    /* smaller side first */
    bool in_plus = false;
    for (vertex x : seen) {
        if (x > u) in_plus = true;
        if (x < u && in_plus) fail_ctx("cursor phase order", inst, u, x, 0, 0);
    }
}

void check_against_reference(const SuccinctPermGraph& g, const Permutation& Pi,
                             std::uint64_t inst, std::mt19937_64& rng) {
    const std::uint32_t n = Pi.size();
    auto ref = build_reference(Pi);
    std::vector<bool> in_a(n + 1, false);
    std::uint32_t best = 0;
    for (vertex v = 1; v <= n; ++v)
        if (Pi.at(v) > best) {
            best = Pi.at(v);
            in_a[v] = true;
        }

    for (vertex v = 1; v <= n; ++v) {
        if (g.degree(v) != ref.degree(v)) fail_ctx("degree", inst, v, 0, g.degree(v), ref.degree(v));
        auto nm = g.neighbors_minus(v);
        auto np = g.neighbors_plus(v);
        auto all = nm;
        all.insert(all.end(), np.begin(), np.end());
        if (all != ref.neighbors(v)) fail_ctx("neighbor split", inst, v, 0, all.size(), 0);
        for (vertex x : nm)
            if (x >= v) fail_ctx("minus side", inst, v, x, x, v);
        for (vertex x : np)
            if (x <= v) fail_ctx("plus side", inst, v, x, x, v);
        auto nc = g.neighbors_minus_complement(v);
        if (nc.size() + nm.size() != static_cast<std::size_t>(v) - 1)
            fail_ctx("complement partition", inst, v, 0, nc.size() + nm.size(), v - 1);
        for (vertex x : nc)
            if (ref.adjacent(x, v)) fail_ctx("complement member", inst, v, x, 1, 0);
        check_cursor(g, ref, v, inst);

        /* extremal contract against the class sets */
        auto ex = g.extremal(v);
        if (in_a[v]) {
            if (!ex.a_plus || *ex.a_plus != v) fail_ctx("a_plus fixpoint", inst, v, 0, 0, v);
        } else if (!g.isolated(v)) {
            std::uint32_t lo = 0, hi = 0;
            for (vertex a = 1; a < v; ++a)
                if (in_a[a] && ref.adjacent(a, v)) {
                    if (!lo) lo = a;
                    hi = a;
                }
            if (hi) {
                if (!ex.a_plus || *ex.a_plus != hi) fail_ctx("a_plus", inst, v, 0, 0, hi);
                if (!ex.a_minus || *ex.a_minus != lo) fail_ctx("a_minus", inst, v, 0, 0, lo);
            }
        }
    }

    std::uniform_int_distribution<std::uint32_t> pick(1, n);
    for (vertex u = 1; u <= n; ++u) {
        auto d_ref = ref.bfs_all(u);
        for (vertex v = 1; v <= n; ++v) {
            if (g.adjacent(u, v) != ref.adjacent(u, v))
                fail_ctx("adjacent", inst, u, v, g.adjacent(u, v), ref.adjacent(u, v));
            const std::uint32_t d = g.distance(u, v);
            if (d != d_ref[v]) fail_ctx("distance", inst, u, v, d, d_ref[v]);
            if (u != v && d != kInfDist) {
                const vertex w = g.spath_first(u, v);
                if (!ref.adjacent(u, w)) fail_ctx("first hop adjacency", inst, u, v, w, 0);
                if (g.distance(w, v) != d - 1)
                    fail_ctx("first hop progress", inst, u, v, g.distance(w, v), d - 1);
            }
        }
        /* a few full paths per source */
        for (int k = 0; k < 3 && n >= 2; ++k) {
            const vertex v = pick(rng);
            if (v == u || d_ref[v] == kInfDist) continue;
            auto p = g.spath(u, v);
            if (!oracle::path_is_valid(ref, p, u, v, d_ref[v]))
                fail_ctx("spath validity", inst, u, v, p.size(), d_ref[v] + 1);
        }
    }
}

} // namespace

TEST_CASE("succinct graph on the worked instance") {
    auto Pi = Permutation::from_values(golden::g11_Pi);
    for (auto backend : {PgBackend::array, PgBackend::grid}) {
        auto g = SuccinctPermGraph::build(Pi, backend);
        REQUIRE(g.size() == 11);
        REQUIRE(g.backend() == backend);
        for (vertex v = 1; v <= 11; ++v) {
            REQUIRE(g.pi_inverse_at(v) == golden::g11_Pi[v - 1]);
            REQUIRE_FALSE(g.isolated(v));
        }

        /* adjacency matches the frozen edge list */
        std::set<std::pair<vertex, vertex>> edges(golden::g11_edges.begin(),
                                                  golden::g11_edges.end());
        std::uint32_t m = 0;
        for (vertex u = 1; u <= 11; ++u)
            for (vertex v = u + 1; v <= 11; ++v) {
                const bool want = edges.count({u, v}) > 0;
                REQUIRE(g.adjacent(u, v) == want);
                REQUIRE(g.adjacent(v, u) == want);
                m += want;
            }
        REQUIRE(m == golden::g11_edges.size());
        REQUIRE(g.adjacent(1, 2));
        REQUIRE_FALSE(g.adjacent(1, 3));

        /* class membership: a_plus is a fixpoint exactly on A */
        std::vector<vertex> a_set, b_set;
        for (vertex v = 1; v <= 11; ++v) {
            auto ex = g.extremal(v);
            if (ex.a_plus && *ex.a_plus == v) a_set.push_back(v);
            if (ex.b_minus && *ex.b_minus == v) b_set.push_back(v);
        }
        REQUIRE(a_set == golden::g11_A);
        REQUIRE(b_set == golden::g11_B);

        /* frozen extremal table (0 encodes "none") */
        for (const auto& row : golden::g11_extremal) {
            auto ex = g.extremal(row.v);
            REQUIRE(ex.a_minus == opt_of(row.a_minus));
            REQUIRE(ex.a_plus == opt_of(row.a_plus));
            REQUIRE(ex.b_minus == opt_of(row.b_minus));
            REQUIRE(ex.b_plus == opt_of(row.b_plus));
        }

        REQUIRE(g.degree(3) == golden::g11_deg3);
        REQUIRE(g.neighbors_minus(5) == golden::g11_nminus5);
        REQUIRE(g.neighbors_plus(3) == golden::g11_nplus3);
        REQUIRE(g.neighbors_minus(1).empty());
        REQUIRE(g.neighbors_minus_complement(3) == golden::g11_nminus_comp3);
        REQUIRE(g.neighbors_minus_complement(1).empty());

        /* the three-hop pair and its witness */
        REQUIRE(g.distance(5, 9) == golden::g11_dist_5_9);
        REQUIRE(g.distance(9, 5) == golden::g11_dist_5_9);
        REQUIRE(g.spath_first(5, 9) == golden::g11_first_5_9);
        auto ref = build_reference(Pi);
        auto p = g.spath(5, 9);
        REQUIRE(oracle::path_is_valid(ref, p, 5, 9, golden::g11_dist_5_9));
        auto pr = g.spath(9, 5);
        std::reverse(pr.begin(), pr.end());
        REQUIRE(oracle::path_is_valid(ref, pr, 5, 9, golden::g11_dist_5_9));
        REQUIRE(g.distance(4, 4) == 0);
        REQUIRE(g.spath(4, 4) == std::vector<vertex>{4});

        /* errors */
        REQUIRE_THROWS_AS(g.distance(0, 3), std::out_of_range);
        REQUIRE_THROWS_AS(g.degree(12), std::out_of_range);
        REQUIRE_THROWS_AS(g.spath_first(4, 4), std::invalid_argument);
        REQUIRE_THROWS_AS(g.next_neighbor(3, 9), std::invalid_argument);
    }
}

TEST_CASE("succinct graph trivial families") {
    SECTION("identity: empty graph, everything isolated") {
        auto g = SuccinctPermGraph::build(Permutation::identity(6));
        for (vertex v = 1; v <= 6; ++v) {
            REQUIRE(g.isolated(v));
            REQUIRE(g.degree(v) == 0);
            REQUIRE(g.neighbors_minus(v).empty());
            REQUIRE(g.neighbors_plus(v).empty());
            REQUIRE_FALSE(g.next_neighbor(v).has_value());
            auto ex = g.extremal(v);
            REQUIRE(ex.a_plus == v);
            REQUIRE(ex.b_minus == v);
        }
        REQUIRE(g.distance(1, 2) == kInfDist);
        REQUIRE(g.distance(3, 3) == 0);
        REQUIRE_THROWS_AS(g.spath(1, 2), std::invalid_argument);
        REQUIRE(g.neighbors_minus_complement(6) == std::vector<vertex>{1, 2, 3, 4, 5});
    }
    SECTION("reverse: complete graph") {
        std::vector<std::uint32_t> rev{7, 6, 5, 4, 3, 2, 1};
        auto g = SuccinctPermGraph::build(Permutation::from_values(rev));
        auto ex1 = g.extremal(1);
        REQUIRE(ex1.a_plus == 1);
        auto exn = g.extremal(7);
        REQUIRE(exn.b_minus == 7);
        for (vertex v = 1; v <= 7; ++v) {
            REQUIRE(g.degree(v) == 6);
            REQUIRE_FALSE(g.isolated(v));
            for (vertex u = 1; u <= 7; ++u)
                if (u != v) REQUIRE(g.distance(u, v) == 1);
        }
        /* only vertex 1 is a prefix maximum, only n a suffix minimum */
        for (vertex v = 2; v <= 7; ++v) {
            REQUIRE(g.extremal(v).a_plus == 1);
            REQUIRE(g.extremal(8 - v).b_minus == 7);
        }
    }
    SECTION("single vertex") {
        auto g = SuccinctPermGraph::build(Permutation::identity(1));
        REQUIRE(g.isolated(1));
        REQUIRE(g.distance(1, 1) == 0);
        REQUIRE(g.spath(1, 1) == std::vector<vertex>{1});
        auto rt = [&](const SuccinctPermGraph& x) {
            std::ostringstream os;
            x.serialize(os);
            return os.str();
        };
        auto bytes = rt(g);
        std::istringstream is(bytes);
        auto h = SuccinctPermGraph::load(is);
        REQUIRE(rt(h) == bytes);
    }
}

TEST_CASE("succinct graph equals the reference on random permutations") {
    std::mt19937_64 rng(0x41f8a3e2ULL);
    std::uint64_t done = 0;
    for (std::uint32_t i = 0; i < 200; ++i) {
        const std::uint32_t n = i == 0   ? 1
                                : i == 1 ? 2
                                : i % 4 == 3
                                    ? std::uniform_int_distribution<std::uint32_t>(101, 200)(rng)
                                    : std::uniform_int_distribution<std::uint32_t>(3, 100)(rng);
        auto Pi = oracle::random_permutation(n, rng);
        auto g = SuccinctPermGraph::build(Pi, PgBackend::array);
        check_against_reference(g, Pi, i, rng);
        ++done;
    }
    REQUIRE(done == 200);
}

TEST_CASE("array and grid backends agree") {
    std::mt19937_64 rng(0x77131cb5ULL);
    for (std::uint32_t i = 0; i < 30; ++i) {
        const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(1, 120)(rng);
        auto Pi = oracle::random_permutation(n, rng);
        auto ga = SuccinctPermGraph::build(Pi, PgBackend::array);
        auto gg = SuccinctPermGraph::build(Pi, PgBackend::grid);
        for (vertex v = 1; v <= n; ++v) {
            if (gg.pi_inverse_at(v) != ga.pi_inverse_at(v))
                fail_ctx("backend rows", i, v, 0, gg.pi_inverse_at(v), ga.pi_inverse_at(v));
            if (ga.degree(v) != gg.degree(v))
                fail_ctx("backend degree", i, v, 0, ga.degree(v), gg.degree(v));
            if (ga.neighbors_minus(v) != gg.neighbors_minus(v))
                fail_ctx("backend minus", i, v, 0, 0, 0);
            if (ga.neighbors_plus(v) != gg.neighbors_plus(v))
                fail_ctx("backend plus", i, v, 0, 0, 0);
            if (ga.neighbors_minus_complement(v) != gg.neighbors_minus_complement(v))
                fail_ctx("backend complement", i, v, 0, 0, 0);
            auto ea = ga.extremal(v), eg = gg.extremal(v);
            if (ea.a_minus != eg.a_minus || ea.a_plus != eg.a_plus || ea.b_minus != eg.b_minus ||
                ea.b_plus != eg.b_plus)
                fail_ctx("backend extremal", i, v, 0, 0, 0);
        }
        for (vertex u = 1; u <= n; ++u)
            for (vertex v = 1; v <= n; ++v) {
                const auto d = ga.distance(u, v);
                if (d != gg.distance(u, v)) fail_ctx("backend distance", i, u, v, d, gg.distance(u, v));
                if (u != v && d != kInfDist && ga.spath(u, v) != gg.spath(u, v))
                    fail_ctx("backend spath", i, u, v, d, 0);
            }
    }
    SUCCEED("30 permutations, both backends identical");
}

TEST_CASE("succinct graph serialization round-trip") {
    std::mt19937_64 rng(0xc3a91d77ULL);
    for (auto backend : {PgBackend::array, PgBackend::grid}) {
        auto Pi = oracle::random_permutation(97, rng);
        auto g = SuccinctPermGraph::build(Pi, backend);
        std::ostringstream os;
        g.serialize(os);
        const std::string bytes = os.str();
        std::istringstream is(bytes);
        auto h = SuccinctPermGraph::load(is);
        REQUIRE(h.size() == g.size());
        REQUIRE(h.backend() == backend);
        std::ostringstream os2;
        h.serialize(os2);
        REQUIRE(os2.str() == bytes);
        for (vertex u = 1; u <= 97; ++u) {
            REQUIRE(h.pi_inverse_at(u) == g.pi_inverse_at(u));
            REQUIRE(h.degree(u) == g.degree(u));
            for (vertex v = 1; v <= 97; v += 7) REQUIRE(h.distance(u, v) == g.distance(u, v));
        }
        /* corrupted magic is rejected */
        std::string bad = bytes;
        bad[0] = 'X';
        std::istringstream ib(bad);
        REQUIRE_THROWS(SuccinctPermGraph::load(ib));
    }
}

TEST_CASE("succinct graph space budget") {
    std::mt19937_64 rng(0x5ab3c001ULL);
    for (const std::uint32_t n : {1u << 12, 1u << 16}) {
        auto Pi = oracle::random_permutation(n, rng);
        const std::uint64_t budget =
            static_cast<std::uint64_t>(n) * ceil_log2(n) + 24ull * n;
        for (auto backend : {PgBackend::array, PgBackend::grid}) {
            auto g = SuccinctPermGraph::build(Pi, backend);
            const auto s = g.report_bits();
            INFO("n=" << n << " backend=" << (backend == PgBackend::array ? "array" : "grid")
                      << " pi=" << s.pi << " flags=" << s.flags << " rmq=" << s.rmq
                      << " oracles=" << s.oracles << " grid=" << s.grid);
            REQUIRE(s.total() <= budget);
            /* smoke queries at scale */
            REQUIRE(g.distance(1, n) == g.distance(n, 1));
            const vertex v = n / 2;
            auto nm = g.neighbors_minus(v);
            REQUIRE(nm.size() + g.neighbors_plus(v).size() == g.degree(v));
        }
    }
}
