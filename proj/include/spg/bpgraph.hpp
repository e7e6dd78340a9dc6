#pragma once

/*
 * Bipartite ordered permutation graph in 2n + o(n) bits.
 *
 * A permutation graph is bipartite exactly when every vertex is a prefix
 * maximum (class A) or a suffix minimum (class B) of the row sequence —
 * equivalently, the rows split into two shuffled increasing subsequences.
 * Two bitvectors are then a complete encoding:
 *
 *   Ax[v] = [v is a prefix maximum],  Ay[i] = [the vertex with row i is one].
 *
 * Rows are recovered as Pi[v] = sel1(Ay, rank1(Ax, v)) for A-vertices and
 * sel0(Ay, rank0(Ax, v)) for the rest, giving O(1) adjacency; neighbors are
 * one contiguous class range streamed by rank/select; degree is a rank
 * difference. Isolated vertices (class A and B at once) must occupy the top
 * ids; relabel_for_bpg produces the canonical renaming when they do not.
 *
 * Shortest paths are greedy: a non-adjacent step has exactly one useful
 * successor (the farthest neighbor toward the target), so distance costs
 * O(dist) hop iterations. The optional oracle variant adds the two chain
 * oracles (O(n) bits) and answers distance in O(1) through the same case
 * cascade as the general structure.
 *
 * Hamiltonian path/cycle run in O(n): the vertex order restricted to A and
 * B is a strong ordering, so the only path candidates interleave the two
 * classes in id order (started from whichever class fits the counts), and a
 * Hamiltonian cycle exists iff |A| = |B| >= 2 and every consecutive
 * quadruple a_i, b_i, a_i+1, b_i+1 induces a four-cycle.
 */

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "spg/bitseq.hpp"
#include "spg/common.hpp"
#include "spg/core.hpp"
#include "spg/pgraph.hpp"

namespace spg {

struct BpgSpace {
    std::uint64_t payload = 0;     /* the 2n encoding bits */
    std::uint64_t directories = 0; /* rank/select overhead on Ax, Ay */
    std::uint64_t oracles = 0;     /* distance-oracle variant extras */
    std::uint64_t total() const { return payload + directories + oracles; }
};

/* Canonical renaming that moves isolated vertices to the top ids while
 * keeping the relative order (positions and rows) of everything else. */
struct BpgRelabeling {
    Permutation pi_inverse;      /* the relabeled instance */
    std::vector<vertex> to_new;  /* indexed by old id; [0] unused */
};

inline BpgRelabeling relabel_for_bpg(const Permutation& pi_inverse) {
    const std::uint32_t n = pi_inverse.size();
    if (n == 0) throw std::invalid_argument("empty permutation");
    std::vector<bool> in_a(n + 1, false), in_b(n + 1, false);
    std::uint32_t best = 0;
    for (vertex v = 1; v <= n; ++v)
        if (pi_inverse.at(v) > best) {
            in_a[v] = true;
            best = pi_inverse.at(v);
        }
    best = n + 1;
    for (vertex v = n; v >= 1; --v)
        if (pi_inverse.at(v) < best) {
            in_b[v] = true;
            best = pi_inverse.at(v);
        }

    std::uint32_t w = 0;
    for (vertex v = 1; v <= n; ++v)
        if (in_a[v] && in_b[v]) ++w;

    BpgRelabeling r;
    r.to_new.assign(n + 1, 0);
    /* new rows: non-isolated rows compressed order-preservingly to
     * [1, n-w]; isolated vertices become fixed points on the top block */
    std::vector<std::uint32_t> row_rank(n + 1, 0);
    std::uint32_t next_row = 0;
    std::vector<bool> row_isolated(n + 1, false);
    for (vertex v = 1; v <= n; ++v)
        if (in_a[v] && in_b[v]) row_isolated[pi_inverse.at(v)] = true;
    for (std::uint32_t i = 1; i <= n; ++i)
        if (!row_isolated[i]) row_rank[i] = ++next_row;

    std::vector<std::uint32_t> rows(n, 0);
    std::uint32_t next_pos = 0, next_iso = n - w;
    for (vertex v = 1; v <= n; ++v) {
        if (in_a[v] && in_b[v]) {
            r.to_new[v] = ++next_iso;
            rows[r.to_new[v] - 1] = r.to_new[v]; /* fixed point */
        } else {
            r.to_new[v] = ++next_pos;
            rows[r.to_new[v] - 1] = row_rank[pi_inverse.at(v)];
        }
    }
    r.pi_inverse = Permutation::from_values(std::move(rows));
    return r;
}

class BipartitePermGraph {
public:
    BipartitePermGraph() = default;

    static BipartitePermGraph build(const Permutation& pi_inverse,
                                    bool with_distance_oracles = false) {
        const std::uint32_t n = pi_inverse.size();
        if (n == 0) throw std::invalid_argument("empty permutation");
        std::vector<bool> in_a(n + 1, false), in_b(n + 1, false);
        std::uint32_t best = 0;
        for (vertex v = 1; v <= n; ++v)
            if (pi_inverse.at(v) > best) {
                in_a[v] = true;
                best = pi_inverse.at(v);
            }
        best = n + 1;
        for (vertex v = n; v >= 1; --v)
            if (pi_inverse.at(v) < best) {
                in_b[v] = true;
                best = pi_inverse.at(v);
            }
        std::uint32_t w = 0;
        for (vertex v = 1; v <= n; ++v) {
            if (!in_a[v] && !in_b[v])
                throw std::invalid_argument(
                    "graph is not bipartite: vertex is neither a prefix maximum "
                    "nor a suffix minimum");
            if (in_a[v] && in_b[v]) ++w;
        }
        for (vertex v = n - w + 1; v <= n; ++v)
            if (!(in_a[v] && in_b[v]))
                throw std::invalid_argument(
                    "isolated vertices must occupy the top ids; apply "
                    "relabel_for_bpg first");

        BipartitePermGraph g;
        g.n_ = n;
        g.w_ = w;
        g.with_oracles_ = with_distance_oracles;
        g.ax_ = BitSeq(n);
        g.ay_ = BitSeq(n);
        std::vector<vertex> inv(n + 1, 0);
        for (vertex v = 1; v <= n; ++v) inv[pi_inverse.at(v)] = v;
        for (vertex v = 1; v <= n; ++v) {
            if (in_a[v]) g.ax_.set(v, true);
            if (in_a[inv[v]]) g.ay_.set(v, true);
        }
        g.ax_.finalize();
        g.ay_.finalize();
        if (with_distance_oracles) g.build_oracles();
        return g;
    }

    std::uint32_t size() const { return n_; }
    std::uint32_t isolated_count() const { return w_; }
    bool has_oracles() const { return with_oracles_; }

    bool is_a(vertex v) const {
        check(v);
        return ax_.access(v);
    }
    bool isolated(vertex v) const {
        check(v);
        return v > n_ - w_;
    }

    /* Pi[v] from the two bitvectors alone. */
    std::uint32_t pi_inv(vertex v) const {
        check(v);
        return row(v);
    }

    bool adjacent(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        return row(u) > row(v);
    }

    /* All neighbors in ascending order: one contiguous run of the opposite
     * class, streamed by rank/select. */
    std::vector<vertex> neighbors(vertex v) const {
        check(v);
        std::vector<vertex> out;
        if (isolated(v)) return out;
        if (ax_.access(v)) {
            const vertex lo = *b_minus_of_a(v), hi = *b_plus_of_a(v);
            for (std::uint64_t k = ax_.rank(lo - 1, false) + 1; k <= ax_.rank(hi, false); ++k)
                out.push_back(static_cast<vertex>(*ax_.select(k, false)));
        } else {
            const vertex lo = *a_minus_of_b(v), hi = *a_plus_of_b(v);
            for (std::uint64_t k = ax_.rank(lo - 1) + 1; k <= ax_.rank(hi); ++k)
                out.push_back(static_cast<vertex>(*ax_.select(k)));
        }
        return out;
    }

    std::uint32_t degree(vertex v) const {
        check(v);
        if (isolated(v)) return 0;
        if (ax_.access(v))
            return static_cast<std::uint32_t>(ax_.rank(*b_plus_of_a(v), false) -
                                              ax_.rank(*b_minus_of_a(v), false) + 1);
        return static_cast<std::uint32_t>(ax_.rank(*a_plus_of_b(v)) -
                                          ax_.rank(*a_minus_of_b(v)) + 1);
    }

    std::uint32_t distance(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return 0;
        if (isolated(u) || isolated(v)) return kInfDist;
        if (with_oracles_)
            return detail::cascade(view(), u, row(u), v, row(v)).dist;
        return walk_distance(u, v).first;
    }

    vertex spath_first(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("no hop from a vertex to itself");
        if (distance(u, v) == kInfDist)
            throw std::invalid_argument("vertices are disconnected");
        return adjacent(u, v) ? v : greedy_hop(u, v);
    }

    std::vector<vertex> spath(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return {u};
        const std::uint32_t total = distance(u, v);
        if (total == kInfDist) throw std::invalid_argument("vertices are disconnected");
        std::vector<vertex> out;
        out.reserve(total + 1);
        out.push_back(u);
        vertex cur = u;
        for (std::uint32_t step = 0; step < total && cur != v; ++step) {
            cur = adjacent(cur, v) ? v : greedy_hop(cur, v);
            out.push_back(cur);
        }
        if (cur != v) throw std::logic_error("shortest-path walk overran its length");
        return out;
    }

    /* The id-ordered interleaving of the two classes is the only possible
     * Hamiltonian path shape; try the start class that fits the counts. */
    std::optional<std::vector<vertex>> hamiltonian_path() const {
        if (n_ == 1) return std::vector<vertex>{1};
        if (w_ > 0) return std::nullopt;
        const std::uint32_t k = static_cast<std::uint32_t>(ax_.rank(n_));
        const std::uint32_t s = n_ - k;
        if (k == s || k == s + 1)
            if (auto p = try_alternating(true, k, s)) return p;
        if (s == k || s == k + 1)
            if (auto p = try_alternating(false, k, s)) return p;
        return std::nullopt;
    }

    /* A Hamiltonian cycle exists iff |A| = |B| = k >= 2 and each consecutive
     * quadruple a_i, b_i, a_i+1, b_i+1 induces a four-cycle. Those
     * conditions supply exactly the edges {a_i,b_i}, {b_i,a_i+1},
     * {a_i,b_i+1}, from which the returned zigzag cycle — up through the
     * even a's, each paired with the next b, then back down the odd ones —
     * is built, so it is valid by construction once the scan passes. */
    std::optional<std::vector<vertex>> hamiltonian_cycle() const {
        if (w_ > 0) return std::nullopt;
        const std::uint32_t k = static_cast<std::uint32_t>(ax_.rank(n_));
        if (k < 2 || n_ != 2 * k) return std::nullopt;
        const auto a = [&](std::uint32_t i) { return static_cast<vertex>(*ax_.select(i)); };
        const auto b = [&](std::uint32_t i) {
            return static_cast<vertex>(*ax_.select(i, false));
        };
        for (std::uint32_t i = 1; i < k; ++i)
            if (!adjacent(a(i), b(i)) || !adjacent(b(i), a(i + 1)) ||
                !adjacent(a(i + 1), b(i + 1)) || !adjacent(a(i), b(i + 1)))
                return std::nullopt;
        std::vector<vertex> out;
        out.reserve(n_);
        out.push_back(a(1));
        out.push_back(b(1));
        for (std::uint32_t i = 2; i <= k; i += 2) {
            out.push_back(a(i));
            if (i + 1 <= k) out.push_back(b(i + 1));
        }
        if (k % 2 == 1) out.push_back(a(k));
        bool is_b = true;
        for (std::uint32_t j = (k % 2 == 0) ? k : k - 1; is_b ? j >= 2 : j >= 3; --j) {
            out.push_back(is_b ? b(j) : a(j));
            is_b = !is_b;
        }
        return out;
    }

    BpgSpace report_bits() const {
        BpgSpace s;
        s.payload = 2ull * n_;
        s.directories =
            ax_.report_bits().total() + ay_.report_bits().total() - s.payload;
        if (with_oracles_)
            s.oracles = bx_.report_bits().total() + by_.report_bits().total() +
                        ga_.report_bits() + gb_.report_bits();
        return s;
    }

    /* Layout: magic, n, isolated count, oracle flag, then Ax and Ay. The
     * oracle variant's extras are deterministic derivations, rebuilt on load. */
    void serialize(std::ostream& os) const {
        write_magic(os, "SBPG1");
        write_u64(os, n_);
        write_u64(os, w_);
        write_u64(os, with_oracles_ ? 1 : 0);
        ax_.serialize(os);
        ay_.serialize(os);
    }

    static BipartitePermGraph load(std::istream& is) {
        expect_magic(is, "SBPG1");
        const std::uint64_t n = read_u64(is);
        const std::uint64_t w = read_u64(is);
        const std::uint64_t flag = read_u64(is);
        if (n == 0 || n > 0xFFFFFFFFull) throw std::runtime_error("bad size");
        if (w > n) throw std::runtime_error("bad isolated count");
        if (flag > 1) throw std::runtime_error("bad oracle flag");
        BitSeq ax = BitSeq::load(is);
        BitSeq ay = BitSeq::load(is);
        if (ax.size() != n || ay.size() != n)
            throw std::runtime_error("flag data does not match size");
        if (ax.rank(n) != ay.rank(n))
            throw std::runtime_error("class bitvectors disagree");
        /* decode the rows, then rebuild through the validating constructor */
        std::vector<std::uint32_t> rows(n);
        for (vertex v = 1; v <= n; ++v) {
            if (ax.access(v))
                rows[v - 1] = static_cast<std::uint32_t>(*ay.select(ax.rank(v)));
            else
                rows[v - 1] = static_cast<std::uint32_t>(*ay.select(ax.rank(v, false), false));
        }
        auto g = build(Permutation::from_values(std::move(rows)), flag == 1);
        if (g.w_ != w) throw std::runtime_error("isolated count does not match data");
        return g;
    }

private:
    void check(vertex v) const {
        if (v < 1 || v > n_) throw std::out_of_range("vertex index");
    }

    std::uint32_t row(vertex v) const {
        if (ax_.access(v)) return static_cast<std::uint32_t>(*ay_.select(ax_.rank(v)));
        return static_cast<std::uint32_t>(*ay_.select(ax_.rank(v, false), false));
    }

    /* Extremal neighbors; callers guarantee v is non-isolated and of the
     * stated class, which makes every select well-defined. */
    std::optional<vertex> b_minus_of_a(vertex v) const {
        return as_vertex(ax_.select(ax_.rank(v, false) + 1, false));
    }
    std::optional<vertex> b_plus_of_a(vertex v) const {
        return as_vertex(ax_.select(ay_.rank(row(v), false), false));
    }
    std::optional<vertex> a_minus_of_b(vertex v) const {
        return as_vertex(ax_.select(ay_.rank(row(v)) + 1));
    }
    std::optional<vertex> a_plus_of_b(vertex v) const {
        return as_vertex(ax_.select(ax_.rank(v)));
    }

    static std::optional<vertex> as_vertex(std::optional<std::size_t> s) {
        return s ? std::optional<vertex>(static_cast<vertex>(*s)) : std::nullopt;
    }

    /* The unique useful successor on a shortest path from u toward v (u, v
     * non-adjacent, both non-isolated): the farthest neighbor toward v. */
    vertex greedy_hop(vertex u, vertex v) const {
        if (u < v) return ax_.access(u) ? *b_plus_of_a(u) : *a_plus_of_b(u);
        return ax_.access(u) ? *b_minus_of_a(u) : *a_minus_of_b(u);
    }

    /* Iterated greedy hops; a revisit of the previous vertex or more than n
     * moves means the two sides can never meet. */
    std::pair<std::uint32_t, vertex> walk_distance(vertex u, vertex v) const {
        vertex cur = u, prev = 0;
        std::uint32_t d = 0;
        while (d <= n_) {
            if (adjacent(cur, v)) return {d + 1, cur};
            const vertex hop = greedy_hop(cur, v);
            if (hop == prev) break;
            prev = cur;
            cur = hop;
            ++d;
        }
        return {kInfDist, 0};
    }

    std::optional<std::vector<vertex>> try_alternating(bool a_first, std::uint32_t k,
                                                       std::uint32_t s) const {
        const std::uint32_t first = a_first ? k : s;
        const std::uint32_t second = a_first ? s : k;
        if (first != second && first != second + 1) return std::nullopt;
        std::vector<vertex> out;
        out.reserve(n_);
        for (std::uint32_t i = 1; i <= first; ++i) {
            out.push_back(static_cast<vertex>(*ax_.select(i, a_first)));
            if (i <= second) out.push_back(static_cast<vertex>(*ax_.select(i, !a_first)));
        }
        for (std::size_t j = 0; j + 1 < out.size(); ++j)
            if (!adjacent(out[j], out[j + 1])) return std::nullopt;
        return out;
    }

    void build_oracles() {
        /* full class vectors: B is the complement of A plus the isolated
         * block (isolated vertices belong to both classes) */
        bx_ = BitSeq(n_);
        by_ = BitSeq(n_);
        for (vertex v = 1; v <= n_; ++v) {
            if (!ax_.access(v) || v > n_ - w_) bx_.set(v, true);
            if (!ay_.access(v) || v > n_ - w_) by_.set(v, true);
        }
        bx_.finalize();
        by_.finalize();
        auto pr = detail::build_class_oracles(ax_, bx_, ay_, by_);
        ga_ = std::move(pr.first);
        gb_ = std::move(pr.second);
    }

    detail::ClassView view() const { return {&ax_, &bx_, &ay_, &by_, &ga_, &gb_}; }

    std::uint32_t n_ = 0, w_ = 0;
    bool with_oracles_ = false;
    BitSeq ax_, ay_;
    /* oracle-variant extras (never serialized) */
    BitSeq bx_, by_;
    ProperIntervalOracle ga_, gb_;
};

} // namespace spg
