#pragma once

/*
 * Reference layer: plain permutation handling plus an uncompressed
 * adjacency-matrix graph with BFS. Everything here is deliberately simple and
 * serves as the ground truth the succinct structures are validated against.
 *
 * Conventions used throughout the toolkit:
 *  - vertices are 1..n;
 *  - Pi denotes the inverse permutation pi^{-1}, so vertex v sits at grid
 *    column v (x) and row Pi[v] (y);
 *  - {u,v} is an edge iff (u - v) and (Pi[u] - Pi[v]) have opposite signs
 *    (an inversion).
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "spg/common.hpp"

namespace spg {

/* A point of the permutation diagram: column x, row y. */
struct GridPoint {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/* A permutation of [1..n] with 1-based accessors. */
class Permutation {
public:
    Permutation() = default;

    /* Validates that `values` is a bijection on [1..n]; throws otherwise. */
    static Permutation from_values(std::vector<std::uint32_t> values) {
        const std::size_t n = values.size();
        std::vector<bool> seen(n + 1, false);
        for (std::uint32_t x : values) {
            if (x < 1 || x > n || seen[x])
                throw std::invalid_argument("not a permutation of [1..n]");
            seen[x] = true;
        }
        Permutation p;
        p.vals_ = std::move(values);
        return p;
    }

    static Permutation identity(std::uint32_t n) {
        std::vector<std::uint32_t> v(n);
        std::iota(v.begin(), v.end(), 1u);
        Permutation p;
        p.vals_ = std::move(v);
        return p;
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(vals_.size()); }

    /* Value at 1-based position i. */
    std::uint32_t at(std::uint32_t i) const {
        if (i < 1 || i > size()) throw std::out_of_range("permutation index");
        return vals_[i - 1];
    }

    Permutation inverse() const {
        std::vector<std::uint32_t> inv(vals_.size());
        for (std::uint32_t i = 0; i < vals_.size(); ++i) inv[vals_[i] - 1] = i + 1;
        Permutation p;
        p.vals_ = std::move(inv);
        return p;
    }

    const std::vector<std::uint32_t>& values() const { return vals_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> vals_;
};

/*
 * Uncompressed reference graph: packed adjacency-matrix rows.
 * Built in O(n^2) straight from the inversion rule.
 */
class ReferenceGraph {
public:
    static ReferenceGraph build_reference(const Permutation& pi_inverse) {
        ReferenceGraph g;
        g.n_ = pi_inverse.size();
        g.words_per_row_ = div_ceil(g.n_ + 1, 64);
        g.rows_.assign(static_cast<std::size_t>(g.n_ + 1) * g.words_per_row_, 0);
        for (std::uint32_t u = 1; u <= g.n_; ++u)
            for (std::uint32_t v = u + 1; v <= g.n_; ++v)
                if (pi_inverse.at(u) > pi_inverse.at(v)) {
                    g.set_edge(u, v);
                    g.set_edge(v, u);
                }
        return g;
    }

    std::uint32_t size() const { return n_; }

    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        check(u); check(v);
        if (u == v) return false;
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    std::vector<std::uint32_t> neighbors(std::uint32_t v) const {
        check(v);
        std::vector<std::uint32_t> out;
        const std::uint64_t* r = row(v);
        for (std::uint32_t w = 1; w <= n_; ++w)
            if ((r[w >> 6] >> (w & 63)) & 1u) out.push_back(w);
        return out;
    }

    std::uint32_t degree(std::uint32_t v) const {
        check(v);
        std::uint32_t d = 0;
        const std::uint64_t* r = row(v);
        for (std::uint64_t i = 0; i < words_per_row_; ++i)
            d += static_cast<std::uint32_t>(std::popcount(r[i]));
        return d;
    }

    std::uint64_t edge_count() const {
        std::uint64_t twice = 0;
        for (std::uint32_t v = 1; v <= n_; ++v) twice += degree(v);
        return twice / 2;
    }

    /* Hop distances from `source` to every vertex; kInfDist if unreachable. */
    std::vector<std::uint32_t> bfs_all(std::uint32_t source) const {
        check(source);
        std::vector<std::uint32_t> dist(n_ + 1, kInfDist);
        dist[source] = 0;
        std::queue<std::uint32_t> q;
        q.push(source);
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            const std::uint64_t* r = row(u);
            for (std::uint32_t w = 1; w <= n_; ++w)
                if (((r[w >> 6] >> (w & 63)) & 1u) && dist[w] == kInfDist) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        return dist;
    }

private:
    void check(std::uint32_t v) const {
        if (v < 1 || v > n_) throw std::out_of_range("vertex id");
    }
    std::uint64_t* row(std::uint32_t v) { return rows_.data() + static_cast<std::size_t>(v) * words_per_row_; }
    const std::uint64_t* row(std::uint32_t v) const {
        return rows_.data() + static_cast<std::size_t>(v) * words_per_row_;
    }
    void set_edge(std::uint32_t u, std::uint32_t v) { row(u)[v >> 6] |= 1ull << (v & 63); }

    std::uint32_t n_ = 0;
    std::uint64_t words_per_row_ = 0;
    std::vector<std::uint64_t> rows_;
};

inline ReferenceGraph build_reference(const Permutation& pi_inverse) {
    return ReferenceGraph::build_reference(pi_inverse);
}

/* Number of inversions of pi^{-1} = number of edges of the graph. O(n log n). */
inline std::uint64_t inversions_count(const Permutation& pi_inverse) {
    /* Standard BIT count: pairs u < v with Pi[u] > Pi[v]. */
    const std::uint32_t n = pi_inverse.size();
    std::vector<std::uint32_t> fen(n + 1, 0);
    auto add = [&](std::uint32_t i) { for (; i <= n; i += i & (~i + 1)) fen[i]++; };
    auto pref = [&](std::uint32_t i) {
        std::uint32_t s = 0;
        for (; i > 0; i -= i & (~i + 1)) s += fen[i];
        return s;
    };
    std::uint64_t inv = 0;
    for (std::uint32_t v = 1; v <= n; ++v) {
        std::uint32_t y = pi_inverse.at(v);
        inv += pref(n) - pref(y); /* earlier values strictly above y */
        add(y);
    }
    return inv;
}

} // namespace spg
