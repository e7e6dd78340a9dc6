#pragma once

/*
 * Constant-time distance oracle for proper interval graphs in O(n) bits.
 *
 * Input intervals carry an integer id used for epsilon-perturbation: the left
 * end of interval v behaves like left - (n-v)*eps and the right end like
 * right + v*eps, realized exactly by lexicographic integer comparison (equal
 * integer endpoints order by ascending id, and a left end tied with a right
 * end always intersects it). Vertices are renamed 1..n by ascending perturbed
 * left endpoint; properness requires the perturbed rights to be nondecreasing
 * in that order (no interval strictly contains another), which build rejects.
 *
 * Stored structure (about 4n bits + directories):
 *   RB: for v = 1..n, R(v)-R(v-1) ones followed by a zero, where R(v) is the
 *       largest vertex intersecting v (R is nondecreasing, R(v) >= v).
 *       R(v) = rank1(select0(v)); L(v) = select1(v) - v + 1 (smallest
 *       neighbor), because the v-th one is written while processing L(v).
 *   CB: component-start marks (v starts a component iff R(v-1) = v-1).
 *   TB: BFS-layer boundary marks t_0 = start, t_{k+1} = R(t_k) per component.
 *
 * Within a component, level(v) counts boundary marks before v; two vertices
 * on the same level are always adjacent, and for u < v with level difference
 * D >= 1 the distance is D if the D-fold R-orbit of u reaches v, else D+1.
 * The orbit is walked directly by default (early exits: reaching v, or
 * landing exactly on a layer boundary); a doubling table (log n words per
 * vertex) makes the walk O(log n) regardless of the distance at a
 * space-budget cost, selected by PioOptions::mode.
 */

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spg/bitseq.hpp"
#include "spg/common.hpp"

namespace spg {

struct PioInterval {
    std::int64_t left = 0;
    std::int64_t right = 0;
    vertex id = 0; /* perturbation rank; distinct across the input */
};

enum class PioDistMode { orbit, table };

struct PioOptions {
    PioDistMode mode = PioDistMode::orbit;
};

class ProperIntervalOracle {
public:
    ProperIntervalOracle() = default;

    static ProperIntervalOracle build_from_intervals(std::vector<PioInterval> intervals,
                                                     PioOptions opts = {}) {
        ProperIntervalOracle o;
        o.mode_ = opts.mode;
        o.n_ = intervals.size();
        if (o.n_ == 0) return o;
        for (const auto& iv : intervals)
            if (iv.left > iv.right) throw std::invalid_argument("interval with left > right");
        std::sort(intervals.begin(), intervals.end(), [](const PioInterval& a, const PioInterval& b) {
            return a.left != b.left ? a.left < b.left : a.id < b.id;
        });
        for (std::size_t i = 1; i < o.n_; ++i) {
            const auto& p = intervals[i - 1];
            const auto& q = intervals[i];
            if (p.right > q.right || (p.right == q.right && p.id > q.id))
                throw std::invalid_argument("interval containment: realization is not proper");
        }

        /* R via two pointers over the sorted endpoints */
        std::vector<vertex> R(o.n_ + 1);
        std::size_t j = 0;
        for (std::size_t v = 1; v <= o.n_; ++v) {
            if (j < v) j = v; /* R(v) >= v */
            while (j < o.n_ && intervals[j].left <= intervals[v - 1].right) ++j;
            R[v] = static_cast<vertex>(j);
        }

        o.rb_ = BitSeq(2 * o.n_);
        std::size_t pos = 0;
        for (std::size_t v = 1; v <= o.n_; ++v) {
            for (vertex k = R[v - 1]; k < R[v]; ++k) o.rb_.set(++pos, true);
            ++pos; /* the zero terminating vertex v */
        }
        o.rb_.finalize();

        o.cb_ = BitSeq(o.n_);
        o.tb_ = BitSeq(o.n_);
        for (std::size_t v = 1; v <= o.n_; ++v)
            if (v == 1 || R[v - 1] == v - 1) {
                o.cb_.set(v, true);
                vertex t = static_cast<vertex>(v);
                o.tb_.set(t, true);
                while (R[t] != t) {
                    t = R[t];
                    o.tb_.set(t, true);
                }
            }
        o.cb_.finalize();
        o.tb_.finalize();

        if (o.mode_ == PioDistMode::table) {
            const std::uint32_t levels = std::max(1u, ceil_log2(o.n_));
            o.jump_.assign(levels, std::vector<vertex>(o.n_ + 1));
            for (std::size_t v = 1; v <= o.n_; ++v) o.jump_[0][v] = R[v];
            for (std::uint32_t k = 1; k < levels; ++k)
                for (std::size_t v = 1; v <= o.n_; ++v)
                    o.jump_[k][v] = o.jump_[k - 1][o.jump_[k - 1][v]];
        }
        return o;
    }

    std::size_t size() const { return n_; }
    PioDistMode mode() const { return mode_; }

    bool adjacent(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        return v <= rightmost(u);
    }

    std::uint32_t degree(vertex v) const {
        check(v);
        return rightmost(v) - leftmost(v);
    }

    /* [L(v), R(v)]: the contiguous closed neighborhood; v itself is inside. */
    std::pair<vertex, vertex> neighbor_range(vertex v) const {
        check(v);
        return {leftmost(v), rightmost(v)};
    }

    std::uint32_t dist(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return 0;
        if (u > v) std::swap(u, v);
        const std::uint32_t cu = component_of(u);
        if (cu != component_of(v)) return kInfDist;
        const std::uint64_t off = boundary_offset(cu);
        const std::uint32_t lu = level(u, off), lv = level(v, off);
        if (lu == lv) return 1; /* same layer is always adjacent */
        const std::uint32_t delta = lv - lu;
        return reaches(u, v, delta, off, lu) ? delta : delta + 1;
    }

    /* First hop of some shortest path from u to v (u for u == v). */
    vertex spath_first(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return u;
        if (component_of(u) != component_of(v))
            throw std::invalid_argument("vertices are in different components");
        if (u < v) return std::min(rightmost(u), v);
        return std::max(leftmost(u), v);
    }

    std::uint64_t report_bits() const {
        std::uint64_t bits = rb_.report_bits().total() + cb_.report_bits().total() +
                             tb_.report_bits().total();
        for (const auto& lvl : jump_) bits += static_cast<std::uint64_t>(lvl.size()) * 32;
        return bits;
    }

private:
    void check(vertex v) const {
        if (v < 1 || v > n_) throw std::out_of_range("vertex index");
    }

    vertex rightmost(vertex v) const {
        return static_cast<vertex>(rb_.rank(*rb_.select(v, false), true));
    }

    vertex leftmost(vertex v) const {
        return static_cast<vertex>(*rb_.select(v, true) - v + 1);
    }

    std::uint32_t component_of(vertex v) const {
        return static_cast<std::uint32_t>(cb_.rank(v, true));
    }

    /* marks strictly before the component's start */
    std::uint64_t boundary_offset(std::uint32_t comp) const {
        return tb_.rank(*cb_.select(comp, true) - 1, true);
    }

    std::uint32_t level(vertex v, std::uint64_t off) const {
        return static_cast<std::uint32_t>(tb_.rank(v - 1, true) - off);
    }

    /* k-th layer boundary of the component (k = 0 is the start vertex) */
    vertex boundary(std::uint64_t off, std::uint32_t k) const {
        return static_cast<vertex>(*tb_.select(off + k + 1, true));
    }

    /* Does the delta-fold R-orbit of u reach at least v? */
    bool reaches(vertex u, vertex v, std::uint32_t delta, std::uint64_t off,
                 std::uint32_t lu) const {
        if (!jump_.empty()) {
            vertex x = u;
            for (std::uint32_t k = 0; delta >> k; ++k)
                if ((delta >> k) & 1u) x = jump_[k][x];
            return x >= v;
        }
        vertex x = u;
        for (std::uint32_t s = 0; s < delta; ++s) {
            if (x == boundary(off, lu + s)) return true; /* orbit rides the boundaries */
            x = rightmost(x);
            if (x >= v) return true;
        }
        return x >= v;
    }

    std::size_t n_ = 0;
    PioDistMode mode_ = PioDistMode::orbit;
    BitSeq rb_, cb_, tb_;
    std::vector<std::vector<vertex>> jump_;
};

} // namespace spg
