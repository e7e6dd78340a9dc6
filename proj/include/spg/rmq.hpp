#pragma once

/*
 * Small-space range-argmax / range-argmin index over a virtual value sequence,
 * with a stateless "next value above (below) a threshold" iteration.
 *
 * The index never stores the values: it keeps only the Cartesian-tree shape of
 * the maxima of c-sized blocks (c = block_size, about 2n/c + o(n/c) bits) and
 * probes values through the caller-supplied accessor on demand. The accessor
 * must stay pure and valid for the index lifetime; positions are 1-based and
 * values may include the +/- infinity sentinels below (used for virtual
 * sequences with missing slots).
 *
 * Orientation is fixed at build time: a `max` index answers range_argmax /
 * first_geq / next_geq, a `min` index the mirrored range_argmin / first_leq /
 * next_leq. Ties always break to the smallest position.
 *
 * Threshold iteration order (deterministic): the range argmax p* first, then
 * the rest of p*'s block ascending (tail, then the part before p* ascending),
 * then the remaining blocks in preorder of the block tree restricted to the
 * query range, each block ascending. next_* derives its bearings from
 * (l, r, y, i) alone, so interleaved iterations over different ranges stay
 * correct; the amortized cost per reported index is O(c) probes.
 *
 * The range-invariant bearings (the argmax and the in-range subtree root) are
 * kept in single-entry caches keyed by the exact query range. The index is
 * immutable after construction, so cached entries never go stale; iterating
 * several ranges in alternation merely misses the cache and recomputes.
 *
 * Query methods update an instrumentation counter (probes / block scans);
 * the counters and caches are `mutable` and not atomic - unsynchronized
 * concurrent access to one index is not supported.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "spg/bptree.hpp"

namespace spg {

inline constexpr std::int64_t kValNegInf = -(std::int64_t(1) << 60);
inline constexpr std::int64_t kValPosInf = (std::int64_t(1) << 60);

struct ValueAccessor {
    std::size_t length = 0;
    std::function<std::int64_t(std::size_t)> value_at; /* pure, 1-based */
};

enum class RmqOrientation { max, min };

struct RmqOptions {
    std::uint32_t block_size = 4;
};

class RmqIndex {
public:
    struct Stats {
        std::uint64_t probes = 0;        /* value_at invocations */
        std::uint64_t block_scans = 0;   /* nonempty in-block scans */
    };

    RmqIndex() = default;

    RmqIndex(ValueAccessor acc, RmqOrientation orient, RmqOptions opts = {})
        : acc_(std::move(acc)), orient_(orient), c_(opts.block_size) {
        if (c_ == 0) throw std::invalid_argument("block size must be positive");
        n_ = acc_.length;
        if (n_ == 0) return;
        const std::size_t nb = div_ceil(n_, c_);
        std::vector<std::int64_t> block_scores(nb);
        for (std::size_t b = 1; b <= nb; ++b) {
            std::int64_t best = score_at(blk_lo(b));
            for (std::size_t j = blk_lo(b) + 1; j <= blk_hi(b); ++j)
                best = std::max(best, score_at(j));
            block_scores[b - 1] = best;
        }
        tree_ = BpBinaryTree(block_scores);
        reset_stats();
    }

    std::size_t size() const { return n_; }
    std::uint32_t block_size() const { return c_; }
    RmqOrientation orientation() const { return orient_; }

    /* --- max orientation --- */

    /* Smallest position of the maximum value in [l..r]. */
    std::size_t range_argmax(std::size_t l, std::size_t r) const {
        require(RmqOrientation::max);
        check_range(l, r);
        return argmax_impl(l, r).first;
    }

    std::optional<std::size_t> first_geq(std::size_t l, std::size_t r, std::int64_t y) const {
        require(RmqOrientation::max);
        check_range(l, r);
        return first_impl(l, r, y);
    }

    std::optional<std::size_t> next_geq(std::size_t l, std::size_t r, std::int64_t y,
                                        std::size_t i) const {
        require(RmqOrientation::max);
        check_range(l, r);
        return next_impl(l, r, y, i);
    }

    /* --- min orientation (mirror images) --- */

    std::size_t range_argmin(std::size_t l, std::size_t r) const {
        require(RmqOrientation::min);
        check_range(l, r);
        return argmax_impl(l, r).first;
    }

    std::optional<std::size_t> first_leq(std::size_t l, std::size_t r, std::int64_t y) const {
        require(RmqOrientation::min);
        check_range(l, r);
        return first_impl(l, r, -y);
    }

    std::optional<std::size_t> next_leq(std::size_t l, std::size_t r, std::int64_t y,
                                        std::size_t i) const {
        require(RmqOrientation::min);
        check_range(l, r);
        return next_impl(l, r, -y, i);
    }

    /* --- instrumentation & space --- */

    const Stats& stats() const { return stats_; }
    void reset_stats() const { stats_ = Stats{}; }

    std::uint64_t report_bits() const { return n_ ? tree_.report_bits() : 0; }

private:
    void require(RmqOrientation o) const {
        if (orient_ != o) throw std::logic_error("operation does not match index orientation");
    }

    void check_range(std::size_t l, std::size_t r) const {
        if (l < 1 || r > n_ || l > r) throw std::invalid_argument("invalid range");
    }

    /* block geometry (blocks 1-based) */
    std::size_t blk(std::size_t i) const { return (i - 1) / c_ + 1; }
    std::size_t blk_lo(std::size_t b) const { return (b - 1) * c_ + 1; }
    std::size_t blk_hi(std::size_t b) const { return std::min<std::size_t>(b * c_, n_); }

    /* Orientation-folded value: both orientations maximize the score. */
    std::int64_t score_at(std::size_t i) const {
        ++stats_.probes;
        const std::int64_t v = acc_.value_at(i);
        return orient_ == RmqOrientation::max ? v : -v;
    }

    /* Leftmost score-argmax of [a..b] (requires a <= b). */
    std::pair<std::size_t, std::int64_t> scan_argmax(std::size_t a, std::size_t b) const {
        ++stats_.block_scans;
        std::size_t p = a;
        std::int64_t best = score_at(a);
        for (std::size_t j = a + 1; j <= b; ++j) {
            const std::int64_t v = score_at(j);
            if (v > best) {
                best = v;
                p = j;
            }
        }
        return {p, best};
    }

    /* First j in [a..b] with score >= sy, else 0; empty ranges allowed. */
    std::size_t scan_first(std::size_t a, std::size_t b, std::int64_t sy) const {
        if (a > b || b == 0) return 0;
        ++stats_.block_scans;
        for (std::size_t j = a; j <= b; ++j)
            if (score_at(j) >= sy) return j;
        return 0;
    }

    std::pair<std::size_t, std::int64_t> argmax_impl(std::size_t l, std::size_t r) const {
        if (am_.l == l && am_.r == r) return {am_.p, am_.v};
        const std::size_t bl = blk(l), br = blk(r);
        auto best = bl == br ? scan_argmax(l, r) : scan_argmax(l, blk_hi(bl));
        if (bl != br) {
            if (br > bl + 1) {
                const std::size_t mid = tree_.lca_block(bl + 1, br - 1);
                const auto cand = scan_argmax(blk_lo(mid), blk_hi(mid));
                if (cand.second > best.second) best = cand;
            }
            const auto tail = scan_argmax(blk_lo(br), r);
            if (tail.second > best.second) best = tail;
        }
        am_ = {l, r, best.first, best.second};
        return best;
    }

    std::optional<std::size_t> first_impl(std::size_t l, std::size_t r, std::int64_t sy) const {
        const auto [p, v] = argmax_impl(l, r);
        if (v >= sy) return p;
        return std::nullopt;
    }

    std::optional<std::size_t> next_impl(std::size_t l, std::size_t r, std::int64_t sy,
                                         std::size_t i) const {
        if (i < l || i > r) throw std::invalid_argument("iteration index outside range");
        if (score_at(i) < sy) throw std::invalid_argument("iteration index below threshold");

        const std::size_t pstar = argmax_impl(l, r).first;
        const std::size_t mstar = blk(pstar);
        const std::size_t bi = blk(i);
        const std::size_t bl = blk(l), br = blk(r);
        if (wm_.l != l || wm_.r != r) {
            const std::size_t nodeK = tree_.lca_node(bl, br);
            wm_ = {l, r, nodeK, tree_.preorder(nodeK), tree_.subtree_size(nodeK)};
        }
        const std::size_t nodeK = wm_.nodeK;
        const std::size_t preK = wm_.preK;
        const std::size_t szK = wm_.szK;

        std::size_t s = 0;
        if (bi == mstar) {
            if (i >= pstar) {
                if (std::size_t j = scan_first(i + 1, std::min(blk_hi(mstar), r), sy)) return j;
                if (std::size_t j = scan_first(std::max(blk_lo(mstar), l), pstar - 1, sy)) return j;
            } else {
                if (std::size_t j = scan_first(i + 1, pstar - 1, sy)) return j;
            }
            /* argmax block exhausted: walk the whole in-range tree, skipping it */
            s = nodeK;
        } else {
            if (std::size_t j = scan_first(i + 1, std::min(blk_hi(bi), r), sy)) return j;
            s = tree_.succ_preorder(tree_.node_of_block(bi));
        }
        while (s != 0) {
            const std::size_t pre = tree_.preorder(s);
            if (pre < preK || pre >= preK + szK) break; /* left the in-range subtree */
            const std::size_t b = tree_.inorder(s);
            if (b == mstar) {
                s = tree_.succ_preorder(s);
                continue;
            }
            const auto [lo, hi] = tree_.block_span(s);
            if (hi < bl || lo > br) {
                s = tree_.skip_subtree(s);
                continue;
            }
            if (b < bl || b > br) {
                /* out-of-range block whose subtree still meets the range:
                 * jump straight to the subtree covering the clamped span */
                s = tree_.node_of_block(tree_.lca_block(std::max(lo, bl), std::min(hi, br)));
                continue;
            }
            if (std::size_t j = scan_first(std::max(blk_lo(b), l), std::min(blk_hi(b), r), sy))
                return j;
            /* A fully interior block bounds its whole subtree (Cartesian
             * property), so an empty scan prunes it; an edge block's maximum
             * may sit outside [l..r], so only the node itself is skipped. */
            s = (b == bl || b == br) ? tree_.succ_preorder(s) : tree_.skip_subtree(s);
        }
        return std::nullopt;
    }

    /* Single-entry caches of range-invariant bearings (l == 0 means empty).
     * Values are deterministic functions of the immutable index and the
     * range, so entries never go stale. */
    struct ArgmaxMemo {
        std::size_t l = 0, r = 0, p = 0;
        std::int64_t v = 0;
    };
    struct WalkMemo {
        std::size_t l = 0, r = 0, nodeK = 0, preK = 0, szK = 0;
    };

    ValueAccessor acc_;
    RmqOrientation orient_ = RmqOrientation::max;
    std::uint32_t c_ = 4;
    std::size_t n_ = 0;
    BpBinaryTree tree_;
    mutable Stats stats_;
    mutable ArgmaxMemo am_;
    mutable WalkMemo wm_;
};

} // namespace spg
