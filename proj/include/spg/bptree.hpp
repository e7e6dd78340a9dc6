#pragma once

/*
 * Succinct binary tree over balanced parentheses, used as the shape component
 * of the block-decomposed range-max index.
 *
 * A binary tree with N nodes is encoded in 2N bits by the rule
 *     E(v) = "(" E(left(v)) ")" E(right(v)),
 * so opens appear in preorder and the b-th close is the close of the b-th
 * node in inorder. Positions are 1-based (1..2N). excess(p) = 2*rank1(p) - p.
 *
 * Navigation is provided by forward/backward excess searches over a
 * range-min-max tree with 4096-bit leaf blocks and int32 aggregates
 * (total excess, min/max prefix excess per segment), plus shared 256-entry
 * byte tables (program constants, not counted as per-instance space).
 * Backward searches use exact byte tables at the leaves and conservative
 * value intervals at internal nodes (a failed descent resumes the climb).
 */

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spg/bitseq.hpp"

namespace spg {
namespace detail {

struct ExcTables {
    std::array<std::int8_t, 256> exc{}, fmin{}, fmax{}, bmin{}, bmax{};
};

constexpr ExcTables make_exc_tables() {
    ExcTables t{};
    for (unsigned b = 0; b < 256; ++b) {
        int acc = 0, mn = 8, mx = -8;
        for (int j = 0; j < 8; ++j) {
            acc += ((b >> j) & 1) ? 1 : -1;
            if (acc < mn) mn = acc;
            if (acc > mx) mx = acc;
        }
        t.exc[b] = static_cast<std::int8_t>(acc);
        t.fmin[b] = static_cast<std::int8_t>(mn);
        t.fmax[b] = static_cast<std::int8_t>(mx);
        acc = 0;
        mn = 8;
        mx = -8;
        for (int j = 7; j >= 0; --j) {
            acc -= ((b >> j) & 1) ? 1 : -1;
            if (acc < mn) mn = acc;
            if (acc > mx) mx = acc;
        }
        t.bmin[b] = static_cast<std::int8_t>(mn);
        t.bmax[b] = static_cast<std::int8_t>(mx);
    }
    return t;
}

inline constexpr ExcTables kExc = make_exc_tables();

} // namespace detail

class BpBinaryTree {
public:
    static constexpr std::size_t kBlockBits = 4096;

    BpBinaryTree() = default;

    /*
     * Builds the shape of the max-Cartesian tree of `scores` (leftmost maximum
     * becomes the ancestor on ties). The caller's block b is the node with
     * inorder number b; nodes are addressed by their open position.
     */
    explicit BpBinaryTree(const std::vector<std::int64_t>& scores) {
        n_ = scores.size();
        if (n_ == 0) throw std::invalid_argument("empty score array");
        build_shape(scores);
        build_rmm();
    }

    std::size_t nodes() const { return n_; }
    std::size_t bp_length() const { return 2 * n_; }

    /* --- basic maps --- */

    std::size_t preorder(std::size_t p) const { return bp_.rank(p, true); }
    std::size_t node_of_preorder(std::size_t k) const { return *bp_.select(k, true); }
    std::size_t close_of_inorder(std::size_t b) const { return *bp_.select(b, false); }
    std::size_t inorder(std::size_t p) const { return bp_.rank(findclose(p), false); }
    std::size_t node_of_block(std::size_t b) const { return findopen(close_of_inorder(b)); }

    std::int64_t excess(std::size_t p) const {
        return 2 * static_cast<std::int64_t>(bp_.rank(p, true)) - static_cast<std::int64_t>(p);
    }

    /* --- structure --- */

    std::size_t findclose(std::size_t p) const {
        std::size_t q = fwdsearch(p, excess(p) - 1);
        if (q == 0) throw std::logic_error("unbalanced parentheses");
        return q;
    }

    std::size_t findopen(std::size_t q) const {
        std::int64_t p = bwdsearch(q - 1, excess(q));
        if (p < 0) throw std::logic_error("unbalanced parentheses");
        return static_cast<std::size_t>(p) + 1;
    }

    /* Open position of the tightest enclosing pair, or 0 if none. */
    std::size_t enclose(std::size_t p) const {
        std::int64_t q = bwdsearch(p - 1, excess(p) - 2);
        return q < 0 ? 0 : static_cast<std::size_t>(q) + 1;
    }

    /* Last position of E(subtree(p)). */
    std::size_t span_end(std::size_t p) const {
        std::size_t e = enclose(p);
        return e == 0 ? bp_length() : findclose(e) - 1;
    }

    std::size_t subtree_size(std::size_t p) const { return (span_end(p) - p + 1) / 2; }
    std::size_t left_size(std::size_t p) const { return (findclose(p) - p - 1) / 2; }

    bool has_left(std::size_t p) const { return findclose(p) > p + 1; }
    std::size_t left(std::size_t p) const { return p + 1; }
    bool has_right(std::size_t p) const { return span_end(p) > findclose(p); }
    std::size_t right(std::size_t p) const { return findclose(p) + 1; }

    /* First preorder node after subtree(p); 0 when the walk is done. */
    std::size_t skip_subtree(std::size_t p) const {
        std::size_t k = preorder(p) + subtree_size(p);
        return k > n_ ? 0 : node_of_preorder(k);
    }

    /* Preorder successor; 0 when the walk is done. */
    std::size_t succ_preorder(std::size_t p) const {
        if (has_left(p)) return left(p);
        if (has_right(p)) return right(p);
        return skip_subtree(p);
    }

    /* Inorder interval [lo, hi] of blocks covered by subtree(p). */
    std::pair<std::size_t, std::size_t> block_span(std::size_t p) const {
        std::size_t lo = inorder(p) - left_size(p);
        return {lo, lo + subtree_size(p) - 1};
    }

    /* LCA of the nodes with inorder numbers bu <= bv. */
    std::size_t lca_node(std::size_t bu, std::size_t bv) const {
        if (bu == bv) return node_of_block(bu);
        std::size_t l = close_of_inorder(bu), r = close_of_inorder(bv);
        std::int64_t m = min_excess(l, r);
        std::size_t pos = fwdsearch(l - 1, m); /* leftmost position achieving m */
        return findopen(pos);
    }

    std::size_t lca_block(std::size_t bu, std::size_t bv) const { return inorder(lca_node(bu, bv)); }

    std::uint64_t report_bits() const {
        auto b = bp_.report_bits();
        return b.total() + static_cast<std::uint64_t>(e_.size() + fmin_.size() + fmax_.size()) * 32;
    }

private:
    /* ---- construction ---- */

    void build_shape(const std::vector<std::int64_t>& scores) {
        const std::size_t N = scores.size();
        std::vector<std::size_t> spine, lch(N + 1, 0), rch(N + 1, 0);
        for (std::size_t i = 1; i <= N; ++i) {
            std::size_t last = 0;
            while (!spine.empty() && scores[spine.back() - 1] < scores[i - 1]) {
                last = spine.back();
                spine.pop_back();
            }
            lch[i] = last;
            if (!spine.empty()) rch[spine.back()] = i;
            spine.push_back(i);
        }
        const std::size_t root = spine.front();

        bp_ = BitSeq(2 * N, BitSeqOptions{DirProfile::fast, true, true});
        std::size_t pos = 0;
        std::vector<std::pair<std::size_t, int>> todo; /* (node, 0=open phase, 1=close phase) */
        todo.push_back({root, 0});
        while (!todo.empty()) {
            auto [v, phase] = todo.back();
            todo.pop_back();
            if (phase == 0) {
                bp_.set(++pos, true);
                todo.push_back({v, 1});
                if (lch[v]) todo.push_back({lch[v], 0});
            } else {
                ++pos; /* close bit stays 0 */
                if (rch[v]) todo.push_back({rch[v], 0});
            }
        }
        if (pos != 2 * N) throw std::logic_error("parenthesis emission out of balance");
        bp_.finalize();
    }

    void build_rmm() {
        nleaf_ = static_cast<std::size_t>(div_ceil(bp_length(), kBlockBits));
        leafpow_ = 1;
        while (leafpow_ < nleaf_) leafpow_ <<= 1;
        e_.assign(2 * leafpow_, 0);
        fmin_.assign(2 * leafpow_, std::numeric_limits<std::int32_t>::max());
        fmax_.assign(2 * leafpow_, std::numeric_limits<std::int32_t>::min());
        for (std::size_t lf = 0; lf < nleaf_; ++lf) {
            std::int32_t acc = 0, mn = std::numeric_limits<std::int32_t>::max(),
                         mx = std::numeric_limits<std::int32_t>::min();
            const std::size_t lo = lf * kBlockBits + 1;
            const std::size_t hi = std::min(bp_length(), (lf + 1) * kBlockBits);
            for (std::size_t p = lo; p <= hi; ++p) {
                acc += bit(p) ? 1 : -1;
                mn = std::min(mn, acc);
                mx = std::max(mx, acc);
            }
            e_[leafpow_ + lf] = acc;
            fmin_[leafpow_ + lf] = mn;
            fmax_[leafpow_ + lf] = mx;
        }
        for (std::size_t v = leafpow_ - 1; v >= 1; --v) {
            const std::size_t l = 2 * v, r = 2 * v + 1;
            e_[v] = e_[l] + e_[r];
            fmin_[v] = static_cast<std::int32_t>(
                std::min<std::int64_t>(fmin_[l], static_cast<std::int64_t>(e_[l]) + fmin_[r]));
            fmax_[v] = static_cast<std::int32_t>(
                std::max<std::int64_t>(fmax_[l], static_cast<std::int64_t>(e_[l]) + fmax_[r]));
        }
    }

    /* ---- raw bit/byte access (positions 1-based) ---- */

    bool bit(std::size_t p) const {
        const std::size_t j = p - 1;
        return (bp_.words()[j >> 6] >> (j & 63)) & 1u;
    }

    std::uint32_t byte(std::size_t k) const {
        return static_cast<std::uint32_t>((bp_.words()[k >> 3] >> ((k & 7) * 8)) & 0xFF);
    }

    /* First position of node v's leftmost leaf block. */
    std::size_t seg_lo(std::size_t v) const {
        while (v < leafpow_) v *= 2;
        return (v - leafpow_) * kBlockBits + 1;
    }

    /* ---- forward search: smallest q > i with excess(q) == target, else 0 ---- */

    std::size_t fwdsearch(std::size_t i, std::int64_t target) const {
        const std::size_t n2 = bp_length();
        if (i >= n2) return 0;
        std::int64_t cur = excess(i);
        std::size_t p = i;
        const std::size_t blk = i / kBlockBits;
        const std::size_t blk_end = std::min(n2, (blk + 1) * kBlockBits);
        while (p < blk_end && (p % 8) != 0) {
            ++p;
            cur += bit(p) ? 1 : -1;
            if (cur == target) return p;
        }
        while (p + 8 <= blk_end) {
            const std::uint32_t b = byte(p / 8);
            const std::int64_t diff = target - cur;
            if (diff >= detail::kExc.fmin[b] && diff <= detail::kExc.fmax[b]) {
                for (int j = 0; j < 8; ++j) {
                    ++p;
                    cur += ((b >> j) & 1) ? 1 : -1;
                    if (cur == target) return p;
                }
            } else {
                cur += detail::kExc.exc[b];
                p += 8;
            }
        }
        while (p < blk_end) {
            ++p;
            cur += bit(p) ? 1 : -1;
            if (cur == target) return p;
        }
        if (blk + 1 >= nleaf_) return 0;
        for (std::size_t v = leafpow_ + blk; v > 1; v >>= 1)
            if ((v & 1) == 0 && node_contains_fwd(v + 1, target)) return descend_fwd(v + 1, target);
        return 0;
    }

    bool node_contains_fwd(std::size_t v, std::int64_t target) const {
        const std::size_t lo = seg_lo(v);
        if (lo > bp_length()) return false;
        const std::int64_t base = excess(lo - 1);
        return target >= base + fmin_[v] && target <= base + fmax_[v];
    }

    std::size_t descend_fwd(std::size_t v, std::int64_t target) const {
        while (v < leafpow_) v = node_contains_fwd(2 * v, target) ? 2 * v : 2 * v + 1;
        const std::size_t lf = v - leafpow_;
        std::size_t p = lf * kBlockBits;
        const std::size_t end = std::min(bp_length(), (lf + 1) * kBlockBits);
        std::int64_t cur = excess(p);
        while (p + 8 <= end) {
            const std::uint32_t b = byte(p / 8);
            const std::int64_t diff = target - cur;
            if (diff >= detail::kExc.fmin[b] && diff <= detail::kExc.fmax[b]) {
                for (int j = 0; j < 8; ++j) {
                    ++p;
                    cur += ((b >> j) & 1) ? 1 : -1;
                    if (cur == target) return p;
                }
            } else {
                cur += detail::kExc.exc[b];
                p += 8;
            }
        }
        while (p < end) {
            ++p;
            cur += bit(p) ? 1 : -1;
            if (cur == target) return p;
        }
        throw std::logic_error("forward excess search: aggregate promised a hit");
    }

    /* ---- backward search: largest p' in [0, from] with excess(p') == target,
     *      else -1. excess(0) = 0 counts as position 0. ---- */

    std::int64_t bwdsearch(std::size_t from, std::int64_t target) const {
        if (excess(from) == target) return static_cast<std::int64_t>(from);
        if (from == 0) return -1;
        std::size_t p = from;
        std::int64_t cur = excess(p);
        const std::size_t blk = (p - 1) / kBlockBits;
        const std::size_t blk_lo = blk * kBlockBits;
        while (p > blk_lo && (p % 8) != 0) {
            cur -= bit(p) ? 1 : -1;
            --p;
            if (cur == target) return static_cast<std::int64_t>(p);
        }
        while (p >= blk_lo + 8) {
            const std::uint32_t b = byte(p / 8 - 1);
            const std::int64_t diff = target - cur;
            if (diff >= detail::kExc.bmin[b] && diff <= detail::kExc.bmax[b]) {
                for (int j = 7; j >= 0; --j) {
                    cur -= ((b >> j) & 1) ? 1 : -1;
                    --p;
                    if (cur == target) return static_cast<std::int64_t>(p);
                }
            } else {
                cur -= detail::kExc.exc[b];
                p -= 8;
            }
        }
        while (p > blk_lo) {
            cur -= bit(p) ? 1 : -1;
            --p;
            if (cur == target) return static_cast<std::int64_t>(p);
        }
        if (blk == 0) return -1; /* scanned down to position 0 already */
        for (std::size_t v = leafpow_ + blk; v > 1; v >>= 1)
            if (v & 1) {
                if (node_contains_bwd(v - 1, target)) {
                    std::int64_t r = descend_bwd(v - 1, target);
                    if (r >= 0) return r;
                }
            }
        return -1; /* target == 0 is always found at position 0 before this */
    }

    /* Backward positions of segment v are [lo-1 .. hi-1]; their excess values
     * are excess(lo-1) + w with w in {0} plus the prefix walk minus its last
     * point, so [min(fmin,0), max(fmax,0)] is a (conservative) superset. */
    bool node_contains_bwd(std::size_t v, std::int64_t target) const {
        const std::size_t lo = seg_lo(v);
        if (lo > bp_length()) return false;
        const std::int64_t base = excess(lo - 1);
        const std::int64_t mn = std::min<std::int64_t>(fmin_[v], 0);
        const std::int64_t mx = std::max<std::int64_t>(fmax_[v], 0);
        return target >= base + mn && target <= base + mx;
    }

    std::int64_t descend_bwd(std::size_t v, std::int64_t target) const {
        if (v >= leafpow_) {
            const std::size_t lf = v - leafpow_;
            const std::size_t lo = lf * kBlockBits;
            std::size_t p = std::min(bp_length(), (lf + 1) * kBlockBits);
            std::int64_t cur = excess(p);
            while (p >= lo + 8 && (p % 8) == 0) {
                const std::uint32_t b = byte(p / 8 - 1);
                const std::int64_t diff = target - cur;
                if (diff >= detail::kExc.bmin[b] && diff <= detail::kExc.bmax[b]) {
                    for (int j = 7; j >= 0; --j) {
                        cur -= ((b >> j) & 1) ? 1 : -1;
                        --p;
                        if (cur == target) return static_cast<std::int64_t>(p);
                    }
                } else {
                    cur -= detail::kExc.exc[b];
                    p -= 8;
                }
            }
            while (p > lo) {
                cur -= bit(p) ? 1 : -1;
                --p;
                if (cur == target) return static_cast<std::int64_t>(p);
            }
            return -1;
        }
        if (node_contains_bwd(2 * v + 1, target)) {
            std::int64_t r = descend_bwd(2 * v + 1, target);
            if (r >= 0) return r;
        }
        if (node_contains_bwd(2 * v, target)) return descend_bwd(2 * v, target);
        return -1;
    }

    /* ---- minimum excess over positions [l, r] ---- */

    std::int64_t min_excess(std::size_t l, std::size_t r) const {
        const std::size_t bl = (l - 1) / kBlockBits, br = (r - 1) / kBlockBits;
        if (bl == br) return min_excess_scan(l, r);
        std::int64_t best = min_excess_scan(l, (bl + 1) * kBlockBits);
        best = std::min(best, min_excess_scan(br * kBlockBits + 1, r));
        if (br > bl + 1) best = std::min(best, min_excess_nodes(1, 0, leafpow_ - 1, bl + 1, br - 1));
        return best;
    }

    std::int64_t min_excess_scan(std::size_t l, std::size_t r) const {
        std::int64_t cur = excess(l - 1), best = std::numeric_limits<std::int64_t>::max();
        std::size_t p = l - 1;
        while (p < r && (p % 8) != 0) {
            ++p;
            cur += bit(p) ? 1 : -1;
            best = std::min(best, cur);
        }
        while (p + 8 <= r) {
            const std::uint32_t b = byte(p / 8);
            best = std::min<std::int64_t>(best, cur + detail::kExc.fmin[b]);
            cur += detail::kExc.exc[b];
            p += 8;
        }
        while (p < r) {
            ++p;
            cur += bit(p) ? 1 : -1;
            best = std::min(best, cur);
        }
        return best;
    }

    std::int64_t min_excess_nodes(std::size_t v, std::size_t vlo, std::size_t vhi, std::size_t ql,
                                  std::size_t qr) const {
        if (qr < vlo || vhi < ql || ql > qr) return std::numeric_limits<std::int64_t>::max();
        if (ql <= vlo && vhi <= qr) {
            const std::size_t lo = seg_lo(v);
            if (lo > bp_length()) return std::numeric_limits<std::int64_t>::max();
            return excess(lo - 1) + fmin_[v];
        }
        const std::size_t mid = (vlo + vhi) / 2;
        return std::min(min_excess_nodes(2 * v, vlo, mid, ql, qr),
                        min_excess_nodes(2 * v + 1, mid + 1, vhi, ql, qr));
    }

    std::size_t n_ = 0;
    BitSeq bp_;
    std::size_t nleaf_ = 0, leafpow_ = 1;
    std::vector<std::int32_t> e_, fmin_, fmax_;
};

} // namespace spg
