#pragma once

/*
 * Permutation grid: the point set {(x, Pi[x])} of a permutation, stored as a
 * pointerless levelwise wavelet tree over the y-values (ceil(lg n) bit levels,
 * n * ceil(lg n) payload bits plus in-level directory overhead).
 *
 * Supported queries: orthogonal range counting and reporting (O(log n), resp.
 * O((k+1) log n)), plus evaluation of the permutation and its inverse. Count
 * and report clamp their rectangle to the grid and treat empty ranges as
 * empty; the point accessors throw on out-of-range arguments.
 *
 * A node at depth d with value range [a..b] owns a contiguous slot [lo+1..hi]
 * of level d's bit sequence; a 0 sends a point to the left child (values
 * [a..mid]), which occupies [lo+1..lo+z] at depth d+1 (z = zeros in the slot),
 * and a 1 to the right child at [lo+z+1..hi].
 */

#include <algorithm>
#include <cstdint>
#include <vector>

#include "spg/bitseq.hpp"
#include "spg/core.hpp"

namespace spg {

class PermGrid {
public:
    PermGrid() = default;

    explicit PermGrid(const Permutation& Pi) : n_(Pi.size()) {
        const std::uint32_t depth = ceil_log2(n_);
        levels_.reserve(depth);
        for (std::uint32_t d = 0; d < depth; ++d) levels_.emplace_back(n_, BitSeqOptions{});
        std::vector<vertex> vals(Pi.values());
        build_rec(0, 0, vals, 1, static_cast<vertex>(n_));
        for (auto& lv : levels_) lv.finalize();
    }

    std::size_t size() const { return n_; }

    /* Points inside [x1..x2] x [y1..y2]; the rectangle is clamped to the grid. */
    std::uint64_t count(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1,
                        std::uint32_t y2) const {
        if (!clamp(x1, x2) || !clamp(y1, y2)) return 0;
        return count_rec(0, 0, n_, 1, static_cast<vertex>(n_), x1, x2, y1, y2);
    }

    /* The points themselves, sorted by x. */
    std::vector<GridPoint> report(std::uint32_t x1, std::uint32_t x2, std::uint32_t y1,
                                  std::uint32_t y2) const {
        std::vector<GridPoint> out;
        if (!clamp(x1, x2) || !clamp(y1, y2)) return out;
        std::vector<vertex> ys;
        report_rec(0, 0, n_, 1, static_cast<vertex>(n_), x1, x2, y1, y2, ys);
        out.reserve(ys.size());
        for (vertex y : ys) out.push_back({x_for_y(y), y});
        std::sort(out.begin(), out.end(), [](const GridPoint& p, const GridPoint& q) { return p.x < q.x; });
        return out;
    }

    /* Pi[x]: the y-coordinate of the point in column x. */
    vertex y_for_x(vertex x) const {
        if (x < 1 || x > n_) throw std::out_of_range("column index");
        std::size_t lo = 0, hi = n_, p = x;
        vertex a = 1, b = static_cast<vertex>(n_);
        std::uint32_t d = 0;
        while (a < b) {
            const BitSeq& lv = levels_[d++];
            const std::uint64_t z = lv.rank(hi, false) - lv.rank(lo, false);
            const vertex m = a + (b - a) / 2;
            if (!lv.access(lo + p)) {
                p = lv.rank(lo + p, false) - lv.rank(lo, false);
                hi = lo + z;
                b = m;
            } else {
                p = lv.rank(lo + p, true) - lv.rank(lo, true);
                lo += z;
                a = m + 1;
            }
        }
        return a;
    }

    /* Pi^{-1}(y): the column of the point in row y. */
    vertex x_for_y(vertex y) const {
        if (y < 1 || y > n_) throw std::out_of_range("row index");
        return static_cast<vertex>(unwind(0, 0, n_, 1, static_cast<vertex>(n_), y));
    }

    std::uint64_t report_bits() const {
        std::uint64_t bits = 0;
        for (const auto& lv : levels_) bits += lv.report_bits().total();
        return bits;
    }

private:
    bool clamp(std::uint32_t& c1, std::uint32_t& c2) const {
        c1 = std::max<std::uint32_t>(c1, 1);
        c2 = std::min<std::uint32_t>(c2, static_cast<std::uint32_t>(n_));
        return c1 <= c2;
    }

    void build_rec(std::uint32_t d, std::size_t lo, std::vector<vertex>& vals, vertex a, vertex b) {
        if (a == b || vals.empty()) return;
        const vertex m = a + (b - a) / 2;
        std::vector<vertex> left, right;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] <= m) {
                left.push_back(vals[i]);
            } else {
                levels_[d].set(lo + i + 1, true);
                right.push_back(vals[i]);
            }
        }
        const std::size_t z = left.size();
        build_rec(d + 1, lo, left, a, m);
        build_rec(d + 1, lo + z, right, m + 1, b);
    }

    std::uint64_t count_rec(std::uint32_t d, std::size_t lo, std::size_t hi, vertex a, vertex b,
                            std::size_t l, std::size_t r, vertex y1, vertex y2) const {
        if (l > r || y1 > b || y2 < a) return 0;
        if (y1 <= a && b <= y2) return r - l + 1;
        const BitSeq& lv = levels_[d];
        const std::uint64_t z = lv.rank(hi, false) - lv.rank(lo, false);
        const std::uint64_t zl = lv.rank(lo + l - 1, false) - lv.rank(lo, false);
        const std::uint64_t zr = lv.rank(lo + r, false) - lv.rank(lo, false);
        const vertex m = a + (b - a) / 2;
        std::uint64_t c = 0;
        if (zr > zl) c += count_rec(d + 1, lo, lo + z, a, m, zl + 1, zr, y1, y2);
        if (r - zr > l - 1 - zl) c += count_rec(d + 1, lo + z, hi, m + 1, b, l - zl, r - zr, y1, y2);
        return c;
    }

    void report_rec(std::uint32_t d, std::size_t lo, std::size_t hi, vertex a, vertex b,
                    std::size_t l, std::size_t r, vertex y1, vertex y2,
                    std::vector<vertex>& ys) const {
        if (l > r || y1 > b || y2 < a) return;
        if (a == b) {
            /* permutation: exactly one point per row */
            ys.push_back(a);
            return;
        }
        const BitSeq& lv = levels_[d];
        const std::uint64_t z = lv.rank(hi, false) - lv.rank(lo, false);
        const std::uint64_t zl = lv.rank(lo + l - 1, false) - lv.rank(lo, false);
        const std::uint64_t zr = lv.rank(lo + r, false) - lv.rank(lo, false);
        const vertex m = a + (b - a) / 2;
        if (zr > zl) report_rec(d + 1, lo, lo + z, a, m, zl + 1, zr, y1, y2, ys);
        if (r - zr > l - 1 - zl) report_rec(d + 1, lo + z, hi, m + 1, b, l - zl, r - zr, y1, y2, ys);
    }

    /* Column of the unique point with row y: descend by value, then translate
     * the in-slot position back up with select. */
    std::size_t unwind(std::uint32_t d, std::size_t lo, std::size_t hi, vertex a, vertex b,
                       vertex y) const {
        if (a == b) return 1;
        const BitSeq& lv = levels_[d];
        const std::uint64_t z = lv.rank(hi, false) - lv.rank(lo, false);
        const vertex m = a + (b - a) / 2;
        if (y <= m) {
            const std::size_t rel = unwind(d + 1, lo, lo + z, a, m, y);
            return *lv.select(lv.rank(lo, false) + rel, false) - lo;
        }
        const std::size_t rel = unwind(d + 1, lo + z, hi, m + 1, b, y);
        return *lv.select(lv.rank(lo, true) + rel, true) - lo;
    }

    std::size_t n_ = 0;
    std::vector<BitSeq> levels_;
};

} // namespace spg
