#pragma once

/*
 * Distance labeling with a shared global part.
 *
 * Each vertex carries only the pair (v, Pi[v]) — two ceil(lg n)-bit fields —
 * and every query touches exactly the two endpoint labels plus one global
 * structure of O(n) bits (the four class bitvectors and the two chain
 * oracles; no stored permutation). Adjacency needs no global data at all:
 * it is the inversion test on the two labels. Distance and first-hop reuse
 * the case cascade; rows of intermediate class vertices are recovered from
 * the bitvectors, so chained routing never consults a label table. The
 * signatures enforce the access discipline: there is no parameter through
 * which a third label could arrive.
 */

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spg/bitseq.hpp"
#include "spg/common.hpp"
#include "spg/core.hpp"
#include "spg/intvec.hpp"
#include "spg/pgraph.hpp"

namespace spg {

/* The label of v: its position and its row. Plain data, 2*ceil(lg n) bits of
 * information; n itself travels in the global part. */
struct VertexLabel {
    vertex x = 0;
    std::uint32_t y = 0;
    bool operator==(const VertexLabel&) const = default;
};

class GlobalPart {
public:
    GlobalPart() = default;

    static GlobalPart build(const Permutation& pi_inverse) {
        if (pi_inverse.size() == 0) throw std::invalid_argument("empty permutation");
        GlobalPart g;
        g.n_ = pi_inverse.size();
        detail::build_class_flags(pi_inverse, g.ax_, g.bx_, g.ay_, g.by_);
        g.build_oracles();
        return g;
    }

    std::uint32_t size() const { return n_; }

    detail::ClassView view() const { return {&ax_, &bx_, &ay_, &by_, &ga_, &gb_}; }

    std::uint64_t report_bits() const {
        return 64 + ax_.report_bits().total() + bx_.report_bits().total() +
               ay_.report_bits().total() + by_.report_bits().total() + ga_.report_bits() +
               gb_.report_bits();
    }

    /* Layout: magic, n, then Ax, Bx, Ay, By; oracles are rebuilt on load. */
    void serialize(std::ostream& os) const {
        write_magic(os, "SPGL1");
        write_u64(os, n_);
        ax_.serialize(os);
        bx_.serialize(os);
        ay_.serialize(os);
        by_.serialize(os);
    }

    static GlobalPart load(std::istream& is) {
        expect_magic(is, "SPGL1");
        const std::uint64_t n = read_u64(is);
        if (n == 0 || n > 0xFFFFFFFFull) throw std::runtime_error("bad size");
        GlobalPart g;
        g.n_ = static_cast<std::uint32_t>(n);
        g.ax_ = BitSeq::load(is);
        g.bx_ = BitSeq::load(is);
        g.ay_ = BitSeq::load(is);
        g.by_ = BitSeq::load(is);
        if (g.ax_.size() != n || g.bx_.size() != n || g.ay_.size() != n || g.by_.size() != n)
            throw std::runtime_error("flag data does not match size");
        g.build_oracles();
        return g;
    }

private:
    void build_oracles() {
        auto pr = detail::build_class_oracles(ax_, bx_, ay_, by_);
        ga_ = std::move(pr.first);
        gb_ = std::move(pr.second);
    }

    std::uint32_t n_ = 0;
    BitSeq ax_, bx_, ay_, by_;
    ProperIntervalOracle ga_, gb_;
};

struct SemiLocalEncoding {
    std::vector<VertexLabel> labels; /* labels[v-1] belongs to vertex v */
    GlobalPart global;
};

inline SemiLocalEncoding encode(const Permutation& pi_inverse) {
    SemiLocalEncoding e;
    e.global = GlobalPart::build(pi_inverse);
    const std::uint32_t n = pi_inverse.size();
    e.labels.reserve(n);
    for (vertex v = 1; v <= n; ++v) e.labels.push_back({v, pi_inverse.at(v)});
    return e;
}

/* Number of bits the label array of an n-vertex graph needs. */
inline std::uint64_t label_bits(std::uint32_t n) {
    return 2ull * n * ceil_log2(n);
}

namespace detail {

inline void check_label(const VertexLabel& l, const GlobalPart& g) {
    if (l.x < 1 || l.x > g.size() || l.y < 1 || l.y > g.size())
        throw std::out_of_range("label does not fit the global part");
}

} // namespace detail

/* Pure inversion test; needs no global data. */
inline bool adjacent_labels(const VertexLabel& lu, const VertexLabel& lv) {
    return lu.x != lv.x && ((lu.x < lv.x) == (lu.y > lv.y));
}

inline std::uint32_t distance_labels(const VertexLabel& lu, const VertexLabel& lv,
                                     const GlobalPart& g) {
    detail::check_label(lu, g);
    detail::check_label(lv, g);
    return detail::cascade(g.view(), lu.x, lu.y, lv.x, lv.y).dist;
}

inline VertexLabel spath_first_labels(const VertexLabel& lu, const VertexLabel& lv,
                                      const GlobalPart& g) {
    detail::check_label(lu, g);
    detail::check_label(lv, g);
    if (lu.x == lv.x) throw std::invalid_argument("no hop from a vertex to itself");
    const auto c = g.view();
    const auto hr = detail::cascade(c, lu.x, lu.y, lv.x, lv.y);
    if (hr.dist == kInfDist) throw std::invalid_argument("vertices are disconnected");
    if (hr.hop == lv.x) return lv;
    /* every intermediate hop is a class vertex, so its row comes from the
     * bitvectors alone */
    const std::uint32_t y =
        c.ax->access(hr.hop) ? c.y_of_a(hr.hop) : c.y_of_b(hr.hop);
    return {hr.hop, y};
}

inline std::vector<VertexLabel> spath_labels(const VertexLabel& lu, const VertexLabel& lv,
                                             const GlobalPart& g) {
    detail::check_label(lu, g);
    detail::check_label(lv, g);
    if (lu.x == lv.x) return {lu};
    const std::uint32_t total = distance_labels(lu, lv, g);
    if (total == kInfDist) throw std::invalid_argument("vertices are disconnected");
    std::vector<VertexLabel> out;
    out.reserve(total + 1);
    out.push_back(lu);
    VertexLabel cur = lu;
    for (std::uint32_t step = 0; step < total && cur.x != lv.x; ++step) {
        cur = spath_first_labels(cur, lv, g);
        out.push_back(cur);
    }
    if (cur.x != lv.x) throw std::logic_error("label walk overran its length");
    return out;
}

/* Labels file: magic, n, then 2n packed fields (x-1, y-1 alternating) at
 * max(1, ceil(lg n)) bits each. */
inline void serialize_labels(const std::vector<VertexLabel>& labels, std::ostream& os) {
    const std::uint32_t n = static_cast<std::uint32_t>(labels.size());
    write_magic(os, "SPLB1");
    write_u64(os, n);
    if (n == 0) return;
    PackedIntVec pv;
    pv.reset(2ull * n, std::max(1u, ceil_log2(n)));
    for (std::size_t i = 0; i < n; ++i) {
        pv.set(2 * i, labels[i].x - 1);
        pv.set(2 * i + 1, labels[i].y - 1);
    }
    pv.serialize(os);
}

inline std::vector<VertexLabel> load_labels(std::istream& is) {
    expect_magic(is, "SPLB1");
    const std::uint64_t n = read_u64(is);
    if (n > 0xFFFFFFFFull) throw std::runtime_error("bad size");
    std::vector<VertexLabel> labels(n);
    if (n == 0) return labels;
    PackedIntVec pv = PackedIntVec::load(is);
    if (pv.size() != 2 * n) throw std::runtime_error("label data does not match size");
    for (std::size_t i = 0; i < n; ++i) {
        labels[i].x = static_cast<vertex>(pv.get(2 * i)) + 1;
        labels[i].y = static_cast<std::uint32_t>(pv.get(2 * i + 1)) + 1;
    }
    return labels;
}

} // namespace spg
