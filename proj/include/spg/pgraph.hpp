#pragma once

/*
 * Succinct ordered permutation graph.
 *
 * Vertices are 1..n; {u,v} is an edge iff u < v and Pi[u] > Pi[v], where
 * Pi = pi^-1 maps a vertex to the row of its grid point (v, Pi[v]). Two
 * backends share the query interface:
 *
 *   array — Pi packed at ceil(lg n) bits per entry plus two range-extremum
 *           indexes over it (neighbor streaming, O(1) adjacency/distance);
 *   grid  — a wavelet-tree grid over the points (adds counting in O(lg n),
 *           drops the packed Pi since the grid already encodes it).
 *
 * Both carry four class bitvectors and two proper-interval oracles:
 *   A = positions where Pi has a prefix maximum, B = suffix minima,
 *   Ax[v] = [v in A], Ay[i] = [the vertex with Pi = i is in A] (same for B).
 * A and B are independent sets, every non-A vertex has an A-neighbor (and
 * symmetrically), and A cap B is exactly the isolated vertices. The A-side
 * vertices carry B-id intervals [b-(a), b+(a)] forming a proper interval
 * graph GA whose distances count alternating A/B-paths in G; GB mirrors it.
 * Distance queries run a constant-size case cascade over the four extremal
 * maps and the two oracles (detail::cascade below).
 */

#include <algorithm>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "spg/bitseq.hpp"
#include "spg/common.hpp"
#include "spg/core.hpp"
#include "spg/grid.hpp"
#include "spg/interval_oracle.hpp"
#include "spg/intvec.hpp"
#include "spg/rmq.hpp"

namespace spg {

enum class PgBackend : std::uint8_t { array = 0, grid = 1 };

/* The four extremal neighbors of v: a_plus = max(N(v) cap A) for v outside A
 * (v itself for v in A), and the three siblings. The bitvector formulas are
 * the normative definition; a field is empty when its select overflows. */
struct ExtremalNeighbors {
    std::optional<vertex> a_minus, a_plus, b_minus, b_plus;
};

struct PgSpace {
    std::uint64_t pi = 0;      /* packed permutation */
    std::uint64_t flags = 0;   /* Ax, Bx, Ay, By */
    std::uint64_t rmq = 0;     /* both range-extremum indexes */
    std::uint64_t oracles = 0; /* GA + GB */
    std::uint64_t grid = 0;    /* wavelet-tree levels */
    std::uint64_t total() const { return pi + flags + rmq + oracles + grid; }
};

namespace detail {

/* Distance machinery shared by the full graph and the label scheme: the four
 * class bitvectors plus the two chain oracles answer distance / first-hop
 * queries given only the coordinates (x, Pi[x]) of the two endpoints. */
struct ClassView {
    const BitSeq* ax = nullptr;
    const BitSeq* bx = nullptr;
    const BitSeq* ay = nullptr;
    const BitSeq* by = nullptr;
    const ProperIntervalOracle* ga = nullptr;
    const ProperIntervalOracle* gb = nullptr;

    /* last A-vertex at or before x (x itself iff x in A) */
    std::optional<vertex> a_plus(vertex x) const {
        auto s = ax->select(ax->rank(x));
        return s ? std::optional<vertex>(static_cast<vertex>(*s)) : std::nullopt;
    }
    /* first A-vertex whose row is >= y */
    std::optional<vertex> a_minus_y(std::uint32_t y) const {
        auto s = ax->select(ay->rank(y - 1) + 1);
        return s ? std::optional<vertex>(static_cast<vertex>(*s)) : std::nullopt;
    }
    /* first B-vertex at or after x (x itself iff x in B) */
    std::optional<vertex> b_minus(vertex x) const {
        auto s = bx->select(bx->rank(x - 1) + 1);
        return s ? std::optional<vertex>(static_cast<vertex>(*s)) : std::nullopt;
    }
    /* last B-vertex whose row is <= y */
    std::optional<vertex> b_plus_y(std::uint32_t y) const {
        auto s = bx->select(by->rank(y));
        return s ? std::optional<vertex>(static_cast<vertex>(*s)) : std::nullopt;
    }

    /* rows of class vertices recovered without the permutation itself */
    std::uint32_t y_of_a(vertex a) const {
        return static_cast<std::uint32_t>(*ay->select(ax->rank(a)));
    }
    std::uint32_t y_of_b(vertex b) const {
        return static_cast<std::uint32_t>(*by->select(bx->rank(b)));
    }

    vertex id_a(vertex a) const { return static_cast<vertex>(ax->rank(a)); }
    vertex id_b(vertex b) const { return static_cast<vertex>(bx->rank(b)); }
    vertex a_of_id(vertex k) const { return static_cast<vertex>(*ax->select(k)); }
    vertex b_of_id(vertex k) const { return static_cast<vertex>(*bx->select(k)); }
};

struct HopResult {
    std::uint32_t dist = kInfDist;
    vertex hop = 0; /* next vertex after the source; meaningful when 1 <= dist < inf */
};

/* Exact distance + first hop between s = (xs, ys) and t = (xt, yt).
 *
 * After orienting (forward = xs < xt), the cascade checks distance 1
 * (inversion), 2 (a shared extremal class neighbor), 3 (one chain hop more),
 * and otherwise minimizes over four alternating-chain routes measured by the
 * interval oracles, each chain edge costing two graph edges. The backward
 * direction is the forward cascade on the reversed graph, where A and B
 * trade places: a_plus <-> b_minus, a_minus <-> b_plus, GA <-> GB, and every
 * threshold comparison flips. Sources that are their own chain head (s in A
 * resp. B) take the true first hop from one oracle path step: the next chain
 * vertex w and s always share a class neighbor, the larger of the two
 * class-minima. */
inline HopResult cascade(const ClassView& c, vertex xs, std::uint32_t ys, vertex xt,
                         std::uint32_t yt) {
    if (xs == xt) return {0, xs};
    const bool fwd = xs < xt;
    if (fwd ? ys > yt : ys < yt) return {1, xt};

    const auto adv1 = [&](vertex x) { return fwd ? c.a_plus(x) : c.b_minus(x); };
    const auto adv2 = [&](std::uint32_t y) { return fwd ? c.b_plus_y(y) : c.a_minus_y(y); };
    const auto thr1 = [&](std::uint32_t y) { return fwd ? c.a_minus_y(y) : c.b_plus_y(y); };
    const auto thr2 = [&](vertex x) { return fwd ? c.b_minus(x) : c.a_plus(x); };
    const auto reach = [&](const std::optional<vertex>& adv, const std::optional<vertex>& thr) {
        return adv && thr && (fwd ? *thr <= *adv : *adv <= *thr);
    };
    const auto y_chain1 = [&](vertex v) { return fwd ? c.y_of_a(v) : c.y_of_b(v); };
    /* chain 1 runs over A forward / B backward; chain 2 is the other class */
    const auto dist1 = [&](vertex p, vertex q) {
        return fwd ? c.ga->dist(c.id_a(p), c.id_a(q)) : c.gb->dist(c.id_b(p), c.id_b(q));
    };
    const auto dist2 = [&](vertex p, vertex q) {
        return fwd ? c.gb->dist(c.id_b(p), c.id_b(q)) : c.ga->dist(c.id_a(p), c.id_a(q));
    };

    const auto A1 = adv1(xs);
    const auto B1 = adv2(ys);
    const auto T1 = thr1(yt);
    const auto T2 = thr2(xt);
    if (reach(A1, T1)) return {2, *A1};
    if (reach(B1, T2)) return {2, *B1};
    std::optional<vertex> AB, BA;
    if (B1) AB = adv1(*B1);
    if (reach(AB, T1)) return {3, *B1};
    if (A1) BA = adv2(y_chain1(*A1));
    if (reach(BA, T2)) return {3, *A1};

    std::uint32_t best = kInfDist;
    vertex hop = 0, from = 0, to = 0;
    int chain = 0;
    const auto consider = [&](const std::optional<vertex>& f, const std::optional<vertex>& t,
                              std::uint32_t add, int ch, const std::optional<vertex>& h) {
        if (!f || !t) return;
        const std::uint32_t d = ch == 1 ? dist1(*f, *t) : dist2(*f, *t);
        if (d == kInfDist || add + 2 * d >= best) return;
        best = add + 2 * d;
        hop = *h;
        from = *f;
        to = *t;
        chain = ch;
    };
    consider(B1, T2, 2, 2, B1);
    consider(BA, T2, 3, 2, A1);
    consider(A1, T1, 2, 1, A1);
    consider(AB, T1, 3, 1, B1);
    if (best == kInfDist) return {kInfDist, 0};

    if (hop == xs) {
        /* The source heads its own chain; advance one oracle step instead. */
        const bool on_ga = (chain == 1) == fwd;
        if (on_ga) {
            const vertex w = c.a_of_id(c.ga->spath_first(c.id_a(from), c.id_a(to)));
            hop = std::max(*c.b_minus(xs), *c.b_minus(w));
        } else {
            const vertex w = c.b_of_id(c.gb->spath_first(c.id_b(from), c.id_b(to)));
            hop = std::max(*c.a_minus_y(ys), *c.a_minus_y(c.y_of_b(w)));
        }
    }
    return {best, hop};
}

/* One pass over the rows marks the prefix-maximum class A and the
 * suffix-minimum class B, in both position (x) and row (y) order. */
inline void build_class_flags(const Permutation& pi_inverse, BitSeq& ax, BitSeq& bx, BitSeq& ay,
                              BitSeq& by) {
    const std::uint32_t n = pi_inverse.size();
    std::vector<bool> in_a(n + 1, false), in_b(n + 1, false);
    std::vector<vertex> inv(n + 1, 0); /* inv[row] = vertex */
    std::uint32_t best = 0;
    for (vertex v = 1; v <= n; ++v) {
        const std::uint32_t p = pi_inverse.at(v);
        inv[p] = v;
        if (p > best) {
            in_a[v] = true;
            best = p;
        }
    }
    best = n + 1;
    for (vertex v = n; v >= 1; --v) {
        if (pi_inverse.at(v) < best) {
            in_b[v] = true;
            best = pi_inverse.at(v);
        }
    }
    ax = BitSeq(n);
    bx = BitSeq(n);
    ay = BitSeq(n);
    by = BitSeq(n);
    for (vertex v = 1; v <= n; ++v) {
        if (in_a[v]) ax.set(v, true);
        if (in_b[v]) bx.set(v, true);
        if (in_a[inv[v]]) ay.set(v, true);
        if (in_b[inv[v]]) by.set(v, true);
    }
    ax.finalize();
    bx.finalize();
    ay.finalize();
    by.finalize();
}

/* Every A-vertex a owns the contiguous B-range [b-(a), b+(a)] of its
 * neighbors in B; listed in A-order these form a proper interval model (GA).
 * GB mirrors it with the roles swapped. Isolated vertices contribute the
 * degenerate interval [v, v], which intersects nothing else. */
inline std::pair<ProperIntervalOracle, ProperIntervalOracle> build_class_oracles(
    const BitSeq& ax, const BitSeq& bx, const BitSeq& ay, const BitSeq& by) {
    const ClassView c{&ax, &bx, &ay, &by, nullptr, nullptr};
    std::vector<PioInterval> ia, ib;
    for (std::uint64_t k = 1;; ++k) {
        auto a = ax.select(k);
        if (!a) break;
        const vertex x = static_cast<vertex>(*a);
        ia.push_back({static_cast<std::int64_t>(*c.b_minus(x)),
                      static_cast<std::int64_t>(*c.b_plus_y(c.y_of_a(x))), x});
    }
    for (std::uint64_t k = 1;; ++k) {
        auto b = bx.select(k);
        if (!b) break;
        const vertex x = static_cast<vertex>(*b);
        ib.push_back({static_cast<std::int64_t>(*c.a_minus_y(c.y_of_b(x))),
                      static_cast<std::int64_t>(*c.a_plus(x)), x});
    }
    return {ProperIntervalOracle::build_from_intervals(std::move(ia)),
            ProperIntervalOracle::build_from_intervals(std::move(ib))};
}

} // namespace detail

class SuccinctPermGraph {
public:
    SuccinctPermGraph() = default;

    /* pi_inverse holds Pi[v] = pi^-1(v), the row of each vertex. */
    static SuccinctPermGraph build(const Permutation& pi_inverse,
                                   PgBackend backend = PgBackend::array) {
        const std::uint32_t n = pi_inverse.size();
        if (n == 0) throw std::invalid_argument("empty permutation");
        SuccinctPermGraph g;
        g.n_ = n;
        g.backend_ = backend;
        detail::build_class_flags(pi_inverse, g.ax_, g.bx_, g.ay_, g.by_);
        g.build_oracles();

        if (backend == PgBackend::array) {
            auto pv = std::make_shared<PackedIntVec>();
            pv->reset(n, std::max(1u, ceil_log2(n)));
            for (vertex v = 1; v <= n; ++v) pv->set(v - 1, pi_inverse.at(v) - 1);
            g.pi_ = std::move(pv);
            g.build_rmqs();
        } else {
            g.grid_ = std::make_shared<PermGrid>(pi_inverse);
        }
        return g;
    }

    std::uint32_t size() const { return n_; }
    PgBackend backend() const { return backend_; }

    /* Pi[v], the row of vertex v */
    std::uint32_t pi_inverse_at(vertex v) const {
        check(v);
        return row(v);
    }

    bool isolated(vertex v) const {
        check(v);
        return ax_.access(v) && bx_.access(v);
    }

    bool adjacent(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        return row(u) > row(v);
    }

    std::vector<vertex> neighbors_minus(vertex v) const {
        check(v);
        if (v == 1) return {};
        const std::uint32_t y = row(v);
        if (grid_) return xs_of(grid_->report(1, v - 1, y + 1, n_));
        std::vector<vertex> out;
        auto r = rmq_max_.first_geq(1, v - 1, static_cast<std::int64_t>(y) + 1);
        while (r) {
            out.push_back(static_cast<vertex>(*r));
            r = rmq_max_.next_geq(1, v - 1, static_cast<std::int64_t>(y) + 1, *r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<vertex> neighbors_plus(vertex v) const {
        check(v);
        if (v == n_) return {};
        const std::uint32_t y = row(v);
        if (grid_) return xs_of(grid_->report(v + 1, n_, 1, y - 1));
        std::vector<vertex> out;
        auto r = rmq_min_.first_leq(v + 1, n_, static_cast<std::int64_t>(y) - 1);
        while (r) {
            out.push_back(static_cast<vertex>(*r));
            r = rmq_min_.next_leq(v + 1, n_, static_cast<std::int64_t>(y) - 1, *r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /* smaller non-neighbors: N-minus of the complement graph, for free */
    std::vector<vertex> neighbors_minus_complement(vertex v) const {
        check(v);
        if (v == 1) return {};
        const std::uint32_t y = row(v);
        if (grid_) return xs_of(grid_->report(1, v - 1, 1, y - 1));
        std::vector<vertex> out;
        auto r = rmq_min_.first_leq(1, v - 1, static_cast<std::int64_t>(y) - 1);
        while (r) {
            out.push_back(static_cast<vertex>(*r));
            r = rmq_min_.next_leq(1, v - 1, static_cast<std::int64_t>(y) - 1, *r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /* Stateless neighbor cursor: pass the previously returned neighbor (or
     * none to start); yields every neighbor exactly once, smaller side first.
     * Within a side the array backend follows its extremum-tree order, the
     * grid backend ascending columns. */
    std::optional<vertex> next_neighbor(vertex u, std::optional<vertex> w = std::nullopt) const {
        check(u);
        const std::uint32_t y = row(u);
        if (w) {
            check(*w);
            if (!adjacent(u, *w)) throw std::invalid_argument("not a neighbor of u");
        }
        if (!w || *w < u) {
            std::optional<std::size_t> r;
            if (grid_) {
                const vertex lo = w ? *w + 1 : 1;
                r = grid_first_x(lo, u - 1, y + 1, n_);
            } else if (u > 1) {
                r = w ? rmq_max_.next_geq(1, u - 1, static_cast<std::int64_t>(y) + 1, *w)
                      : rmq_max_.first_geq(1, u - 1, static_cast<std::int64_t>(y) + 1);
            }
            if (r) return static_cast<vertex>(*r);
            /* fall through to the first larger neighbor */
            if (u == n_) return std::nullopt;
            if (grid_) {
                auto s = grid_first_x(u + 1, n_, 1, y - 1);
                return s ? std::optional<vertex>(static_cast<vertex>(*s)) : std::nullopt;
            }
            auto s = rmq_min_.first_leq(u + 1, n_, static_cast<std::int64_t>(y) - 1);
            return s ? std::optional<vertex>(static_cast<vertex>(*s)) : std::nullopt;
        }
        std::optional<std::size_t> r;
        if (grid_)
            r = grid_first_x(*w + 1, n_, 1, y - 1);
        else
            r = rmq_min_.next_leq(u + 1, n_, static_cast<std::int64_t>(y) - 1, *w);
        return r ? std::optional<vertex>(static_cast<vertex>(*r)) : std::nullopt;
    }

    std::uint32_t degree(vertex v) const {
        check(v);
        const std::uint32_t y = row(v);
        if (grid_)
            return static_cast<std::uint32_t>(grid_->count(1, v - 1, y + 1, n_) +
                                              grid_->count(v + 1, n_, 1, y - 1));
        std::uint32_t d = 0;
        if (v > 1) {
            auto r = rmq_max_.first_geq(1, v - 1, static_cast<std::int64_t>(y) + 1);
            while (r) {
                ++d;
                r = rmq_max_.next_geq(1, v - 1, static_cast<std::int64_t>(y) + 1, *r);
            }
        }
        if (v < n_) {
            auto r = rmq_min_.first_leq(v + 1, n_, static_cast<std::int64_t>(y) - 1);
            while (r) {
                ++d;
                r = rmq_min_.next_leq(v + 1, n_, static_cast<std::int64_t>(y) - 1, *r);
            }
        }
        return d;
    }

    ExtremalNeighbors extremal(vertex v) const {
        check(v);
        const std::uint32_t y = row(v); /* the only permutation probe */
        const auto c = view();
        return {c.a_minus_y(y), c.a_plus(v), c.b_minus(v), c.b_plus_y(y)};
    }

    std::uint32_t distance(vertex u, vertex v) const {
        check(u);
        check(v);
        return detail::cascade(view(), u, row(u), v, row(v)).dist;
    }

    vertex spath_first(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("no hop from a vertex to itself");
        const auto hr = detail::cascade(view(), u, row(u), v, row(v));
        if (hr.dist == kInfDist) throw std::invalid_argument("vertices are disconnected");
        return hr.hop;
    }

    std::vector<vertex> spath(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return {u};
        const auto c = view();
        const std::uint32_t yv = row(v);
        auto hr = detail::cascade(c, u, row(u), v, yv);
        if (hr.dist == kInfDist) throw std::invalid_argument("vertices are disconnected");
        const std::uint32_t total = hr.dist;
        std::vector<vertex> out;
        out.reserve(total + 1);
        out.push_back(u);
        vertex x = u;
        for (std::uint32_t step = 0; step < total && x != v; ++step) {
            x = hr.hop;
            out.push_back(x);
            if (x != v) hr = detail::cascade(c, x, row(x), v, yv);
        }
        if (x != v) throw std::logic_error("shortest-path walk overran its length");
        return out;
    }

    PgSpace report_bits() const {
        PgSpace s;
        if (pi_) s.pi = pi_->report_bits();
        s.flags = ax_.report_bits().total() + bx_.report_bits().total() +
                  ay_.report_bits().total() + by_.report_bits().total();
        s.rmq = rmq_max_.report_bits() + rmq_min_.report_bits();
        s.oracles = ga_.report_bits() + gb_.report_bits();
        if (grid_) s.grid = grid_->report_bits();
        return s;
    }

    /* Layout: magic, n, backend tag, packed rows (Pi[v]-1 at ceil(lg n) bits),
     * then Ax, Bx, Ay, By. Oracles, extremum indexes, and the grid are
     * deterministic derivations and are rebuilt on load. */
    void serialize(std::ostream& os) const {
        write_magic(os, "SPGR1");
        write_u64(os, n_);
        write_u64(os, static_cast<std::uint64_t>(backend_));
        if (pi_) {
            pi_->serialize(os);
        } else {
            PackedIntVec tmp;
            tmp.reset(n_, std::max(1u, ceil_log2(n_)));
            for (vertex v = 1; v <= n_; ++v) tmp.set(v - 1, grid_->y_for_x(v) - 1);
            tmp.serialize(os);
        }
        ax_.serialize(os);
        bx_.serialize(os);
        ay_.serialize(os);
        by_.serialize(os);
    }

    static SuccinctPermGraph load(std::istream& is) {
        expect_magic(is, "SPGR1");
        const std::uint64_t n = read_u64(is);
        const std::uint64_t tag = read_u64(is);
        if (n == 0 || n > 0xFFFFFFFFull) throw std::runtime_error("bad graph size");
        if (tag > 1) throw std::runtime_error("bad backend tag");
        SuccinctPermGraph g;
        g.n_ = static_cast<std::uint32_t>(n);
        g.backend_ = static_cast<PgBackend>(tag);
        auto pv = std::make_shared<PackedIntVec>(PackedIntVec::load(is));
        if (pv->size() != n) throw std::runtime_error("row data does not match size");
        g.ax_ = BitSeq::load(is);
        g.bx_ = BitSeq::load(is);
        g.ay_ = BitSeq::load(is);
        g.by_ = BitSeq::load(is);
        if (g.ax_.size() != n || g.bx_.size() != n || g.ay_.size() != n || g.by_.size() != n)
            throw std::runtime_error("flag data does not match size");
        g.build_oracles();
        if (g.backend_ == PgBackend::array) {
            g.pi_ = std::move(pv);
            g.build_rmqs();
        } else {
            std::vector<std::uint32_t> rows(n);
            for (std::size_t i = 0; i < n; ++i)
                rows[i] = static_cast<std::uint32_t>(pv->get(i)) + 1;
            g.grid_ = std::make_shared<PermGrid>(Permutation::from_values(std::move(rows)));
        }
        return g;
    }

    detail::ClassView view() const { return {&ax_, &bx_, &ay_, &by_, &ga_, &gb_}; }

private:
    void check(vertex v) const {
        if (v < 1 || v > n_) throw std::out_of_range("vertex index");
    }

    std::uint32_t row(vertex v) const {
        return pi_ ? static_cast<std::uint32_t>(pi_->get(v - 1)) + 1 : grid_->y_for_x(v);
    }

    void build_oracles() {
        auto pr = detail::build_class_oracles(ax_, bx_, ay_, by_);
        ga_ = std::move(pr.first);
        gb_ = std::move(pr.second);
    }

    void build_rmqs() {
        auto pv = pi_;
        ValueAccessor acc{n_, [pv](std::size_t i) {
                              return static_cast<std::int64_t>(pv->get(i - 1)) + 1;
                          }};
        rmq_max_ = RmqIndex(acc, RmqOrientation::max, {8});
        rmq_min_ = RmqIndex(std::move(acc), RmqOrientation::min, {8});
    }

    static std::vector<vertex> xs_of(const std::vector<GridPoint>& pts) {
        std::vector<vertex> out;
        out.reserve(pts.size());
        for (const auto& p : pts) out.push_back(p.x);
        return out;
    }

    /* smallest column in [xlo, xhi] holding a point with row in [y1, y2] */
    std::optional<std::size_t> grid_first_x(std::uint32_t xlo, std::uint32_t xhi,
                                            std::uint32_t y1, std::uint32_t y2) const {
        if (xlo > xhi || grid_->count(xlo, xhi, y1, y2) == 0) return std::nullopt;
        std::uint32_t lo = xlo, hi = xhi;
        while (lo < hi) {
            const std::uint32_t mid = lo + (hi - lo) / 2;
            if (grid_->count(xlo, mid, y1, y2) >= 1)
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

    std::uint32_t n_ = 0;
    PgBackend backend_ = PgBackend::array;
    std::shared_ptr<PackedIntVec> pi_;
    std::shared_ptr<PermGrid> grid_;
    RmqIndex rmq_max_, rmq_min_;
    BitSeq ax_, bx_, ay_, by_;
    ProperIntervalOracle ga_, gb_;
};

} // namespace spg
