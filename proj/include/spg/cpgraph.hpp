#pragma once

/*
 * Succinct circular permutation graph.
 *
 * A circular instance is an ordered permutation (rows Pi = pi^-1) plus a
 * chord type per vertex: N chords stay inside the diagram, F chords wrap off
 * the right edge, B chords wrap off the left edge. Unrolling the diagram
 * three times yields a plain ordered permutation graph G3 on 2n..3n grid
 * points: vertex v contributes copies in columns v, v+n, v+2n, with rows
 * shifted one block up (F) or down (B) for wrap chords; the copy whose row
 * would leave the 3n-range is absent. Every G3 edge between copies of u and
 * v is a circular edge, and every circular edge is witnessed from the center
 * copy of each endpoint, so all queries reduce to plain-graph machinery over
 * G3: adjacency is a three-term inversion test against the center copies,
 * neighborhoods stream from two range-extremum indexes over the virtual
 * 3n-value row sequence (absent copies probe as +/- infinity), and distances
 * take the minimum of the class-bitvector cascade over the at most nine
 * existing copy pairs, each in O(1). Only the n packed rows and two type
 * bitvectors are stored; every structure over the 3n domain costs O(n) bits
 * and is rebuilt on load.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spg/bitseq.hpp"
#include "spg/common.hpp"
#include "spg/core.hpp"
#include "spg/intvec.hpp"
#include "spg/pgraph.hpp"
#include "spg/rmq.hpp"

namespace spg {

enum class ChordType : std::uint8_t { N = 0, F = 1, B = 2 };
enum class CopyKind : std::uint8_t { left = 0, center = 1, right = 2 };

struct CpgViolation {
    vertex u = 0, v = 0; /* violating pair, u < v */
    int rule = 0;        /* 1, 2, or 3; see validate_chord_types */
};

struct CpgSpace {
    std::uint64_t pi = 0;      /* packed rows */
    std::uint64_t types = 0;   /* wrap-forward + wrap-backward bitvectors */
    std::uint64_t flags = 0;   /* Ax, Bx, Ay, By over the 3n domain */
    std::uint64_t rmq = 0;     /* both range-extremum indexes */
    std::uint64_t oracles = 0; /* GA + GB of the unrolled graph */
    std::uint64_t total() const { return pi + types + flags + rmq + oracles; }
};

/* A (rows, types) pair describes a proper circular diagram iff no pair u < v
 * falls into one of three forbidden patterns:
 *   rule 1 - inversion (rows[u] > rows[v]) with t(u) = F and t(v) = N,
 *   rule 2 - inversion with t(u) = N and t(v) = B,
 *   rule 3 - no inversion while the chords wrap in opposite directions
 *            ({t(u), t(v)} = {F, B}).
 * Each pattern forces two chords to cross twice on the cylinder; two wrap
 * chords of the same direction are parallel and never conflict. Returns the
 * first violation - smallest v, lowest rule number at that v, the witness u
 * with the extremal row - or nullopt when the pair is valid. One O(n) scan
 * carrying prefix extrema per type class. */
inline std::optional<CpgViolation> validate_chord_types(const Permutation& pi_inverse,
                                                        const std::vector<ChordType>& types) {
    const std::uint32_t n = pi_inverse.size();
    if (types.size() != n) throw std::invalid_argument("one chord type per vertex required");
    std::uint32_t max_f = 0, max_n = 0, min_f = n + 1, min_b = n + 1;
    vertex arg_f = 0, arg_n = 0, arg_min_f = 0, arg_min_b = 0;
    for (vertex v = 1; v <= n; ++v) {
        const std::uint32_t r = pi_inverse.at(v);
        const ChordType tv = types[v - 1];
        if (tv == ChordType::N) {
            if (max_f > r) return CpgViolation{arg_f, v, 1};
            if (r > max_n) {
                max_n = r;
                arg_n = v;
            }
        } else if (tv == ChordType::B) {
            if (max_n > r) return CpgViolation{arg_n, v, 2};
            if (min_f < r) return CpgViolation{arg_min_f, v, 3};
            if (r < min_b) {
                min_b = r;
                arg_min_b = v;
            }
        } else {
            if (min_b < r) return CpgViolation{arg_min_b, v, 3};
            if (r > max_f) {
                max_f = r;
                arg_f = v;
            }
            if (r < min_f) {
                min_f = r;
                arg_min_f = v;
            }
        }
    }
    return std::nullopt;
}

class CircularPermGraph {
public:
    CircularPermGraph() = default;

    static CircularPermGraph build(const Permutation& pi_inverse,
                                   const std::vector<ChordType>& types) {
        const std::uint32_t n = pi_inverse.size();
        if (n == 0) throw std::invalid_argument("empty permutation");
        if (auto viol = validate_chord_types(pi_inverse, types))
            throw std::invalid_argument(
                "improper circular diagram: pair (" + std::to_string(viol->u) + "," +
                std::to_string(viol->v) + ") violates rule " + std::to_string(viol->rule));
        CircularPermGraph g;
        g.n_ = n;
        auto pl = std::make_shared<Payload>();
        pl->n = n;
        pl->pi.reset(n, std::max(1u, ceil_log2(n)));
        pl->tf = BitSeq(n);
        pl->tb = BitSeq(n);
        for (vertex v = 1; v <= n; ++v) {
            pl->pi.set(v - 1, pi_inverse.at(v) - 1);
            if (types[v - 1] == ChordType::F) pl->tf.set(v, true);
            if (types[v - 1] == ChordType::B) pl->tb.set(v, true);
        }
        pl->tf.finalize();
        pl->tb.finalize();
        g.payload_ = std::move(pl);
        g.build_derived();
        return g;
    }

    std::uint32_t size() const { return n_; }

    ChordType type(vertex v) const {
        check(v);
        return payload_->type(v);
    }

    /* Pi[v], the row of the center copy before its wrap shift */
    std::uint32_t pi_inverse_at(vertex v) const {
        check(v);
        return payload_->row(v);
    }

    /* Row of one copy of v in the unrolled grid; empty when the copy is
     * absent (B chords have no left copy, F chords no right copy). */
    std::optional<std::uint32_t> y_coord(CopyKind copy, vertex v) const {
        check(v);
        return payload_->y_at(x_of(copy, v));
    }

    bool adjacent(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        const std::uint32_t ycu = *payload_->y_at(x_of(CopyKind::center, u));
        const std::uint32_t ycv = *payload_->y_at(x_of(CopyKind::center, v));
        if (ycu > ycv) return true;
        const auto ylv = payload_->y_at(x_of(CopyKind::left, v));
        if (ylv && *ylv > ycu) return true;
        const auto yru = payload_->y_at(x_of(CopyKind::right, u));
        return yru && ycv > *yru;
    }

    /* Ascending, deduplicated (a neighbor can be witnessed by two copies). */
    std::vector<vertex> neighbors(vertex v) const {
        check(v);
        const std::size_t xc = x_of(CopyKind::center, v);
        const std::int64_t yc = static_cast<std::int64_t>(*payload_->y_at(xc));
        const std::size_t m = 3ull * n_;
        std::vector<vertex> out;
        auto r = rmq3_max_.first_geq(1, xc - 1, yc + 1);
        while (r) {
            out.push_back(to_vertex(*r));
            r = rmq3_max_.next_geq(1, xc - 1, yc + 1, *r);
        }
        r = rmq3_min_.first_leq(xc + 1, m, yc - 1);
        while (r) {
            out.push_back(to_vertex(*r));
            r = rmq3_min_.next_leq(xc + 1, m, yc - 1, *r);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::uint32_t degree(vertex v) const {
        return static_cast<std::uint32_t>(neighbors(v).size());
    }

    std::uint32_t distance(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return 0;
        std::uint32_t best = kInfDist;
        for_each_pair(u, v, [&](std::size_t, std::size_t, const detail::HopResult& hr) {
            best = std::min(best, hr.dist);
        });
        return best;
    }

    vertex spath_first(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("no hop from a vertex to itself");
        std::uint32_t best = kInfDist;
        vertex hop = 0;
        for_each_pair(u, v, [&](std::size_t, std::size_t, const detail::HopResult& hr) {
            if (hr.dist < best) {
                best = hr.dist;
                hop = hr.hop;
            }
        });
        if (best == kInfDist) throw std::invalid_argument("vertices are disconnected");
        return to_vertex(hop);
    }

    std::vector<vertex> spath(vertex u, vertex v) const {
        check(u);
        check(v);
        if (u == v) return {u};
        std::uint32_t best = kInfDist;
        std::size_t xs = 0, xt = 0;
        detail::HopResult first{};
        for_each_pair(u, v, [&](std::size_t xp, std::size_t xq, const detail::HopResult& hr) {
            if (hr.dist < best) {
                best = hr.dist;
                xs = xp;
                xt = xq;
                first = hr;
            }
        });
        if (best == kInfDist) throw std::invalid_argument("vertices are disconnected");
        const auto c = view3();
        const std::uint32_t yt = *payload_->y_at(xt);
        std::vector<vertex> out;
        out.reserve(best + 1);
        out.push_back(u);
        std::size_t x = xs;
        auto hr = first;
        for (std::uint32_t step = 0; step < best && x != xt; ++step) {
            x = hr.hop;
            out.push_back(to_vertex(x));
            if (x != xt)
                hr = detail::cascade(c, static_cast<vertex>(x), *payload_->y_at(x),
                                     static_cast<vertex>(xt), yt);
        }
        if (x != xt) throw std::logic_error("shortest-path walk overran its length");
        return out;
    }

    CpgSpace report_bits() const {
        CpgSpace s;
        s.pi = payload_->pi.report_bits();
        s.types = payload_->tf.report_bits().total() + payload_->tb.report_bits().total();
        s.flags = ax3_.report_bits().total() + bx3_.report_bits().total() +
                  ay3_.report_bits().total() + by3_.report_bits().total();
        s.rmq = rmq3_max_.report_bits() + rmq3_min_.report_bits();
        s.oracles = ga3_.report_bits() + gb3_.report_bits();
        return s;
    }

    /* Layout: magic, n, packed rows (Pi[v]-1 at ceil(lg n) bits), the
     * wrap-forward bitvector, the wrap-backward bitvector. Everything over
     * the 3n domain is a deterministic derivation and is rebuilt on load,
     * which also re-validates the diagram rules. */
    void serialize(std::ostream& os) const {
        write_magic(os, "SCPG1");
        write_u64(os, n_);
        payload_->pi.serialize(os);
        payload_->tf.serialize(os);
        payload_->tb.serialize(os);
    }

    static CircularPermGraph load(std::istream& is) {
        expect_magic(is, "SCPG1");
        const std::uint64_t n = read_u64(is);
        if (n == 0 || n > 0xFFFFFFFFull) throw std::runtime_error("bad graph size");
        PackedIntVec pv = PackedIntVec::load(is);
        BitSeq tf = BitSeq::load(is);
        BitSeq tb = BitSeq::load(is);
        if (pv.size() != n || tf.size() != n || tb.size() != n)
            throw std::runtime_error("payload does not match size");
        std::vector<std::uint32_t> rows(n);
        std::vector<ChordType> types(n, ChordType::N);
        for (std::size_t i = 0; i < n; ++i) {
            rows[i] = static_cast<std::uint32_t>(pv.get(i)) + 1;
            const bool f = tf.access(i + 1), b = tb.access(i + 1);
            if (f && b) throw std::runtime_error("bad chord type encoding");
            if (f) types[i] = ChordType::F;
            if (b) types[i] = ChordType::B;
        }
        try {
            return build(Permutation::from_values(std::move(rows)), types);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(e.what());
        }
    }

private:
    struct Payload {
        std::uint32_t n = 0;
        PackedIntVec pi;
        BitSeq tf, tb;

        ChordType type(vertex v) const {
            if (tf.access(v)) return ChordType::F;
            if (tb.access(v)) return ChordType::B;
            return ChordType::N;
        }
        std::uint32_t row(vertex v) const {
            return static_cast<std::uint32_t>(pi.get(v - 1)) + 1;
        }
        /* Row of the point in column x of the unrolled grid: the own row plus
         * one block per copy index, one more for F chords, one less for B. */
        std::optional<std::uint32_t> y_at(std::size_t x) const {
            const std::uint32_t k = static_cast<std::uint32_t>((x - 1) / n);
            const vertex v = static_cast<vertex>((x - 1) % n + 1);
            const ChordType tv = type(v);
            if (k == 0 && tv == ChordType::B) return std::nullopt;
            if (k == 2 && tv == ChordType::F) return std::nullopt;
            const std::uint32_t shift =
                k + (tv == ChordType::F ? 1 : tv == ChordType::B ? -1 : 0);
            return row(v) + shift * n;
        }
    };

    void check(vertex v) const {
        if (v < 1 || v > n_) throw std::out_of_range("vertex index");
    }

    std::size_t x_of(CopyKind copy, vertex v) const {
        return static_cast<std::size_t>(copy) * n_ + v;
    }

    vertex to_vertex(std::size_t x) const {
        return static_cast<vertex>((x - 1) % n_ + 1);
    }

    detail::ClassView view3() const { return {&ax3_, &bx3_, &ay3_, &by3_, &ga3_, &gb3_}; }

    /* Runs f over every existing copy pair - center first on both sides, so
     * equal distances resolve toward the main copies - with the cascade
     * result for that pair of grid points. */
    template <class F>
    void for_each_pair(vertex u, vertex v, F&& f) const {
        const auto c = view3();
        static constexpr std::array<CopyKind, 3> order = {CopyKind::center, CopyKind::left,
                                                          CopyKind::right};
        for (const CopyKind ku : order) {
            const std::size_t xu = x_of(ku, u);
            const auto yu = payload_->y_at(xu);
            if (!yu) continue;
            for (const CopyKind kv : order) {
                const std::size_t xv = x_of(kv, v);
                const auto yv = payload_->y_at(xv);
                if (!yv) continue;
                f(xu, xv,
                  detail::cascade(c, static_cast<vertex>(xu), *yu, static_cast<vertex>(xv),
                                  *yv));
            }
        }
    }

    void build_derived() {
        const std::size_t m = 3ull * n_;
        std::vector<std::uint32_t> yv(m + 1, 0); /* 0 marks an absent copy */
        for (std::size_t x = 1; x <= m; ++x)
            if (auto y = payload_->y_at(x)) yv[x] = *y;
        std::vector<bool> in_a(m + 1, false), in_b(m + 1, false);
        std::uint32_t best = 0;
        for (std::size_t x = 1; x <= m; ++x)
            if (yv[x] > best) {
                in_a[x] = true;
                best = yv[x];
            }
        best = static_cast<std::uint32_t>(m) + 1;
        for (std::size_t x = m; x >= 1; --x)
            if (yv[x] && yv[x] < best) {
                in_b[x] = true;
                best = yv[x];
            }
        ax3_ = BitSeq(m);
        bx3_ = BitSeq(m);
        ay3_ = BitSeq(m);
        by3_ = BitSeq(m);
        for (std::size_t x = 1; x <= m; ++x) {
            if (in_a[x]) {
                ax3_.set(x, true);
                ay3_.set(yv[x], true);
            }
            if (in_b[x]) {
                bx3_.set(x, true);
                by3_.set(yv[x], true);
            }
        }
        ax3_.finalize();
        bx3_.finalize();
        ay3_.finalize();
        by3_.finalize();
        auto pr = detail::build_class_oracles(ax3_, bx3_, ay3_, by3_);
        ga3_ = std::move(pr.first);
        gb3_ = std::move(pr.second);
        auto pl = payload_;
        ValueAccessor max_acc{m, [pl](std::size_t x) {
                                  auto y = pl->y_at(x);
                                  return y ? static_cast<std::int64_t>(*y) : kValNegInf;
                              }};
        ValueAccessor min_acc{m, [pl](std::size_t x) {
                                  auto y = pl->y_at(x);
                                  return y ? static_cast<std::int64_t>(*y) : kValPosInf;
                              }};
        rmq3_max_ = RmqIndex(std::move(max_acc), RmqOrientation::max, {8});
        rmq3_min_ = RmqIndex(std::move(min_acc), RmqOrientation::min, {8});
    }

    std::uint32_t n_ = 0;
    std::shared_ptr<Payload> payload_;
    RmqIndex rmq3_max_, rmq3_min_;
    BitSeq ax3_, bx3_, ay3_, by3_;
    ProperIntervalOracle ga3_, gb3_;
};

} // namespace spg
