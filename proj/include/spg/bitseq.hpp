#pragma once

/*
 * Static bit sequence with rank/select support.
 *
 * Public positions are 1-based: access(i) for i in [1..n], rank(i, alpha)
 * counts alpha-bits in the prefix [1..i] (rank(0,.) = 0), select(k, alpha)
 * returns the position of the k-th alpha-bit or nothing if there are fewer
 * than k.
 *
 * Directory layout ("fast" profile; "compact" halves the overhead at the cost
 * of a longer in-block scan):
 *   - absolute rank (64-bit) per 4096-bit superblock,
 *   - 12-bit relative rank per 512-bit block (8 per superblock),
 *   - optional position samples every 4096-th alpha-bit per select family.
 * Overhead is about 0.039 bits/bit for rank plus 0.0156 bits/bit per sampled
 * select family on dense sequences; "compact" uses 8192/1024/13 and halves
 * both. Shared lookup tables are program constants, not per-instance space.
 *
 * Serialization writes the length (64-bit little-endian) followed by the
 * packed words; directories are rebuilt on load.
 */

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#ifdef __BMI2__
#include <immintrin.h>
#endif

#include "spg/common.hpp"
#include "spg/intvec.hpp"

namespace spg {

enum class DirProfile { fast, compact };

struct BitSeqOptions {
    DirProfile profile = DirProfile::fast;
    bool sample1 = true; /* build position samples for select(., 1) */
    bool sample0 = true; /* build position samples for select(., 0) */
};

namespace detail {

/* Position (0-based from LSB) of the r-th (r >= 1) set bit of w. */
inline std::uint32_t select_in_word(std::uint64_t w, std::uint32_t r) {
#ifdef __BMI2__
    return static_cast<std::uint32_t>(std::countr_zero(_pdep_u64(1ull << (r - 1), w)));
#else
    std::uint32_t seen = 0;
    for (std::uint32_t byte = 0; byte < 8; ++byte) {
        std::uint32_t c = std::popcount((w >> (8 * byte)) & 0xFFull);
        if (seen + c >= r) {
            std::uint64_t part = (w >> (8 * byte)) & 0xFFull;
            for (std::uint32_t bit = 0; bit < 8; ++bit)
                if ((part >> bit) & 1u) {
                    if (++seen == r) return 8 * byte + bit;
                }
        } else {
            seen += c;
        }
    }
    return 64; /* unreachable for valid r */
#endif
}

} // namespace detail

class BitSeq {
public:
    BitSeq() = default;

    explicit BitSeq(std::size_t n, BitSeqOptions opts = {}) : n_(n), opts_(opts) {
        words_.assign(div_ceil(n, 64), 0);
    }

    BitSeq(const std::vector<bool>& bits, BitSeqOptions opts = {}) : BitSeq(bits.size(), opts) {
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) set(i + 1);
        finalize();
    }

    /* --- build phase --- */

    void set(std::size_t i, bool v = true) {
        if (finalized_) throw std::logic_error("BitSeq already finalized");
        check_pos(i);
        const std::size_t j = i - 1;
        if (v)
            words_[j >> 6] |= 1ull << (j & 63);
        else
            words_[j >> 6] &= ~(1ull << (j & 63));
    }

    void finalize() {
        if (finalized_) return;
        build_dirs();
        finalized_ = true;
    }

    /* --- queries (require finalize) --- */

    std::size_t size() const { return n_; }

    bool access(std::size_t i) const {
        check_pos(i);
        const std::size_t j = i - 1;
        return (words_[j >> 6] >> (j & 63)) & 1u;
    }

    std::uint64_t ones() const { return ones_; }
    std::uint64_t zeros() const { return n_ - ones_; }

    /* Number of alpha-bits in [1..i]; i may be 0..n. */
    std::uint64_t rank(std::size_t i, bool alpha = true) const {
        if (i > n_) throw std::out_of_range("rank index");
        std::uint64_t r1 = rank1(i);
        return alpha ? r1 : i - r1;
    }

    /* Position of the k-th alpha-bit (k >= 1), or nothing. */
    std::optional<std::size_t> select(std::uint64_t k, bool alpha = true) const {
        const std::uint64_t total = alpha ? ones_ : zeros();
        if (k == 0 || k > total) return std::nullopt;
        return alpha ? select1(k) : select0(k);
    }

    /* --- raw access for structures layered on top --- */

    const std::vector<std::uint64_t>& words() const { return words_; }

    /* --- space & serialization --- */

    struct SpaceBreakdown {
        std::uint64_t payload = 0;
        std::uint64_t rank_dir = 0;
        std::uint64_t select_dir = 0;
        std::uint64_t total() const { return payload + rank_dir + select_dir; }
    };

    SpaceBreakdown report_bits() const {
        SpaceBreakdown s;
        s.payload = static_cast<std::uint64_t>(words_.size()) * 64;
        s.rank_dir = static_cast<std::uint64_t>(abs_.size()) * 64 + rel_.report_bits();
        s.select_dir = (static_cast<std::uint64_t>(sample1_.size()) + sample0_.size()) * 64;
        return s;
    }

    void serialize(std::ostream& os) const {
        write_u64(os, n_);
        write_words(os, words_);
    }

    static BitSeq load(std::istream& is, BitSeqOptions opts = {}) {
        std::uint64_t n = read_u64(is);
        BitSeq b(n, opts);
        b.words_ = read_words(is, b.words_.size());
        b.finalize();
        return b;
    }

private:
    /* profile parameters */
    std::uint32_t sb_bits() const { return opts_.profile == DirProfile::fast ? 4096u : 8192u; }
    std::uint32_t bl_bits() const { return opts_.profile == DirProfile::fast ? 512u : 1024u; }
    std::uint32_t rel_width() const { return opts_.profile == DirProfile::fast ? 12u : 13u; }
    std::uint32_t sample_rate() const { return sb_bits(); }

    void check_pos(std::size_t i) const {
        if (i < 1 || i > n_) throw std::out_of_range("bit index");
    }

    void build_dirs() {
        const std::size_t n_sb = div_ceil(n_ ? n_ : 1, sb_bits());
        const std::size_t n_bl = div_ceil(n_ ? n_ : 1, bl_bits());
        abs_.assign(n_sb + 1, 0);
        rel_.reset(n_bl, rel_width());

        const std::uint32_t words_per_bl = bl_bits() / 64;
        const std::uint32_t bl_per_sb = sb_bits() / bl_bits();
        std::uint64_t running = 0, sb_base = 0;
        for (std::size_t b = 0; b < n_bl; ++b) {
            if (b % bl_per_sb == 0) {
                abs_[b / bl_per_sb] = running;
                sb_base = running;
            }
            rel_.set(b, running - sb_base);
            const std::size_t w0 = b * words_per_bl;
            for (std::size_t w = w0; w < w0 + words_per_bl && w < words_.size(); ++w)
                running += std::popcount(mask_word(w));
        }
        abs_[n_sb] = running;
        ones_ = running;

        if (opts_.sample1) build_samples(sample1_, true);
        if (opts_.sample0) build_samples(sample0_, false);
    }

    /* Word w with any padding bits beyond n cleared. */
    std::uint64_t mask_word(std::size_t w) const {
        std::uint64_t x = words_[w];
        if ((w + 1) * 64 > n_) {
            const std::uint32_t keep = static_cast<std::uint32_t>(n_ - w * 64);
            x &= (keep == 64) ? ~0ull : ((1ull << keep) - 1);
        }
        return x;
    }

    void build_samples(std::vector<std::uint64_t>& out, bool alpha) {
        out.clear();
        std::uint64_t cnt = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = mask_word(w);
            if (!alpha) {
                x = ~x;
                if ((w + 1) * 64 > n_) {
                    const std::uint32_t keep = static_cast<std::uint32_t>(n_ - w * 64);
                    x &= (keep == 64) ? ~0ull : ((1ull << keep) - 1);
                }
            }
            std::uint32_t c = std::popcount(x);
            /* record position of every (j*rate + 1)-th alpha bit */
            while (c > 0) {
                std::uint64_t next_target = out.size() * sample_rate() + 1;
                if (cnt + c < next_target) break;
                std::uint32_t r = static_cast<std::uint32_t>(next_target - cnt);
                out.push_back(w * 64 + detail::select_in_word(x, r) + 1);
                /* clear bits up to and including the found one */
                std::uint32_t pos = detail::select_in_word(x, r);
                std::uint64_t cleared = (pos == 63) ? 0 : (x & ~((2ull << pos) - 1));
                cnt += std::popcount(x) - std::popcount(cleared);
                x = cleared;
                c = std::popcount(x);
            }
            cnt += c;
        }
    }

    std::uint64_t rank1(std::size_t i) const {
        if (i == 0) return 0;
        const std::size_t pos = i; /* prefix length */
        const std::size_t b = (pos - 1) / bl_bits();
        const std::size_t sb = (pos - 1) / sb_bits();
        std::uint64_t r = abs_[sb] + rel_.get(b);
        const std::uint32_t words_per_bl = bl_bits() / 64;
        const std::size_t w0 = b * words_per_bl;
        const std::size_t wlast = (pos - 1) >> 6;
        for (std::size_t w = w0; w < wlast; ++w) r += std::popcount(mask_word(w));
        const std::uint32_t keep = static_cast<std::uint32_t>(pos - wlast * 64);
        std::uint64_t x = mask_word(wlast);
        x &= (keep == 64) ? ~0ull : ((1ull << keep) - 1);
        return r + std::popcount(x);
    }

    /* count of alpha-bits strictly before superblock s */
    std::uint64_t sb_count(std::size_t s, bool alpha) const {
        return alpha ? abs_[s]
                     : std::min<std::uint64_t>(static_cast<std::uint64_t>(s) * sb_bits(), n_) - abs_[s];
    }

    std::size_t select_generic(std::uint64_t k, bool alpha, const std::vector<std::uint64_t>& samples) const {
        /* narrow superblock range via samples if available, else whole range */
        const std::size_t n_sb = abs_.size() - 1;
        std::size_t lo = 0, hi = n_sb; /* invariant: sb_count(lo) < k <= sb_count(hi) possible */
        if (!samples.empty()) {
            const std::size_t j = (k - 1) / sample_rate();
            lo = (samples[j] - 1) / sb_bits();
            hi = (j + 1 < samples.size()) ? (samples[j + 1] - 1) / sb_bits() + 1 : n_sb;
        }
        /* binary search: largest s with sb_count(s) < k; answer inside superblock s */
        while (lo < hi) {
            std::size_t mid = (lo + hi + 1) / 2;
            if (sb_count(mid, alpha) < k)
                lo = mid;
            else
                hi = mid - 1;
        }
        const std::size_t s = lo;
        std::uint64_t remain = k - sb_count(s, alpha);

        /* scan blocks of superblock s */
        const std::uint32_t bl_per_sb = sb_bits() / bl_bits();
        const std::size_t b0 = s * bl_per_sb;
        const std::size_t bmax = std::min(b0 + bl_per_sb, rel_.size());
        std::size_t b = b0;
        for (std::size_t j = b0 + 1; j < bmax; ++j) {
            const std::uint64_t before =
                alpha ? rel_.get(j)
                      : static_cast<std::uint64_t>(j - b0) * bl_bits() - rel_.get(j);
            if (before < remain)
                b = j;
            else
                break;
        }
        {
            const std::uint64_t before =
                alpha ? rel_.get(b)
                      : static_cast<std::uint64_t>(b - b0) * bl_bits() - rel_.get(b);
            remain -= before;
        }

        /* scan words of block b */
        const std::uint32_t words_per_bl = bl_bits() / 64;
        const std::size_t w0 = b * words_per_bl;
        for (std::size_t w = w0; w < words_.size(); ++w) {
            std::uint64_t x = mask_word(w);
            if (!alpha) {
                x = ~x;
                if ((w + 1) * 64 > n_) {
                    const std::uint32_t keep = static_cast<std::uint32_t>(n_ - w * 64);
                    x &= (keep == 64) ? ~0ull : ((1ull << keep) - 1);
                }
            }
            const std::uint32_t c = std::popcount(x);
            if (c >= remain)
                return w * 64 + detail::select_in_word(x, static_cast<std::uint32_t>(remain)) + 1;
            remain -= c;
        }
        throw std::logic_error("select: ran off the end"); /* guarded by caller */
    }

    std::size_t select1(std::uint64_t k) const { return select_generic(k, true, sample1_); }
    std::size_t select0(std::uint64_t k) const { return select_generic(k, false, sample0_); }

    std::size_t n_ = 0;
    BitSeqOptions opts_;
    bool finalized_ = false;
    std::vector<std::uint64_t> words_;
    std::uint64_t ones_ = 0;

    std::vector<std::uint64_t> abs_;  /* absolute rank1 at superblock starts, + total */
    PackedIntVec rel_;                /* rank1 within superblock at block starts */
    std::vector<std::uint64_t> sample1_, sample0_;
};

} // namespace spg
