#pragma once

/*
 * Fixed-width packed integer array: m entries of w bits each (1 <= w <= 64),
 * stored contiguously in 64-bit words. 0-based low-level container used by the
 * bit-sequence directories and for storing permutation values in exactly
 * ceil(lg n) bits per entry.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spg/common.hpp"

namespace spg {

class PackedIntVec {
public:
    PackedIntVec() = default;

    PackedIntVec(std::size_t size, std::uint32_t width) { reset(size, width); }

    void reset(std::size_t size, std::uint32_t width) {
        if (width < 1 || width > 64) throw std::invalid_argument("entry width");
        m_ = size;
        w_ = width;
        words_.assign(div_ceil(static_cast<std::uint64_t>(size) * width, 64) , 0);
    }

    std::size_t size() const { return m_; }
    std::uint32_t width() const { return w_; }

    std::uint64_t get(std::size_t i) const {
        const std::uint64_t off = static_cast<std::uint64_t>(i) * w_;
        const std::size_t wd = off >> 6;
        const std::uint32_t sh = off & 63;
        std::uint64_t x = words_[wd] >> sh;
        if (sh + w_ > 64) x |= words_[wd + 1] << (64 - sh);
        return x & mask();
    }

    void set(std::size_t i, std::uint64_t v) {
        const std::uint64_t off = static_cast<std::uint64_t>(i) * w_;
        const std::size_t wd = off >> 6;
        const std::uint32_t sh = off & 63;
        words_[wd] = (words_[wd] & ~(mask() << sh)) | ((v & mask()) << sh);
        if (sh + w_ > 64) {
            const std::uint32_t hi = sh + w_ - 64; /* bits spilling into next word */
            const std::uint64_t himask = (hi == 64) ? ~0ull : ((1ull << hi) - 1);
            words_[wd + 1] = (words_[wd + 1] & ~himask) | ((v & mask()) >> (64 - sh));
        }
    }

    std::uint64_t report_bits() const { return static_cast<std::uint64_t>(words_.size()) * 64; }

    void serialize(std::ostream& os) const {
        write_u64(os, m_);
        write_u64(os, w_);
        write_words(os, words_);
    }

    static PackedIntVec load(std::istream& is) {
        std::uint64_t m = read_u64(is);
        std::uint64_t w = read_u64(is);
        PackedIntVec v;
        v.reset(m, static_cast<std::uint32_t>(w));
        v.words_ = read_words(is, v.words_.size());
        return v;
    }

private:
    std::uint64_t mask() const { return (w_ == 64) ? ~0ull : ((1ull << w_) - 1); }

    std::size_t m_ = 0;
    std::uint32_t w_ = 1;
    std::vector<std::uint64_t> words_;
};

} // namespace spg
