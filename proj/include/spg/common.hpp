#pragma once

/*
 * Shared basics for the succinct permutation-graph toolkit: vertex/index types,
 * distance sentinel, integer helpers, and little-endian stream I/O used by all
 * binary serializers (fields are 64-bit little-endian regardless of host).
 */

#include <cstdint>
#include <cstddef>
#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spg {

using vertex = std::uint32_t;

/* Distance value meaning "unreachable". */
inline constexpr std::uint32_t kInfDist = 0xFFFFFFFFu;

/* ceil(log2(x)) for x >= 1; defined as 0 for x == 1. */
inline std::uint32_t ceil_log2(std::uint64_t x) {
    if (x <= 1) return 0;
    return 64u - static_cast<std::uint32_t>(std::countl_zero(x - 1));
}

/* floor(log2(x)) for x >= 1. */
inline std::uint32_t floor_log2(std::uint64_t x) {
    return 63u - static_cast<std::uint32_t>(std::countl_zero(x));
}

inline std::uint64_t div_ceil(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

/* ---- little-endian stream helpers -------------------------------------- */

inline void write_u64(std::ostream& os, std::uint64_t x) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((x >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline std::uint64_t read_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw std::runtime_error("unexpected end of stream");
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return x;
}

inline void write_words(std::ostream& os, const std::vector<std::uint64_t>& w) {
    for (std::uint64_t x : w) write_u64(os, x);
}

inline std::vector<std::uint64_t> read_words(std::istream& is, std::size_t count) {
    std::vector<std::uint64_t> w(count);
    for (std::size_t i = 0; i < count; ++i) w[i] = read_u64(is);
    return w;
}

inline void write_magic(std::ostream& os, const char* magic5) {
    os.write(magic5, 5);
}

inline void expect_magic(std::istream& is, const char* magic5) {
    char got[5];
    is.read(got, 5);
    if (!is || std::string(got, 5) != std::string(magic5, 5))
        throw std::runtime_error(std::string("bad magic, expected ") + magic5);
}

} // namespace spg
