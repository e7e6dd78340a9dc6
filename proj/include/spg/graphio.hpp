#pragma once

/*
 * Text interchange format for graph instances.
 *
 * Token 1: kind, "P" (plain) or "C" (circular).
 * Token 2: n >= 1.
 * Tokens 3..n+2: the n rows Pi[1..n], a permutation of 1..n.
 * For kind C one more token: n chord-type letters (N inner, F forward wrap,
 * B backward wrap) as one word.
 *
 * Lines whose first non-blank character is '#' are comments; tokens may be
 * split across lines however convenient. The printer emits one field per
 * line with the rows space-separated, and parse(print(x)) == x. Errors name
 * the input line they were found on.
 */

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spg/cpgraph.hpp"
#include "spg/core.hpp"

namespace spg {

struct GraphFile {
    char kind = 'P';
    std::vector<std::uint32_t> rows;
    std::string types; /* kind C only; letters N, F, B */
    bool operator==(const GraphFile&) const = default;
};

namespace detail {

/* Whitespace tokenizer that skips '#' comment lines and tracks the current
 * line number for error messages. */
class GraphTokens {
public:
    explicit GraphTokens(std::istream& is) : is_(is) {}

    std::string next(const char* what) {
        std::string tok;
        while (true) {
            const int c = is_.peek();
            if (c == std::char_traits<char>::eof()) break;
            if (c == '\n') {
                if (!tok.empty()) return tok;
                ++line_;
                is_.get();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (!tok.empty()) return tok;
                is_.get();
                continue;
            }
            if (c == '#' && tok.empty()) {
                std::string rest;
                std::getline(is_, rest);
                ++line_;
                continue;
            }
            tok.push_back(static_cast<char>(is_.get()));
        }
        if (tok.empty()) fail(std::string("unexpected end of input, expected ") + what);
        return tok;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("line " + std::to_string(line_) + ": " + msg);
    }

    std::uint32_t next_u32(const char* what) {
        const std::string tok = next(what);
        std::uint64_t value = 0;
        if (tok.empty() || tok.size() > 10) fail("bad " + std::string(what) + " '" + tok + "'");
        for (const char c : tok) {
            if (c < '0' || c > '9') fail("bad " + std::string(what) + " '" + tok + "'");
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
        }
        if (value > 0xFFFFFFFFull) fail("bad " + std::string(what) + " '" + tok + "'");
        return static_cast<std::uint32_t>(value);
    }

private:
    std::istream& is_;
    std::size_t line_ = 1;
};

} // namespace detail

inline GraphFile parse_graph_file(std::istream& is) {
    detail::GraphTokens tk(is);
    GraphFile f;
    const std::string kind = tk.next("kind (P or C)");
    if (kind != "P" && kind != "C") tk.fail("unknown kind '" + kind + "', expected P or C");
    f.kind = kind[0];
    const std::uint32_t n = tk.next_u32("vertex count");
    if (n == 0) tk.fail("vertex count must be at least 1");
    f.rows.resize(n);
    std::vector<bool> seen(n + 1, false);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t r = tk.next_u32("row value");
        if (r < 1 || r > n)
            tk.fail("row value " + std::to_string(r) + " outside 1.." + std::to_string(n));
        if (seen[r]) tk.fail("row value " + std::to_string(r) + " appears twice");
        seen[r] = true;
        f.rows[i] = r;
    }
    if (f.kind == 'C') {
        f.types = tk.next("chord types");
        if (f.types.size() != n)
            tk.fail("expected " + std::to_string(n) + " chord-type letters, got " +
                    std::to_string(f.types.size()));
        for (const char c : f.types)
            if (c != 'N' && c != 'F' && c != 'B')
                tk.fail(std::string("unknown chord type '") + c + "', expected N, F, or B");
    }
    return f;
}

inline void print_graph_file(const GraphFile& f, std::ostream& os) {
    os << f.kind << '\n' << f.rows.size() << '\n';
    for (std::size_t i = 0; i < f.rows.size(); ++i)
        os << f.rows[i] << (i + 1 < f.rows.size() ? ' ' : '\n');
    if (f.kind == 'C') os << f.types << '\n';
}

inline std::vector<ChordType> parse_chord_types(const std::string& letters) {
    std::vector<ChordType> t;
    t.reserve(letters.size());
    for (const char c : letters)
        t.push_back(c == 'F'   ? ChordType::F
                    : c == 'B' ? ChordType::B
                               : ChordType::N);
    return t;
}

inline std::vector<ChordType> chord_types_of(const GraphFile& f) {
    return parse_chord_types(f.types);
}

} // namespace spg
