#pragma once

/*
 * Deterministic instance generators for the command-line front end.
 *
 * All randomness flows through the standard-specified mt19937_64 engine with
 * explicit modulo reduction and hand-rolled Fisher-Yates shuffles, so a given
 * seed reproduces the same instance on every platform (the distribution
 * adapters in <random> make no such promise).
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "spg/bpgraph.hpp"
#include "spg/core.hpp"
#include "spg/cpgraph.hpp"

namespace spg::gen {

/* uniform draw from [0, bound); bound >= 1 */
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

inline void shuffle_values(std::vector<std::uint32_t>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[draw(rng, i)]);
}

inline Permutation random_permutation(std::uint32_t n, std::mt19937_64& rng) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    shuffle_values(v, rng);
    return Permutation::from_values(std::move(v));
}

/* Bipartite-representable rows: a random position subset takes a random row
 * subset of the same size, both order-preservingly, so the rows are a merge
 * of two increasing sequences. The canonical renaming then moves vertices
 * that end up isolated into the top ids, which is the form the bipartite
 * builder accepts. */
inline Permutation random_bipartite_rows(std::uint32_t n, std::mt19937_64& rng) {
    const std::uint32_t k = static_cast<std::uint32_t>(draw(rng, n + 1));
    std::vector<std::uint32_t> ids(n);
    std::iota(ids.begin(), ids.end(), 1u);
    shuffle_values(ids, rng);
    std::vector<bool> pos_a(n + 1, false);
    for (std::uint32_t i = 0; i < k; ++i) pos_a[ids[i]] = true;
    shuffle_values(ids, rng);
    std::vector<std::uint32_t> arow, brow;
    for (std::uint32_t i = 0; i < n; ++i) (i < k ? arow : brow).push_back(ids[i]);
    std::sort(arow.begin(), arow.end());
    std::sort(brow.begin(), brow.end());
    std::vector<std::uint32_t> rows(n);
    std::size_t ia = 0, ib = 0;
    for (std::uint32_t p = 1; p <= n; ++p) rows[p - 1] = pos_a[p] ? arow[ia++] : brow[ib++];
    return relabel_for_bpg(Permutation::from_values(std::move(rows))).pi_inverse;
}

/* Valid circular instance: random rows, up to `wrap_cap` scattered wrap
 * candidates, then repair by demoting one chord of the first violating pair
 * until the diagram validates. Each demotion is final, so the repair loop
 * runs at most wrap_cap times. */
inline std::pair<Permutation, std::vector<ChordType>> random_circular(
    std::uint32_t n, std::mt19937_64& rng, std::uint32_t wrap_cap = 64) {
    Permutation Pi = random_permutation(n, rng);
    std::vector<ChordType> t(n, ChordType::N);
    for (std::uint32_t i = 0; i < wrap_cap; ++i) {
        const vertex v = static_cast<vertex>(1 + draw(rng, n));
        if (t[v - 1] == ChordType::N)
            t[v - 1] = i % 2 == 0 ? ChordType::B : ChordType::F;
    }
    while (auto viol = validate_chord_types(Pi, t)) {
        if (viol->rule == 1)
            t[viol->u - 1] = ChordType::N;
        else
            t[viol->v - 1] = ChordType::N;
    }
    return {std::move(Pi), std::move(t)};
}

} // namespace spg::gen
