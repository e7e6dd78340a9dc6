#pragma once

/*
 * Combinatorial algorithms running directly on the compressed graph.
 *
 * Orienting every edge {u, v} with u < v from u to v turns an ordered
 * permutation graph into a transitively oriented DAG whose vertex numbering
 * is already a topological sort, so a longest directed path is a maximum
 * clique and the longest-path DP array doubles as a minimum proper coloring:
 * equal DP values can never sit on an edge, and the recovered path certifies
 * that no fewer colors suffice. The same routine run over the complement's
 * in-neighborhoods - which the graph streams without any extra stored
 * structure - yields a maximum independent set and a minimum clique cover.
 * The distance and path batch helpers stream answers pair by pair on top of
 * the constant-time distance machinery.
 */

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "spg/common.hpp"
#include "spg/pgraph.hpp"

namespace spg {

struct CliqueColoring {
    /* color[v - 1] = length of the longest oriented path ending in v; a
     * proper coloring using exactly omega colors */
    std::vector<std::uint32_t> color;
    std::uint32_t omega = 0;   /* clique number = chromatic number */
    std::vector<vertex> best;  /* an omega-clique, ascending */
};

namespace detail {

/* Longest-path DP over v = 1..n (a topological sort of the orientation),
 * where in_neighbors(v) must return the in-neighborhood ascending. Working
 * memory is two words per vertex: the DP value and the predecessor for the
 * backtrace (ties take the smallest id; scanning ascending with a strict
 * improvement test does exactly that). */
template <class InNeighbors>
CliqueColoring longest_path_coloring(std::uint32_t n, InNeighbors&& in_neighbors) {
    CliqueColoring r;
    r.color.assign(n, 1);
    std::vector<vertex> pred(n + 1, 0);
    vertex top = 1;
    for (vertex v = 1; v <= n; ++v) {
        for (const vertex u : in_neighbors(v)) {
            if (r.color[u - 1] + 1 > r.color[v - 1]) {
                r.color[v - 1] = r.color[u - 1] + 1;
                pred[v] = u;
            }
        }
        if (r.color[v - 1] > r.color[top - 1]) top = v;
    }
    if (n == 0) return r;
    r.omega = r.color[top - 1];
    for (vertex v = top; v != 0; v = pred[v]) r.best.push_back(v);
    std::reverse(r.best.begin(), r.best.end());
    return r;
}

} // namespace detail

/* Maximum clique and minimum proper coloring, both of size omega. O(n + m)
 * time, two words per vertex of working memory. */
inline CliqueColoring max_clique_min_coloring(const SuccinctPermGraph& g) {
    return detail::longest_path_coloring(g.size(),
                                         [&g](vertex v) { return g.neighbors_minus(v); });
}

/* Maximum independent set (`best`) and minimum clique cover (`color`): the
 * same DP over the complement graph, whose in-neighborhoods the structure
 * streams directly. O(n + m-complement) time. */
inline CliqueColoring max_independent_set_min_clique_cover(const SuccinctPermGraph& g) {
    return detail::longest_path_coloring(
        g.size(), [&g](vertex v) { return g.neighbors_minus_complement(v); });
}

/* Distances of the requested ordered pairs, one constant-time query each;
 * kInfDist marks unreachable. */
inline std::vector<std::uint32_t> apsp(const SuccinctPermGraph& g,
                                       const std::vector<std::pair<vertex, vertex>>& pairs) {
    std::vector<std::uint32_t> out;
    out.reserve(pairs.size());
    for (const auto& [u, v] : pairs) out.push_back(g.distance(u, v));
    return out;
}

/* All n^2 ordered distances, row by row: position (u-1)*n + (v-1) holds
 * d(u, v). */
inline std::vector<std::uint32_t> apsp(const SuccinctPermGraph& g) {
    const std::uint32_t n = g.size();
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (vertex u = 1; u <= n; ++u)
        for (vertex v = 1; v <= n; ++v) out.push_back(g.distance(u, v));
    return out;
}

struct PathResult {
    vertex from = 0, to = 0;
    bool reachable = false;
    std::vector<vertex> path; /* empty iff unreachable */
};

/* Shortest paths for the requested pairs; total work linear in the output
 * size. Unreachable pairs come back flagged instead of throwing. */
inline std::vector<PathResult> spath_pairs(const SuccinctPermGraph& g,
                                           const std::vector<std::pair<vertex, vertex>>& pairs) {
    std::vector<PathResult> out;
    out.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        PathResult r;
        r.from = u;
        r.to = v;
        if (g.distance(u, v) != kInfDist) {
            r.reachable = true;
            r.path = g.spath(u, v);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace spg
