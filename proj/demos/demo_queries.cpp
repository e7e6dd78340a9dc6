/* Walkthrough of the query surface on a hand-sized instance: build the
 * 11-vertex graph from its row sequence, ask one of each query, then do the
 * same for a circular variant and a bipartite one. Prints what it asks and
 * what it gets back. */

#include <iostream>
#include <sstream>
#include <vector>

#include "spg/bpgraph.hpp"
#include "spg/cpgraph.hpp"
#include "spg/graphio.hpp"
#include "spg/pgraph.hpp"

using spg::Permutation;
using spg::vertex;

namespace {

std::string join(const std::vector<vertex>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
    return os.str();
}

} // namespace

int main() {
    /* The running example: row sequence (5 3 10 9 1 4 2 7 11 8 6). Vertex u
     * and v > u are adjacent exactly when u's row is larger than v's. */
    const Permutation Pi =
        Permutation::from_values({5, 3, 10, 9, 1, 4, 2, 7, 11, 8, 6});
    const spg::SuccinctPermGraph g = spg::SuccinctPermGraph::build(Pi);

    std::cout << "== plain graph, n = " << g.size() << " ==\n";
    std::cout << "adjacent(5, 9)        -> " << (g.adjacent(5, 9) ? "true" : "false") << "\n";
    std::cout << "adjacent(1, 1)        -> " << (g.adjacent(1, 1) ? "true" : "false") << "\n";
    std::cout << "degree(3)             -> " << g.degree(3) << "\n";
    std::cout << "smaller neighbors(5)  -> " << join(g.neighbors_minus(5)) << "\n";
    std::cout << "larger neighbors(3)   -> " << join(g.neighbors_plus(3)) << "\n";
    std::cout << "distance(5, 9)        -> " << g.distance(5, 9) << "\n";
    std::cout << "first hop on 5 ~> 9   -> " << g.spath_first(5, 9) << "\n";
    std::cout << "shortest path 5 ~> 9  -> " << join(g.spath(5, 9)) << "\n";
    const spg::PgSpace ps = g.report_bits();
    std::cout << "space (bits)          -> " << ps.total() << " total, " << ps.pi
              << " for the rows\n\n";

    /* Same rows read as a circular diagram with one backward wrap chord. */
    const spg::CircularPermGraph c = spg::CircularPermGraph::build(
        Permutation::from_values({2, 5, 4, 1, 7, 3, 6}), spg::parse_chord_types("NBNNNNN"));
    std::cout << "== circular graph, n = " << c.size() << " ==\n";
    std::cout << "adjacent(2, 5)        -> " << (c.adjacent(2, 5) ? "true" : "false") << "\n";
    std::cout << "neighbors(2)          -> " << join(c.neighbors(2)) << "\n";
    std::cout << "distance(4, 6)        -> " << c.distance(4, 6) << "\n";
    std::cout << "shortest path 4 ~> 6  -> " << join(c.spath(4, 6)) << "\n\n";

    /* A bipartite instance stored in 2n + o(n) bits. */
    const spg::BipartitePermGraph b =
        spg::BipartitePermGraph::build(Permutation::from_values({2, 4, 1, 3, 5, 6}), true);
    std::cout << "== bipartite graph, n = " << b.size() << " ==\n";
    std::cout << "adjacent(1, 3)        -> " << (b.adjacent(1, 3) ? "true" : "false") << "\n";
    std::cout << "neighbors(2)          -> " << join(b.neighbors(2)) << "\n";
    std::cout << "distance(1, 4)        -> " << b.distance(1, 4) << "\n";
    std::cout << "isolated vertices     -> " << b.isolated_count() << "\n";
    const spg::BpgSpace bs = b.report_bits();
    std::cout << "payload bits          -> " << bs.payload << " (= 2n)\n";
    return 0;
}
