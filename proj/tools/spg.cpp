/*
 * Command-line front end for the succinct permutation-graph toolkit.
 *
 *   spg build <instance> -o <file> [--backend array|grid] [--bipartite [--oracles]]
 *   spg query <file> [query words] [--queries FILE|-]
 *   spg gen   <P|B|C> <n> [--seed S] [--wrap-cap K] [-o FILE]
 *   spg bench <file> [--workload dist|adjacent|nextneighbor|apsp] [--queries K] [--seed S]
 *
 * Exit codes: 0 success, 1 domain error (unparsable instance, improper
 * diagram, unknown query, bad vertex id, unreadable file), 2 usage error.
 * All output except bench timings is byte-deterministic for fixed inputs.
 */

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "spg/algos.hpp"
#include "spg/bpgraph.hpp"
#include "spg/cpgraph.hpp"
#include "spg/gen.hpp"
#include "spg/graphio.hpp"
#include "spg/pgraph.hpp"

namespace {

using spg::vertex;

using AnyGraph =
    std::variant<spg::SuccinctPermGraph, spg::BipartitePermGraph, spg::CircularPermGraph>;

AnyGraph load_structure(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    char magic[5] = {};
    is.read(magic, 5);
    if (is.gcount() != 5) throw std::runtime_error("'" + path + "' is not a structure file");
    is.seekg(0);
    const std::string m(magic, 5);
    if (m == "SPGR1") return spg::SuccinctPermGraph::load(is);
    if (m == "SBPG1") return spg::BipartitePermGraph::load(is);
    if (m == "SCPG1") return spg::CircularPermGraph::load(is);
    throw std::runtime_error("'" + path + "' has unknown format tag '" + m + "'");
}

std::vector<vertex> full_neighbors(const spg::SuccinctPermGraph& g, vertex v) {
    std::vector<vertex> out = g.neighbors_minus(v);
    const std::vector<vertex> plus = g.neighbors_plus(v);
    out.insert(out.end(), plus.begin(), plus.end());
    return out;
}
std::vector<vertex> full_neighbors(const spg::BipartitePermGraph& g, vertex v) {
    return g.neighbors(v);
}
std::vector<vertex> full_neighbors(const spg::CircularPermGraph& g, vertex v) {
    return g.neighbors(v);
}

std::uint32_t graph_size(const AnyGraph& ag) {
    return std::visit([](const auto& g) { return g.size(); }, ag);
}

/* One query -> one answer line. Queries: adjacent u v | degree v |
 * neighbors v | dist u v | spath u v | first u v. */
std::string run_query(const AnyGraph& ag, const std::vector<std::string>& words) {
    if (words.empty()) throw std::runtime_error("empty query");
    const std::string& op = words[0];
    const auto need = [&](std::size_t argc) {
        if (words.size() != argc + 1)
            throw std::runtime_error("query '" + op + "' takes " + std::to_string(argc) +
                                     " vertex argument(s)");
    };
    const auto id = [&](std::size_t i) -> vertex {
        try {
            const unsigned long v = std::stoul(words[i]);
            if (v == 0 || v > 0xFFFFFFFFull) throw std::out_of_range("id");
            return static_cast<vertex>(v);
        } catch (const std::logic_error&) {
            throw std::runtime_error("bad vertex id '" + words[i] + "'");
        }
    };
    return std::visit(
        [&](const auto& g) -> std::string {
            std::ostringstream out;
            if (op == "adjacent") {
                need(2);
                out << (g.adjacent(id(1), id(2)) ? "true" : "false");
            } else if (op == "degree") {
                need(1);
                out << g.degree(id(1));
            } else if (op == "neighbors") {
                need(1);
                const auto nb = full_neighbors(g, id(1));
                for (std::size_t i = 0; i < nb.size(); ++i) out << (i ? " " : "") << nb[i];
            } else if (op == "dist") {
                need(2);
                const std::uint32_t d = g.distance(id(1), id(2));
                if (d == spg::kInfDist)
                    out << "inf";
                else
                    out << d;
            } else if (op == "spath") {
                need(2);
                const vertex u = id(1), v = id(2);
                if (g.distance(u, v) == spg::kInfDist) {
                    out << "unreachable";
                } else {
                    const auto p = g.spath(u, v);
                    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
                }
            } else if (op == "first") {
                need(2);
                const vertex u = id(1), v = id(2);
                if (u != v && g.distance(u, v) == spg::kInfDist)
                    out << "unreachable";
                else
                    out << g.spath_first(u, v);
            } else {
                throw std::runtime_error("unknown query '" + op + "'");
            }
            return out.str();
        },
        ag);
}

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> words;
    std::string w;
    while (is >> w) words.push_back(w);
    return words;
}

/* ---- build ---------------------------------------------------------------- */

void print_class_counts(const std::vector<std::uint32_t>& rows) {
    std::uint32_t na = 0, nb = 0, best = 0;
    for (const std::uint32_t r : rows)
        if (r > best) {
            ++na;
            best = r;
        }
    best = static_cast<std::uint32_t>(rows.size()) + 1;
    for (std::size_t i = rows.size(); i-- > 0;)
        if (rows[i] < best) {
            ++nb;
            best = rows[i];
        }
    std::cout << "classes A " << na << " B " << nb << "\n";
}

void cmd_build(const std::string& input, const std::string& output,
               const std::string& backend, bool bipartite, bool oracles) {
    spg::GraphFile f;
    if (input == "-") {
        f = spg::parse_graph_file(std::cin);
    } else {
        std::ifstream is(input);
        if (!is) throw std::runtime_error("cannot open '" + input + "'");
        f = spg::parse_graph_file(is);
    }
    const std::uint32_t n = static_cast<std::uint32_t>(f.rows.size());
    const spg::Permutation Pi = spg::Permutation::from_values(f.rows);

    AnyGraph g = f.kind == 'C'
                     ? AnyGraph(spg::CircularPermGraph::build(Pi, chord_types_of(f)))
                 : bipartite
                     ? AnyGraph(spg::BipartitePermGraph::build(Pi, oracles))
                     : AnyGraph(spg::SuccinctPermGraph::build(
                           Pi, backend == "grid" ? spg::PgBackend::grid
                                                 : spg::PgBackend::array));

    std::ofstream os(output, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + output + "' for writing");
    std::visit([&](const auto& gg) { gg.serialize(os); }, g);

    std::cout << "kind " << (f.kind == 'C' ? "C" : bipartite ? "B" : "P") << "\n"
              << "n " << n << "\n";
    const std::uint64_t baseline =
        static_cast<std::uint64_t>(n) * std::max(1u, spg::ceil_log2(n));
    std::uint64_t total = 0;

    if (const auto* cg = std::get_if<spg::CircularPermGraph>(&g)) {
        std::uint32_t nf = 0, nb2 = 0;
        for (const char c : f.types) {
            nf += c == 'F';
            nb2 += c == 'B';
        }
        const spg::CpgSpace s = cg->report_bits();
        std::cout << "wraps F " << nf << " B " << nb2 << "\n"
                  << "bits pi " << s.pi << " types " << s.types << " flags " << s.flags
                  << " rmq " << s.rmq << " oracles " << s.oracles << " total " << s.total()
                  << "\n";
        total = s.total();
    } else if (const auto* bg = std::get_if<spg::BipartitePermGraph>(&g)) {
        const spg::BpgSpace s = bg->report_bits();
        print_class_counts(f.rows);
        std::cout << "isolated " << bg->isolated_count() << "\n"
                  << "bits payload " << s.payload << " directories " << s.directories
                  << " oracles " << s.oracles << " total " << s.total() << "\n";
        total = s.total();
    } else {
        const spg::PgSpace s = std::get<spg::SuccinctPermGraph>(g).report_bits();
        std::cout << "backend " << backend << "\n";
        print_class_counts(f.rows);
        std::cout << "bits pi " << s.pi << " flags " << s.flags << " rmq " << s.rmq
                  << " oracles " << s.oracles << " grid " << s.grid << " total " << s.total()
                  << "\n";
        total = s.total();
    }
    std::cout << "baseline-bits " << baseline << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", static_cast<double>(total) / n);
    std::cout << "bits-per-vertex " << buf << "\n";
    if (!os) throw std::runtime_error("write to '" + output + "' failed");
}

/* ---- query ---------------------------------------------------------------- */

void cmd_query(const std::string& path, const std::vector<std::string>& inline_query,
               const std::string& queries_file) {
    const AnyGraph g = load_structure(path);
    if (!inline_query.empty()) std::cout << run_query(g, inline_query) << "\n";
    if (queries_file.empty()) {
        if (inline_query.empty()) throw std::runtime_error("no query given");
        return;
    }
    std::ifstream fs;
    std::istream* qs = &std::cin;
    if (queries_file != "-") {
        fs.open(queries_file);
        if (!fs) throw std::runtime_error("cannot open '" + queries_file + "'");
        qs = &fs;
    }
    std::string line;
    while (std::getline(*qs, line)) {
        const auto words = split_words(line);
        if (words.empty() || words[0][0] == '#') continue;
        std::cout << run_query(g, words) << "\n";
    }
}

/* ---- gen ------------------------------------------------------------------ */

void cmd_gen(const std::string& kind, std::uint32_t n, std::uint64_t seed,
             std::uint32_t wrap_cap, const std::string& output) {
    std::mt19937_64 rng(seed);
    spg::GraphFile f;
    if (kind == "P") {
        f.kind = 'P';
        f.rows = spg::gen::random_permutation(n, rng).values();
    } else if (kind == "B") {
        f.kind = 'P';
        f.rows = spg::gen::random_bipartite_rows(n, rng).values();
    } else if (kind == "C") {
        f.kind = 'C';
        auto [Pi, t] = spg::gen::random_circular(n, rng, wrap_cap);
        f.rows = Pi.values();
        f.types.reserve(n);
        for (const spg::ChordType c : t)
            f.types.push_back(c == spg::ChordType::F   ? 'F'
                              : c == spg::ChordType::B ? 'B'
                                                       : 'N');
    } else {
        throw std::runtime_error("unknown instance kind '" + kind + "', expected P, B, or C");
    }
    if (output.empty() || output == "-") {
        spg::print_graph_file(f, std::cout);
    } else {
        std::ofstream os(output);
        if (!os) throw std::runtime_error("cannot open '" + output + "' for writing");
        spg::print_graph_file(f, os);
    }
}

/* ---- bench ---------------------------------------------------------------- */

std::uint64_t structure_bits(const AnyGraph& ag) {
    if (const auto* p = std::get_if<spg::SuccinctPermGraph>(&ag)) return p->report_bits().total();
    if (const auto* b = std::get_if<spg::BipartitePermGraph>(&ag)) return b->report_bits().total();
    return std::get<spg::CircularPermGraph>(ag).report_bits().total();
}

/* Directed-edge count (sum of degrees).  For the plain structure the edge
 * count equals the number of row inversions, counted with a Fenwick tree in
 * O(n log n) — summing degree() there would enumerate every neighbor on the
 * array backend.  Bipartite and circular degrees are cheap to sum directly. */
std::uint64_t directed_edge_count(const AnyGraph& ag, std::uint32_t n) {
    if (const auto* p = std::get_if<spg::SuccinctPermGraph>(&ag)) {
        std::vector<std::uint32_t> fen(n + 1, 0);
        std::uint64_t inv = 0;
        for (vertex v = 1; v <= n; ++v) {
            const std::uint32_t y = p->pi_inverse_at(v);
            std::uint64_t leq = 0;
            for (std::uint32_t i = y; i > 0; i -= i & (~i + 1)) leq += fen[i];
            inv += (v - 1) - leq;
            for (std::uint32_t i = y; i <= n; i += i & (~i + 1)) ++fen[i];
        }
        return 2 * inv;
    }
    std::uint64_t m2 = 0;
    for (vertex v = 1; v <= n; ++v)
        m2 += std::visit([&](const auto& gg) -> std::uint64_t { return gg.degree(v); }, ag);
    return m2;
}

void cmd_bench(const std::string& path, const std::string& workload, std::uint64_t queries,
               std::uint64_t seed) {
    const AnyGraph g = load_structure(path);
    const std::uint32_t n = graph_size(g);
    std::mt19937_64 rng(seed);
    const auto pick = [&]() { return static_cast<vertex>(1 + spg::gen::draw(rng, n)); };

    /* adjacency-list baseline sized from the edge count (32-bit CSR:
     * n+1 offsets plus one entry per directed edge) */
    const std::uint64_t adjlist_bits = 32ull * (n + 1) + 32ull * directed_edge_count(g, n);

    using clock = std::chrono::steady_clock;
    std::uint64_t sink = 0, outputs = 0, performed = 0;
    const auto t0 = clock::now();
    if (workload == "adjacent") {
        for (std::uint64_t i = 0; i < queries; ++i)
            sink += std::visit([&](const auto& gg) { return gg.adjacent(pick(), pick()); }, g);
        performed = queries;
    } else if (workload == "dist") {
        for (std::uint64_t i = 0; i < queries; ++i)
            sink += std::visit([&](const auto& gg) { return gg.distance(pick(), pick()); }, g);
        performed = queries;
    } else if (workload == "nextneighbor") {
        for (std::uint64_t i = 0; i < queries; ++i) {
            const vertex v = pick();
            const auto nb =
                std::visit([&](const auto& gg) { return full_neighbors(gg, v); }, g);
            outputs += nb.size();
            sink += nb.empty() ? 0 : nb.front();
        }
        performed = queries;
    } else if (workload == "apsp") {
        for (vertex u = 1; u <= n; ++u)
            for (vertex v = 1; v <= n; ++v)
                sink += std::visit([&](const auto& gg) { return gg.distance(u, v); }, g);
        performed = static_cast<std::uint64_t>(n) * n;
    } else {
        throw std::runtime_error("unknown workload '" + workload + "'");
    }
    const auto t1 = clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    const std::uint64_t bits = structure_bits(g);
    char bpv[32], nspq[32], msbuf[32];
    std::snprintf(bpv, sizeof bpv, "%.2f", static_cast<double>(bits) / n);
    std::snprintf(nspq, sizeof nspq, "%.1f",
                  performed ? ms * 1e6 / static_cast<double>(performed) : 0.0);
    std::snprintf(msbuf, sizeof msbuf, "%.1f", ms);
    std::cout << "workload " << workload << "\n"
              << "n " << n << "\n"
              << "queries " << performed << "\n";
    if (workload == "nextneighbor") std::cout << "reported " << outputs << "\n";
    std::cout << "structure-bits " << bits << " bits-per-vertex " << bpv << "\n"
              << "adjlist-bits " << adjlist_bits << "\n"
              << "total-ms " << msbuf << " ns-per-query " << nspq << "\n"
              << "checksum " << sink << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"succinct permutation-graph toolkit"};
    app.require_subcommand(1);

    /* build */
    auto* build = app.add_subcommand("build", "build a structure from a text instance");
    std::string b_in, b_out, b_backend = "array";
    bool b_bip = false, b_orc = false;
    build->add_option("input", b_in, "instance file, or - for stdin")->required();
    build->add_option("-o,--output", b_out, "structure file to write")->required();
    build->add_option("--backend", b_backend, "plain-graph backend (array|grid)")
        ->check(CLI::IsMember({"array", "grid"}));
    build->add_flag("--bipartite", b_bip, "build the 2n-bit bipartite structure");
    build->add_flag("--oracles", b_orc, "with --bipartite: add distance oracles");
    build->callback([&] { cmd_build(b_in, b_out, b_backend, b_bip, b_orc); });

    /* query */
    auto* query = app.add_subcommand("query", "answer queries against a structure file");
    std::string q_path, q_file;
    std::vector<std::string> q_inline;
    query->add_option("structure", q_path, "structure file")->required();
    query->add_option("query", q_inline, "one inline query, e.g.: dist 5 9");
    query->add_option("--queries", q_file, "file with one query per line, or - for stdin");
    query->callback([&] { cmd_query(q_path, q_inline, q_file); });

    /* gen */
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::string g_kind, g_out;
    std::uint32_t g_n = 0, g_wrap = 64;
    std::uint64_t g_seed = 1;
    gen->add_option("kind", g_kind, "P plain, B bipartite, C circular")->required();
    gen->add_option("n", g_n, "number of vertices")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_option("--wrap-cap", g_wrap, "circular: max wrap-chord candidates");
    gen->add_option("-o,--output", g_out, "write here instead of stdout");
    gen->callback([&] { cmd_gen(g_kind, g_n, g_seed, g_wrap, g_out); });

    /* bench */
    auto* bench = app.add_subcommand("bench", "time a query workload");
    std::string be_path, be_work = "dist";
    std::uint64_t be_q = 100000, be_seed = 1;
    bench->add_option("structure", be_path, "structure file")->required();
    bench->add_option("--workload", be_work, "dist|adjacent|nextneighbor|apsp")
        ->check(CLI::IsMember({"dist", "adjacent", "nextneighbor", "apsp"}));
    bench->add_option("--queries", be_q, "number of random queries");
    bench->add_option("--seed", be_seed, "random seed for query sampling");
    bench->callback([&] { cmd_bench(be_path, be_work, be_q, be_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
