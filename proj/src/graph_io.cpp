#include "treelay/graph_io.hpp"

#include <sstream>
#include <vector>

namespace treelay {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Multigraph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int n = -1;
    long long declared_pairs = -1;
    std::vector<GraphEdge> edges;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> declared_pairs) || n < 0 || declared_pairs < 0)
                throw ParseError(lineno, "expected header \"n m_pairs\"");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        long long u, v, mult = 1;
        if (!(ls >> u >> v)) throw ParseError(lineno, "expected \"u v [mult]\"");
        if (!(ls >> mult)) mult = 1;
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex index out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(lineno, "self-loop not allowed");
        if (mult < 1) throw ParseError(lineno, "multiplicity must be >= 1");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), mult});
    }
    if (n < 0) throw ParseError(lineno, "missing header line");
    if (declared_pairs != static_cast<long long>(edges.size()))
        throw ParseError(lineno, "header declares " + std::to_string(declared_pairs) +
                                     " pairs, found " + std::to_string(edges.size()));
    return Multigraph(n, std::move(edges));
}

std::string write_graph(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.pair_count() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (e.mult != 1) out << ' ' << e.mult;
        out << '\n';
    }
    return out.str();
}

}  // namespace treelay
