#include "treelay/builtins.hpp"

#include <cctype>

namespace treelay {

namespace {

std::optional<int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    int value = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
        if (value > 1'000'000) return std::nullopt;
    }
    return value;
}

Multigraph path_graph(int n) {
    std::vector<GraphEdge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1});
    return Multigraph(n, std::move(es));
}

Multigraph cycle_graph(int n) {
    std::vector<GraphEdge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, 1});
    return Multigraph(n, std::move(es));
}

Multigraph star_graph(int n) {
    std::vector<GraphEdge> es;
    for (int i = 1; i < n; ++i) es.push_back({0, i, 1});
    return Multigraph(n, std::move(es));
}

Multigraph complete_minus_matching(int n) {
    std::vector<GraphEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u % 2 == 0 && v == u + 1)) es.push_back({u, v, 1});
    return Multigraph(n, std::move(es));
}

Multigraph hypercube_q3() {
    std::vector<GraphEdge> es;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            int v = u ^ (1 << b);
            if (u < v) es.push_back({u, v, 1});
        }
    return Multigraph(8, std::move(es));
}

// Two K_4 blocks bridged by two fixed edges.
Multigraph twin_k4() {
    std::vector<GraphEdge> es;
    for (int base : {0, 4})
        for (int u = base; u < base + 4; ++u)
            for (int v = u + 1; v < base + 4; ++v) es.push_back({u, v, 1});
    es.push_back({0, 4, 1});
    es.push_back({1, 5, 1});
    return Multigraph(8, std::move(es));
}

}  // namespace

std::optional<Multigraph> builtin_graph(const std::string& name) {
    auto sized = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        return parse_int(name.substr(prefix.size()));
    };

    if (name == "q3") return hypercube_q3();
    if (name == "twin_k4") return twin_k4();

    if (auto n = sized("path:"); n && *n >= 1) return path_graph(*n);
    if (auto n = sized("cycle:"); n && *n >= 3) return cycle_graph(*n);
    if (auto n = sized("star:"); n && *n >= 2) return star_graph(*n);
    if (auto n = sized("complete:"); n && *n >= 1) return Multigraph::complete(*n);
    if (auto n = sized("complete_minus_matching:"); n && *n >= 4 && *n % 2 == 0)
        return complete_minus_matching(*n);

    if (name.size() >= 3 && name.compare(name.size() - 2, 2, "mm") == 0 && name[0] == 'k') {
        if (auto n = parse_int(name.substr(1, name.size() - 3)); n && *n >= 4 && *n % 2 == 0)
            return complete_minus_matching(*n);
    }
    if (name.rfind("star", 0) == 0) {
        if (auto n = parse_int(name.substr(4)); n && *n >= 2) return star_graph(*n);
    }
    if (name.size() >= 2) {
        auto n = parse_int(name.substr(1));
        if (n) {
            if (name[0] == 'p' && *n >= 1) return path_graph(*n);
            if (name[0] == 'c' && *n >= 3) return cycle_graph(*n);
            if (name[0] == 'k' && *n >= 1) return Multigraph::complete(*n);
        }
    }
    return std::nullopt;
}

std::vector<std::string> reduction_corpus() {
    return {"cycle:8", "star:8", "complete:8", "complete_minus_matching:8", "twin_k4"};
}

std::vector<std::string> small_corpus(int max_vertices) {
    std::vector<std::string> out;
    for (int n = 3; n <= max_vertices; ++n) {
        out.push_back("path:" + std::to_string(n));
        out.push_back("cycle:" + std::to_string(n));
        out.push_back("star:" + std::to_string(n));
        out.push_back("complete:" + std::to_string(n));
        if (n % 2 == 0 && n >= 4) out.push_back("complete_minus_matching:" + std::to_string(n));
    }
    if (max_vertices >= 8) {
        out.push_back("q3");
        out.push_back("twin_k4");
    }
    return out;
}

}  // namespace treelay
