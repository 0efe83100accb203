#include "treelay/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace treelay {

Multigraph::Multigraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("Multigraph: negative vertex count");
}

Multigraph::Multigraph(int vertex_count, std::vector<GraphEdge> edges)
    : Multigraph(vertex_count) {
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("Multigraph: vertex index out of range");
        if (e.u == e.v)
            throw std::invalid_argument("Multigraph: self-loops are not allowed");
        if (e.mult < 1)
            throw std::invalid_argument("Multigraph: multiplicity must be >= 1");
    }
    std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (const auto& e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
            edges_.back().mult += e.mult;
        else
            edges_.push_back(e);
        edge_total_ += e.mult;
    }
}

Multigraph Multigraph::complete(int n, std::int64_t multiplicity) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    if (multiplicity < 1) throw std::invalid_argument("complete: multiplicity must be >= 1");
    std::vector<GraphEdge> es;
    es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v, multiplicity});
    return Multigraph(n, std::move(es));
}

void Multigraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("Multigraph: vertex " + std::to_string(v) + " out of range");
}

std::int64_t Multigraph::multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                               [](const GraphEdge& e, const std::pair<int, int>& key) {
                                   return std::pair(e.u, e.v) < key;
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return it->mult;
    return 0;
}

bool Multigraph::is_simple() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const GraphEdge& e) { return e.mult == 1; });
}

std::int64_t Multigraph::degree(int v) const {
    check_vertex(v);
    std::int64_t d = 0;
    for (const auto& e : edges_)
        if (e.u == v || e.v == v) d += e.mult;
    return d;
}

std::int64_t Multigraph::min_degree() const {
    if (n_ == 0) return 0;
    std::vector<std::int64_t> deg(n_, 0);
    for (const auto& e : edges_) {
        deg[e.u] += e.mult;
        deg[e.v] += e.mult;
    }
    return *std::min_element(deg.begin(), deg.end());
}

bool Multigraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<std::vector<int>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == n_;
}

Multigraph complement(const Multigraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("complement: defined for simple graphs only");
    const int n = g.vertex_count();
    std::vector<GraphEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.multiplicity(u, v) == 0) es.push_back({u, v, 1});
    return Multigraph(n, std::move(es));
}

Multigraph edge_disjoint_union(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("edge_disjoint_union: vertex counts differ");
    std::vector<GraphEdge> es = a.edges();
    es.insert(es.end(), b.edges().begin(), b.edges().end());
    return Multigraph(a.vertex_count(), std::move(es));
}

void validate_partition(const VertexPartition& p, int vertex_count) {
    std::vector<char> seen(vertex_count, 0);
    int covered = 0;
    for (const auto& block : p.blocks) {
        if (block.empty())
            throw std::invalid_argument("VertexPartition: empty block");
        for (int v : block) {
            if (v < 0 || v >= vertex_count)
                throw std::invalid_argument("VertexPartition: vertex out of range");
            if (seen[v])
                throw std::invalid_argument("VertexPartition: blocks overlap at vertex " +
                                            std::to_string(v));
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != vertex_count)
        throw std::invalid_argument("VertexPartition: blocks do not cover all vertices");
}

bool blocks_are_cliques(const VertexPartition& p, const Multigraph& g) {
    for (const auto& block : p.blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.has_edge(block[i], block[j])) return false;
    return true;
}

}  // namespace treelay
