#include "treelay/measures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace treelay {

namespace {

void check_sizes(const Layout& l, const Multigraph& g) {
    if (l.vertex_count() != g.vertex_count())
        throw std::invalid_argument("measures: layout leaf count != graph vertex count");
}

// Vertex set on the e.a side of each tree edge, as sorted vertex lists.
// One DFS; the hot exact-solver path has its own mask-based evaluator.
std::vector<std::pair<TreeEdge, std::vector<char>>> edge_sides(const Layout& l) {
    const LeafTree& t = l.tree;
    const int n = t.node_count();
    std::vector<int> parent(n, -2);
    std::vector<int> order;
    order.reserve(n);
    parent[0] = -1;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        for (int y : t.neighbors(x))
            if (parent[y] == -2) {
                parent[y] = x;
                order.push_back(y);
            }
    }
    std::vector<int> leaf_vertex(n, -1);
    for (int v = 0; v < l.vertex_count(); ++v) leaf_vertex[l.phi[v]] = v;

    std::vector<std::vector<char>> below(n, std::vector<char>(l.vertex_count(), 0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        if (leaf_vertex[x] >= 0) below[x][leaf_vertex[x]] = 1;
        if (parent[x] >= 0)
            for (int v = 0; v < l.vertex_count(); ++v)
                below[parent[x]][v] = below[parent[x]][v] | below[x][v];
    }
    std::vector<std::pair<TreeEdge, std::vector<char>>> out;
    for (int x : order) {
        if (parent[x] < 0) continue;
        // side of x; normalize the reported edge and side to e.a
        TreeEdge e = make_tree_edge(x, parent[x]);
        if (e.a == x)
            out.push_back({e, below[x]});
        else {
            std::vector<char> flipped(l.vertex_count());
            for (int v = 0; v < l.vertex_count(); ++v) flipped[v] = !below[x][v];
            out.push_back({e, std::move(flipped)});
        }
    }
    return out;
}

}  // namespace

std::int64_t dilation(const Layout& l, const Multigraph& g, int u, int v) {
    check_sizes(l, g);
    if (g.multiplicity(u, v) == 0)
        throw std::invalid_argument("dilation: {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} is not a graph edge");
    return leaf_distance(l.tree, l.phi[u], l.phi[v]);
}

std::int64_t congestion(const Layout& l, const Multigraph& g, TreeEdge e) {
    check_sizes(l, g);
    auto [side_a, side_b] = edge_cut(l.tree, e);  // validates e
    std::vector<char> in_a(g.vertex_count(), 0);
    for (int leaf : side_a) {
        int v = l.vertex_at(leaf);
        if (v >= 0) in_a[v] = 1;
    }
    std::int64_t total = 0;
    for (const auto& ge : g.edges())
        if (in_a[ge.u] != in_a[ge.v]) total += ge.mult;
    return total;
}

std::int64_t tree_length(const Layout& l, const Multigraph& g) {
    check_sizes(l, g);
    std::int64_t total = 0;
    for (const auto& [e, side] : edge_sides(l))
        for (const auto& ge : g.edges())
            if (side[ge.u] != side[ge.v]) total += ge.mult;
    return total;
}

std::int64_t sigma_ll(const LeafTree& t) {
    if (t.leaf_count() < 2) return 0;
    const int n = t.node_count();
    std::vector<int> parent(n, -2);
    std::vector<int> order{0};
    parent[0] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int y : t.neighbors(order[i]))
            if (parent[y] == -2) {
                parent[y] = order[i];
                order.push_back(y);
            }
    std::vector<std::int64_t> below(n, 0);
    const std::int64_t L = t.leaf_count();
    std::int64_t total = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        if (t.is_leaf(x)) below[x] += 1;
        if (parent[x] >= 0) below[parent[x]] += below[x];
    }
    for (int x : order)
        if (parent[x] >= 0) total += below[x] * (L - below[x]);
    return total;
}

std::int64_t wiener(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::int64_t total = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int x = queue[i];
            for (int y : adj[x])
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        for (int v = s + 1; v < n; ++v) {
            if (dist[v] < 0)
                throw std::invalid_argument("wiener: no path between " + std::to_string(s) +
                                            " and " + std::to_string(v));
            total += dist[v];
        }
    }
    return total;
}

AlphaBeta alpha_beta(const RootedBinaryTree& b, const Multigraph& g) {
    if (b.leaf_count() != g.vertex_count())
        throw std::invalid_argument("alpha_beta: leaf count != vertex count");
    const int n = b.node_count();
    std::vector<std::vector<char>> below(n, std::vector<char>(g.vertex_count(), 0));
    AlphaBeta out;
    for (int x : b.postorder()) {
        if (b.is_leaf(x)) {
            below[x][b.label(x)] = 1;
        } else {
            for (int c : b.children(x))
                for (int v = 0; v < g.vertex_count(); ++v)
                    below[x][v] = below[x][v] | below[c][v];
        }
        if (x == b.root()) continue;
        std::int64_t c = 0;
        for (const auto& ge : g.edges())
            if (below[x][ge.u] != below[x][ge.v]) c += ge.mult;
        out.beta += c;
        out.alpha = std::max(out.alpha, c);
    }
    return out;
}

MeasureReport measure(const Layout& l, const Multigraph& g) {
    check_sizes(l, g);
    MeasureReport r;
    r.n = g.vertex_count();
    r.m = g.edge_total();
    r.sigma_ll = sigma_ll(l.tree);
    for (const auto& [e, side] : edge_sides(l)) {
        std::int64_t c = 0;
        for (const auto& ge : g.edges())
            if (side[ge.u] != side[ge.v]) c += ge.mult;
        r.per_tree_edge_congestion.push_back({e, c});
        r.tree_length += c;
        r.max_congestion = std::max(r.max_congestion, c);
    }
    for (const auto& ge : g.edges()) {
        std::int64_t d = leaf_distance(l.tree, l.phi[ge.u], l.phi[ge.v]);
        r.per_graph_edge_dilation.push_back({ge, d});
        r.max_dilation = std::max(r.max_dilation, d);
    }
    r.alpha = r.max_congestion;
    r.beta = r.tree_length;
    return r;
}

MeasureReport measure(const RootedBinaryTree& b, const Multigraph& g) {
    Layout l = rooted_to_unrooted(b);
    MeasureReport r = measure(l, g);
    AlphaBeta ab = alpha_beta(b, g);
    r.alpha = ab.alpha;
    r.beta = ab.beta;
    return r;
}

}  // namespace treelay
