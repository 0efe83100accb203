#include "treelay/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "treelay/rooted_tree.hpp"

namespace treelay {

TreeEdge make_tree_edge(int x, int y) {
    if (x > y) std::swap(x, y);
    return {x, y};
}

LeafTree LeafTree::from_adjacency(std::vector<std::vector<int>> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    int edge_twice = 0;
    for (int v = 0; v < n; ++v) {
        for (int u : adjacency[v]) {
            if (u < 0 || u >= n) throw std::invalid_argument("LeafTree: neighbor out of range");
            if (u == v) throw std::invalid_argument("LeafTree: self-adjacency");
            if (std::count(adjacency[u].begin(), adjacency[u].end(), v) != 1)
                throw std::invalid_argument("LeafTree: adjacency not symmetric");
            ++edge_twice;
        }
    }
    if (n > 0 && edge_twice != 2 * (n - 1))
        throw std::invalid_argument("LeafTree: edge count != node count - 1");
    if (n > 1) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adjacency[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != n) throw std::invalid_argument("LeafTree: not connected");
    }
    LeafTree t;
    t.adj_ = std::move(adjacency);
    return t;
}

LeafTree LeafTree::from_edges(int node_count, const std::vector<TreeEdge>& edges) {
    std::vector<std::vector<int>> adj(node_count);
    for (const auto& e : edges) {
        if (e.a < 0 || e.a >= node_count || e.b < 0 || e.b >= node_count)
            throw std::invalid_argument("LeafTree: edge endpoint out of range");
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return from_adjacency(std::move(adj));
}

LeafTree LeafTree::single_node() { return from_adjacency({{}}); }

const std::vector<int>& LeafTree::neighbors(int v) const {
    if (v < 0 || v >= node_count())
        throw std::invalid_argument("LeafTree: node " + std::to_string(v) + " out of range");
    return adj_[v];
}

std::vector<int> LeafTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

int LeafTree::leaf_count() const {
    int c = 0;
    for (int v = 0; v < node_count(); ++v)
        if (is_leaf(v)) ++c;
    return c;
}

bool LeafTree::has_edge(int x, int y) const {
    if (x < 0 || x >= node_count() || y < 0 || y >= node_count()) return false;
    return std::find(adj_[x].begin(), adj_[x].end(), y) != adj_[x].end();
}

std::vector<TreeEdge> LeafTree::edge_list() const {
    std::vector<TreeEdge> out;
    for (int v = 0; v < node_count(); ++v)
        for (int u : adj_[v])
            if (v < u) out.push_back({v, u});
    std::sort(out.begin(), out.end(), [](const TreeEdge& x, const TreeEdge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return out;
}

bool LeafTree::is_layout_tree() const {
    for (int v = 0; v < node_count(); ++v)
        if (!is_leaf(v) && degree(v) != 3) return false;
    return true;
}

bool LeafTree::is_routing_tree(int max_degree) const {
    for (int v = 0; v < node_count(); ++v)
        if (!is_leaf(v) && (degree(v) < 3 || degree(v) > max_degree)) return false;
    return true;
}

int leaf_distance(const LeafTree& t, int a, int b) {
    t.neighbors(a);  // range checks
    t.neighbors(b);
    if (a == b) return 0;
    std::vector<int> dist(t.node_count(), -1);
    std::vector<int> queue{a};
    dist[a] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        if (x == b) return dist[x];
        for (int y : t.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist[b];
}

std::pair<std::vector<int>, std::vector<int>> edge_cut(const LeafTree& t, TreeEdge e) {
    if (!t.has_edge(e.a, e.b)) throw std::invalid_argument("edge_cut: not a tree edge");
    std::vector<char> side_a(t.node_count(), 0);
    std::vector<int> stack{e.a};
    side_a[e.a] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : t.neighbors(x)) {
            if (x == e.a && y == e.b) continue;
            if (!side_a[y]) {
                side_a[y] = 1;
                stack.push_back(y);
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> cut;
    for (int v = 0; v < t.node_count(); ++v) {
        if (!t.is_leaf(v)) continue;
        (side_a[v] ? cut.first : cut.second).push_back(v);
    }
    return cut;
}

EdgeClasses classify_edges(const LeafTree& t) {
    EdgeClasses out;
    for (const auto& e : t.edge_list())
        (t.is_leaf(e.a) || t.is_leaf(e.b) ? out.external : out.internal).push_back(e);
    return out;
}

std::vector<LeafTree> nni_neighbors(const LeafTree& t) {
    if (!t.is_layout_tree())
        throw std::invalid_argument("nni_neighbors: requires a degree-3 layout tree");
    std::vector<LeafTree> out;
    if (t.leaf_count() < 4) return out;

    std::vector<std::vector<int>> base(t.node_count());
    for (int v = 0; v < t.node_count(); ++v) base[v] = t.neighbors(v);

    auto replace = [](std::vector<int>& list, int from, int to) {
        *std::find(list.begin(), list.end(), from) = to;
    };

    for (const auto& e : t.edge_list()) {
        int x = e.a, y = e.b;
        if (t.is_leaf(x) || t.is_leaf(y)) continue;
        // x's other neighbors {a, b}, y's other neighbors {c, d}; the two
        // distinct rewirings swap b with c and b with d.
        std::vector<int> xs, ys;
        for (int u : base[x])
            if (u != y) xs.push_back(u);
        for (int u : base[y])
            if (u != x) ys.push_back(u);
        const int b = xs[1];
        for (int c : ys) {
            auto adj = base;
            replace(adj[x], b, c);
            replace(adj[y], c, b);
            replace(adj[b], x, y);
            replace(adj[c], y, x);
            out.push_back(LeafTree::from_adjacency(std::move(adj)));
        }
    }
    return out;
}

LeafTree subdivide_edge(const LeafTree& t, TreeEdge e, const RootedBinaryTree& attachment,
                        std::vector<int>* out_node_ids) {
    if (!t.has_edge(e.a, e.b)) throw std::invalid_argument("subdivide_edge: not a tree edge");
    const int w = t.node_count();
    std::vector<std::vector<int>> adj(t.node_count());
    for (int v = 0; v < t.node_count(); ++v) adj[v] = t.neighbors(v);
    adj.resize(t.node_count() + 1 + attachment.node_count());

    *std::find(adj[e.a].begin(), adj[e.a].end(), e.b) = w;
    *std::find(adj[e.b].begin(), adj[e.b].end(), e.a) = w;
    adj[w] = {e.a, e.b};

    const int offset = w + 1;
    if (out_node_ids) {
        out_node_ids->clear();
        for (int v = 0; v < attachment.node_count(); ++v) out_node_ids->push_back(offset + v);
    }
    for (int v = 0; v < attachment.node_count(); ++v) {
        if (attachment.is_leaf(v)) continue;
        for (int c : attachment.children(v)) {
            adj[offset + v].push_back(offset + c);
            adj[offset + c].push_back(offset + v);
        }
    }
    adj[w].push_back(offset + attachment.root());
    adj[offset + attachment.root()].push_back(w);
    return LeafTree::from_adjacency(std::move(adj));
}

LeafTree contract_degree2(const LeafTree& t, std::vector<int>* old_to_new) {
    const int n = t.node_count();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = t.neighbors(v);

    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() != 2) continue;
        int a = adj[v][0], b = adj[v][1];
        *std::find(adj[a].begin(), adj[a].end(), v) = b;
        *std::find(adj[b].begin(), adj[b].end(), v) = a;
        adj[v].clear();
        removed[v] = 1;
    }
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) remap[v] = next++;
    std::vector<std::vector<int>> out(next);
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        for (int u : adj[v]) out[remap[v]].push_back(remap[u]);
    }
    if (old_to_new) *old_to_new = std::move(remap);
    return LeafTree::from_adjacency(std::move(out));
}

int Layout::vertex_at(int leaf) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (phi[v] == leaf) return v;
    return -1;
}

Layout make_layout(LeafTree tree, std::vector<int> phi) {
    std::vector<char> used(tree.node_count(), 0);
    for (int node : phi) {
        if (node < 0 || node >= tree.node_count() || !tree.is_leaf(node))
            throw std::invalid_argument("Layout: phi must map onto leaf nodes");
        if (used[node]) throw std::invalid_argument("Layout: phi is not injective");
        used[node] = 1;
    }
    if (static_cast<int>(phi.size()) != tree.leaf_count())
        throw std::invalid_argument("Layout: phi must cover every leaf");
    return Layout{std::move(tree), std::move(phi)};
}

Layout leaf_id_layout(LeafTree tree) {
    const int L = tree.leaf_count();
    std::vector<int> phi(L);
    for (int v = 0; v < L; ++v) {
        if (!tree.is_leaf(v))
            throw std::invalid_argument("leaf_id_layout: leaves must be nodes 0..L-1");
        phi[v] = v;
    }
    return Layout{std::move(tree), std::move(phi)};
}

}  // namespace treelay
