#include "treelay/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "treelay/isomorphism.hpp"

namespace treelay {

void validate_family_params(const FamilyParams& p) {
    if (p.max_degree < 3)
        throw std::invalid_argument("FamilyParams: max degree must be >= 3");
    if (p.root_budget != p.max_degree && p.root_budget != p.max_degree - 1)
        throw std::invalid_argument("FamilyParams: R must be Delta or Delta-1");
}

std::int64_t capacity(int k, const FamilyParams& p) {
    validate_family_params(p);
    if (k < 0) throw std::invalid_argument("capacity: k must be >= 0");
    std::int64_t total = 1;
    std::int64_t pow = 1;
    for (int j = 0; j < k; ++j) {
        total += static_cast<std::int64_t>(p.root_budget) * pow;
        pow *= p.max_degree - 1;
    }
    return total;
}

FamilyMember build_family_member(int node_count, const FamilyParams& p) {
    validate_family_params(p);
    if (node_count < 1) throw std::invalid_argument("build_family_member: need >= 1 node");

    std::vector<std::vector<int>> adj(node_count);
    std::vector<int> level(node_count, 0);
    if (node_count == 1)
        return {LeafTree::from_adjacency(std::move(adj)), LineEmbedding{0, std::move(level)}};

    int k = 0;
    while (!(capacity(k, p) <= node_count && node_count < capacity(k + 1, p))) ++k;

    auto attach = [&](int parent, int child, int lvl) {
        adj[parent].push_back(child);
        adj[child].push_back(parent);
        level[child] = lvl;
    };

    int next = 1;
    std::vector<int> frontier{0};
    if (k == 0) {
        // Everything fits on line L_1 under the origin.
        for (int i = 0; i < node_count - 1; ++i) attach(0, next++, 1);
        return {LeafTree::from_adjacency(std::move(adj)), LineEmbedding{0, std::move(level)}};
    }
    for (int lvl = 1; lvl <= k; ++lvl) {
        const int fanout = lvl == 1 ? p.root_budget : p.max_degree - 1;
        std::vector<int> row;
        for (int parent : frontier)
            for (int j = 0; j < fanout; ++j) {
                row.push_back(next);
                attach(parent, next++, lvl);
            }
        frontier = std::move(row);
    }
    // Left-to-right fill of the last, possibly incomplete line.
    int remaining = node_count - static_cast<int>(capacity(k, p));
    for (std::size_t i = 0; remaining > 0; ++i) {
        const int take = std::min(remaining, p.max_degree - 1);
        for (int j = 0; j < take; ++j) attach(frontier[i], next++, k + 1);
        remaining -= take;
    }
    return {LeafTree::from_adjacency(std::move(adj)), LineEmbedding{0, std::move(level)}};
}

LeafTree family_layout_tree(int leaf_count, const FamilyParams& p) {
    if (leaf_count < 1) throw std::invalid_argument("family_layout_tree: need >= 1 leaf");
    if (leaf_count == 1) return LeafTree::single_node();
    FamilyMember m = build_family_member(2 * leaf_count - 1, p);
    return contract_degree2(m.tree);
}

std::vector<int> central_nodes(const LeafTree& t) {
    const int n = t.node_count();
    if (n == 0) throw std::invalid_argument("central_nodes: empty tree");
    if (n == 1) return {0};
    // Subtree sizes from one DFS give every removal-component size.
    std::vector<int> parent(n, -2), order{0};
    parent[0] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int y : t.neighbors(order[i]))
            if (parent[y] == -2) {
                parent[y] = order[i];
                order.push_back(y);
            }
    std::vector<int> size(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        int largest = n - size[v];  // the component holding the parent side
        for (int u : t.neighbors(v))
            if (u != parent[v]) largest = std::max(largest, size[u]);
        if (2 * largest <= n) out.push_back(v);
    }
    return out;
}

LineEmbedding line_embedding(const LeafTree& t, int origin) {
    t.neighbors(origin);  // range check
    LineEmbedding emb;
    emb.origin = origin;
    emb.level.assign(t.node_count(), -1);
    std::vector<int> queue{origin};
    emb.level[origin] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int y : t.neighbors(queue[i]))
            if (emb.level[y] < 0) {
                emb.level[y] = emb.level[queue[i]] + 1;
                queue.push_back(y);
            }
    return emb;
}

std::vector<int> subtree_nodes(const LeafTree& t, const LineEmbedding& emb, int u) {
    std::vector<int> out;
    std::vector<int> stack{u};
    std::vector<char> seen(t.node_count(), 0);
    seen[u] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (int y : t.neighbors(x))
            if (!seen[y] && emb.level[y] == emb.level[x] + 1) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_family_member(const LeafTree& t, const FamilyParams& p) {
    if (t.node_count() == 0) return false;
    FamilyMember m = build_family_member(t.node_count(), p);
    return tree_isomorphic(t, m.tree);
}

}  // namespace treelay
