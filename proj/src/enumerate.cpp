#include "treelay/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "treelay/isomorphism.hpp"

namespace treelay {

namespace {

constexpr int kSoftUnrooted = 10;
constexpr int kHardUnrooted = 12;
constexpr int kSoftRooted = 9;
constexpr int kHardRooted = 11;

}  // namespace

void check_enumeration_guard(const EnumerationSpec& spec) {
    if (spec.leaf_count < 2)
        throw std::invalid_argument("enumeration: need at least 2 leaves");
    if (spec.mode == TreeMode::routing_maxdeg && spec.max_degree < 3)
        throw std::invalid_argument("enumeration: routing max degree must be >= 3");
    if (spec.parallel_shards < 1)
        throw std::invalid_argument("enumeration: shard count must be >= 1");

    const bool rooted = spec.mode == TreeMode::rooted_binary;
    const int soft = rooted ? kSoftRooted : kSoftUnrooted;
    const int hard = rooted ? kHardRooted : kHardUnrooted;
    if (spec.leaf_count > hard)
        throw GuardError("enumeration: leaf count " + std::to_string(spec.leaf_count) +
                         " exceeds the hard ceiling " + std::to_string(hard));
    if (spec.leaf_count > soft && !spec.override_guard)
        throw GuardError("enumeration: leaf count " + std::to_string(spec.leaf_count) +
                         " exceeds the default guard " + std::to_string(soft) +
                         "; pass override_guard (--override-guard) to proceed");
}

std::uint64_t double_factorial(int k) {
    std::uint64_t r = 1;
    for (; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
    return r;
}

namespace detail {

LeafTree tree_from_raw(const std::vector<std::pair<int, int>>& edges) {
    int n = 1;
    for (auto [a, b] : edges) n = std::max({n, a + 1, b + 1});
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return LeafTree::from_adjacency(std::move(adj));
}

RootedBinaryTree rooted_from_raw(const std::vector<std::pair<int, int>>& edges, int handle) {
    int n = 0;
    for (auto [a, b] : edges) n = std::max({n, a + 1, b + 1});
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    auto build = [&](auto&& self, int v, int parent) -> RootedBinaryTree {
        std::vector<int> kids;
        for (int u : adj[v])
            if (u != parent && u != handle) kids.push_back(u);
        if (kids.empty()) return RootedBinaryTree::leaf(v);
        return RootedBinaryTree::join(self(self, kids[0], v), self(self, kids[1], v));
    };
    const int root = adj[handle][0];
    return build(build, root, handle);
}

}  // namespace detail

std::uint64_t count_trees(const EnumerationSpec& spec) {
    check_enumeration_guard(spec);
    std::uint64_t count = 0;
    switch (spec.mode) {
        case TreeMode::unrooted_deg3:
            detail::visit_cubic(spec.leaf_count, 0, 1, [&](const auto&) { ++count; });
            break;
        case TreeMode::rooted_binary:
            detail::visit_cubic(spec.leaf_count + 1, 0, 1, [&](const auto&) { ++count; });
            break;
        case TreeMode::routing_maxdeg:
            enumerate_routing(spec.leaf_count, spec.max_degree, [&](const LeafTree&) { ++count; });
            break;
    }
    return count;
}

void enumerate_unrooted(int leaf_count, const std::function<void(const LeafTree&)>& visit) {
    detail::visit_cubic(leaf_count, 0, 1,
                        [&](const auto& edges) { visit(detail::tree_from_raw(edges)); });
}

void enumerate_rooted(int leaf_count, const std::function<void(const RootedBinaryTree&)>& visit) {
    detail::visit_cubic(leaf_count + 1, 0, 1, [&](const auto& edges) {
        visit(detail::rooted_from_raw(edges, leaf_count));
    });
}

void enumerate_routing(int leaf_count, int max_degree,
                       const std::function<void(const LeafTree&)>& visit) {
    if (max_degree < 3) throw std::invalid_argument("enumerate_routing: max degree must be >= 3");
    std::unordered_set<std::string> seen;

    detail::visit_cubic(leaf_count, 0, 1, [&](const std::vector<std::pair<int, int>>& edges) {
        LeafTree base = detail::tree_from_raw(edges);
        std::vector<TreeEdge> internal = classify_edges(base).internal;
        const int k = static_cast<int>(internal.size());
        const int n = base.node_count();
        for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
            // Union internal nodes across contracted edges; a component of c
            // internal nodes ends up with degree c + 2.
            std::vector<int> rep(n);
            for (int v = 0; v < n; ++v) rep[v] = v;
            auto find = [&](int v) {
                while (rep[v] != v) v = rep[v] = rep[rep[v]];
                return v;
            };
            std::vector<int> size(n, 1);
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                if (!(subset >> i & 1)) continue;
                int a = find(internal[i].a), b = find(internal[i].b);
                if (a == b) continue;
                rep[a] = b;
                size[b] += size[a];
                if (size[b] + 2 > max_degree) ok = false;
            }
            if (!ok) continue;
            std::vector<int> remap(n, -1);
            int next = 0;
            for (int v = 0; v < n; ++v)
                if (find(v) == v) remap[v] = next++;
            std::vector<std::vector<int>> adj(next);
            for (const auto& e : base.edge_list()) {
                int a = remap[find(e.a)], b = remap[find(e.b)];
                if (a == b) continue;
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            // Contraction may renumber leaves; rebuild with leaves 0..L-1.
            std::vector<int> order(next, -1);
            int id = 0;
            for (int v = 0; v < leaf_count; ++v) order[remap[find(v)]] = id++;
            for (int v = 0; v < next; ++v)
                if (order[v] < 0) order[v] = id++;
            std::vector<std::vector<int>> final_adj(next);
            for (int v = 0; v < next; ++v)
                for (int u : adj[v]) final_adj[order[v]].push_back(order[u]);
            LeafTree t = LeafTree::from_adjacency(std::move(final_adj));
            Layout l = leaf_id_layout(t);
            if (seen.insert(canonical_form(l)).second) visit(l.tree);
        }
    });
}

}  // namespace treelay
