#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "treelay/rooted_tree.hpp"
#include "treelay/tree.hpp"

namespace treelay {

enum class TreeMode { unrooted_deg3, rooted_binary, routing_maxdeg };

struct EnumerationSpec {
    int leaf_count = 0;
    TreeMode mode = TreeMode::unrooted_deg3;
    int max_degree = 3;  // routing mode only
    int parallel_shards = 1;
    bool override_guard = false;
};

class GuardError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Soft guards (unrooted/routing 10 leaves, rooted 9) refuse with an override
// hint; hard ceilings (12 / 11) always refuse.
void check_enumeration_guard(const EnumerationSpec& spec);

std::uint64_t double_factorial(int k);

// Runs the enumeration and counts; no per-tree materialization for the
// unrooted and rooted modes.
std::uint64_t count_trees(const EnumerationSpec& spec);

// Each labeled topology exactly once; leaves are nodes 0..L-1.
void enumerate_unrooted(int leaf_count, const std::function<void(const LeafTree&)>& visit);
void enumerate_rooted(int leaf_count, const std::function<void(const RootedBinaryTree&)>& visit);

// All labeled trees with internal degrees in [3, max_degree], produced by
// contracting internal-edge subsets of degree-3 trees and deduplicating up
// to labeled isomorphism.
void enumerate_routing(int leaf_count, int max_degree,
                       const std::function<void(const LeafTree&)>& visit);

namespace detail {

// Leaf-insertion enumeration over a mutable edge list: the tree on leaves
// {0..k-1} extends by subdividing any of its 2k-3 edges with leaf k. Leaves
// are 0..L-1, internal nodes L..2L-3. Shards split the search at the first
// two insertion levels (15 prefixes), so every shard assignment is a
// partition of the full space.
template <class F>
void visit_cubic(int leaf_count, int shard, int shard_count, F&& visit) {
    std::vector<std::pair<int, int>> edges;
    const int L = leaf_count;
    if (L < 2) {
        if (shard == 0 && L == 1) visit(edges);
        return;
    }
    if (L == 2) {
        if (shard == 0) {
            edges.push_back({0, 1});
            visit(edges);
        }
        return;
    }
    edges = {{0, L}, {1, L}, {2, L}};
    const int last_prefix_leaf = L >= 5 ? 4 : 3;

    auto rec = [&](auto&& self, int next_leaf, int next_internal, long prefix) -> void {
        if (next_leaf == L) {
            visit(edges);
            return;
        }
        const int m = static_cast<int>(edges.size());
        for (int i = 0; i < m; ++i) {
            long np = prefix;
            if (next_leaf <= last_prefix_leaf) np = prefix * m + i;
            if (shard_count > 1 && next_leaf == last_prefix_leaf &&
                np % shard_count != shard)
                continue;
            auto [x, y] = edges[i];
            const int w = next_internal;
            edges[i] = {x, w};
            edges.push_back({w, y});
            edges.push_back({w, next_leaf});
            self(self, next_leaf + 1, next_internal + 1, np);
            edges.pop_back();
            edges.pop_back();
            edges[i] = {x, y};
        }
    };
    if (shard_count > 1 && L == 3) {
        if (shard == 0) visit(edges);
        return;
    }
    rec(rec, 3, L + 1, 0);
}

LeafTree tree_from_raw(const std::vector<std::pair<int, int>>& edges);

// Rooted enumeration rides the cubic one: rooted binary trees on L leaves
// correspond to cubic trees on L+1 leaves with leaf L as a handle; removing
// the handle leaves its neighbor as the degree-2 root.
RootedBinaryTree rooted_from_raw(const std::vector<std::pair<int, int>>& edges, int handle);

}  // namespace detail

}  // namespace treelay
