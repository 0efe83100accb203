#pragma once

#include <cstdint>
#include <vector>

#include "treelay/tree.hpp"

namespace treelay {

// Parameters of the level-filled optimal tree family: root budget R must be
// the max degree or one less.
struct FamilyParams {
    int root_budget = 3;  // R
    int max_degree = 3;   // Delta
};

void validate_family_params(const FamilyParams& p);

// Node capacity of a fully filled member of height k:
// M_0 = 1, M_k = 1 + R * sum_{j<k} (Delta-1)^j.
std::int64_t capacity(int k, const FamilyParams& p);

struct LineEmbedding {
    int origin = 0;
    std::vector<int> level;  // level[v] = distance from origin
};

struct FamilyMember {
    LeafTree tree;
    LineEmbedding embedding;
};

// The literal level-filled construction with exactly node_count nodes:
// origin gets min(n-1, R) children, levels fill left to right with Delta-1
// children per node, at most one node on the last filled level is partial.
// A partial node can have degree 2, so the result is a general tree, not
// necessarily a valid layout tree.
FamilyMember build_family_member(int node_count, const FamilyParams& p);

// Member on 2*leaf_count-1 nodes with its (at most one) degree-2 node
// contracted: the family's valid layout tree with the given leaf count.
// Isomorphic to build_family_member(2*leaf_count-2, p) for Delta = 3.
LeafTree family_layout_tree(int leaf_count, const FamilyParams& p = {});

// Nodes whose removal leaves components of size <= n/2 each. Every tree has
// one or two; two are adjacent.
std::vector<int> central_nodes(const LeafTree& t);

LineEmbedding line_embedding(const LeafTree& t, int origin);

// T_u: nodes whose shortest path to the origin passes through u.
std::vector<int> subtree_nodes(const LeafTree& t, const LineEmbedding& emb, int u);

// Unlabeled isomorphism against the member with the same node count.
bool is_family_member(const LeafTree& t, const FamilyParams& p);

}  // namespace treelay
