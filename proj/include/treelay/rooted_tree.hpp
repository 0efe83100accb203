#pragma once

#include <array>
#include <vector>

#include "treelay/tree.hpp"

namespace treelay {

// Rooted binary tree: the root has two children, every other internal node
// has one parent and two children, leaves carry graph vertex labels.
// Houses both the reassembling tree and rooted layout witnesses; a single
// labeled leaf is allowed as the degenerate attachment case.
class RootedBinaryTree {
public:
    static RootedBinaryTree leaf(int label);
    static RootedBinaryTree join(const RootedBinaryTree& left, const RootedBinaryTree& right);

    int node_count() const noexcept { return static_cast<int>(parent_.size()); }
    int leaf_count() const;
    int root() const noexcept { return root_; }
    bool is_leaf(int v) const { return children_[v][0] < 0; }
    const std::array<int, 2>& children(int v) const { return children_[v]; }
    int parent(int v) const { return parent_[v]; }
    int label(int v) const { return label_[v]; }  // -1 for internal nodes

    std::vector<int> postorder() const;
    std::vector<int> leaf_labels() const;  // sorted

private:
    int root_ = 0;
    std::vector<std::array<int, 2>> children_;
    std::vector<int> parent_;
    std::vector<int> label_;
};

// Suppresses the degree-2 root and joins its two neighbors; phi is rebuilt
// from the leaf labels. Requires at least 2 leaves.
Layout rooted_to_unrooted(const RootedBinaryTree& b);

}  // namespace treelay
