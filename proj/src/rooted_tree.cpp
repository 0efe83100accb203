#include "treelay/rooted_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace treelay {

RootedBinaryTree RootedBinaryTree::leaf(int label) {
    RootedBinaryTree t;
    t.root_ = 0;
    t.children_ = {{-1, -1}};
    t.parent_ = {-1};
    t.label_ = {label};
    return t;
}

RootedBinaryTree RootedBinaryTree::join(const RootedBinaryTree& left,
                                        const RootedBinaryTree& right) {
    RootedBinaryTree t;
    const int nl = left.node_count();
    const int nr = right.node_count();
    t.children_.resize(nl + nr + 1, {-1, -1});
    t.parent_.resize(nl + nr + 1, -1);
    t.label_.resize(nl + nr + 1, -1);
    for (int v = 0; v < nl; ++v) {
        auto [c0, c1] = left.children_[v];
        t.children_[v] = {c0, c1};
        t.parent_[v] = left.parent_[v];
        t.label_[v] = left.label_[v];
    }
    for (int v = 0; v < nr; ++v) {
        auto [c0, c1] = right.children_[v];
        t.children_[nl + v] = {c0 < 0 ? -1 : c0 + nl, c1 < 0 ? -1 : c1 + nl};
        t.parent_[nl + v] = right.parent_[v] < 0 ? -1 : right.parent_[v] + nl;
        t.label_[nl + v] = right.label_[v];
    }
    t.root_ = nl + nr;
    t.children_[t.root_] = {left.root_, right.root_ + nl};
    t.parent_[left.root_] = t.root_;
    t.parent_[right.root_ + nl] = t.root_;
    return t;
}

int RootedBinaryTree::leaf_count() const {
    int c = 0;
    for (int v = 0; v < node_count(); ++v)
        if (is_leaf(v)) ++c;
    return c;
}

std::vector<int> RootedBinaryTree::postorder() const {
    std::vector<int> out;
    out.reserve(node_count());
    std::vector<std::pair<int, bool>> stack{{root_, false}};
    while (!stack.empty()) {
        auto [v, expanded] = stack.back();
        stack.pop_back();
        if (expanded || is_leaf(v)) {
            out.push_back(v);
            continue;
        }
        stack.push_back({v, true});
        stack.push_back({children_[v][1], false});
        stack.push_back({children_[v][0], false});
    }
    return out;
}

std::vector<int> RootedBinaryTree::leaf_labels() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (is_leaf(v)) out.push_back(label_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

Layout rooted_to_unrooted(const RootedBinaryTree& b) {
    if (b.leaf_count() < 2)
        throw std::invalid_argument("rooted_to_unrooted: need at least 2 leaves");
    const int n = b.node_count();
    const int root = b.root();
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (v != root) remap[v] = next++;

    std::vector<std::vector<int>> adj(n - 1);
    for (int v = 0; v < n; ++v) {
        if (b.is_leaf(v) || v == root) continue;
        for (int c : b.children(v)) {
            adj[remap[v]].push_back(remap[c]);
            adj[remap[c]].push_back(remap[v]);
        }
    }
    auto [r0, r1] = b.children(root);
    adj[remap[r0]].push_back(remap[r1]);
    adj[remap[r1]].push_back(remap[r0]);

    LeafTree tree = LeafTree::from_adjacency(std::move(adj));
    std::vector<int> labels = b.leaf_labels();
    if (!labels.empty() &&
        (labels.front() != 0 || labels.back() != static_cast<int>(labels.size()) - 1))
        throw std::invalid_argument("rooted_to_unrooted: leaf labels must be 0..L-1");
    std::vector<int> phi(labels.size(), -1);
    for (int v = 0; v < n; ++v)
        if (b.is_leaf(v)) phi[b.label(v)] = remap[v];
    return make_layout(std::move(tree), std::move(phi));
}

}  // namespace treelay
