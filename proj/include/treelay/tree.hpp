#pragma once

#include <utility>
#include <vector>

namespace treelay {

class RootedBinaryTree;

struct TreeEdge {
    int a = 0;
    int b = 0;  // normalized a < b by the factories below

    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

TreeEdge make_tree_edge(int x, int y);

// Unrooted host tree stored as plain adjacency over dense node ids.
// Leaves are the degree-<=1 nodes, everything else is internal. The layout
// regime (every internal node degree 3) and the routing regime (internal
// degrees in [3, max]) are checked by predicates rather than baked into the
// representation: family-member construction legitimately produces one
// partially-filled internal node, and central_nodes works on paths.
class LeafTree {
public:
    LeafTree() = default;

    // Validates symmetry, connectivity and acyclicity.
    static LeafTree from_adjacency(std::vector<std::vector<int>> adjacency);
    static LeafTree from_edges(int node_count, const std::vector<TreeEdge>& edges);
    static LeafTree single_node();

    int node_count() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return node_count() == 0 ? 0 : node_count() - 1; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool is_leaf(int v) const { return degree(v) <= 1; }
    std::vector<int> leaves() const;
    int leaf_count() const;
    bool has_edge(int x, int y) const;
    std::vector<TreeEdge> edge_list() const;  // sorted

    bool is_layout_tree() const;                // internal degrees exactly 3
    bool is_routing_tree(int max_degree) const;  // internal degrees in [3, max_degree]

private:
    std::vector<std::vector<int>> adj_;
};

// Path edge count between two nodes.
int leaf_distance(const LeafTree& t, int a, int b);

// Leaf sets of the two components after deleting e; (side of e.a, side of e.b).
std::pair<std::vector<int>, std::vector<int>> edge_cut(const LeafTree& t, TreeEdge e);

struct EdgeClasses {
    std::vector<TreeEdge> external;  // incident to a leaf
    std::vector<TreeEdge> internal;
};

EdgeClasses classify_edges(const LeafTree& t);

// The two nearest-neighbor-interchange rewirings across every internal edge.
// Node ids are preserved, so any Layout over t remains valid for the results.
std::vector<LeafTree> nni_neighbors(const LeafTree& t);

// Replaces e by two edges through a new internal node w (id = old node_count)
// and hangs the attachment under w. Attachment nodes are appended after w in
// the attachment's own node order; their ids are reported via out_node_ids.
LeafTree subdivide_edge(const LeafTree& t, TreeEdge e, const RootedBinaryTree& attachment,
                        std::vector<int>* out_node_ids = nullptr);

// Splices out every degree-2 node and renumbers compactly.
LeafTree contract_degree2(const LeafTree& t, std::vector<int>* old_to_new = nullptr);

// A host tree together with the bijection from graph vertices to its leaves.
struct Layout {
    LeafTree tree;
    std::vector<int> phi;  // graph vertex -> leaf node id

    int vertex_count() const noexcept { return static_cast<int>(phi.size()); }
    int leaf_of(int vertex) const { return phi.at(vertex); }
    int vertex_at(int leaf) const;  // -1 if not a mapped leaf
};

Layout make_layout(LeafTree tree, std::vector<int> phi);

// Convenience for enumeration-numbered trees whose leaves are exactly 0..L-1.
Layout leaf_id_layout(LeafTree tree);

}  // namespace treelay
