#pragma once

#include <cstdint>
#include <vector>

#include "treelay/multigraph.hpp"
#include "treelay/rooted_tree.hpp"
#include "treelay/tree.hpp"

namespace treelay {

// Tree distance between the images of a graph edge's endpoints.
std::int64_t dilation(const Layout& l, const Multigraph& g, int u, int v);

// Total multiplicity of graph edges crossing the cut induced by e.
std::int64_t congestion(const Layout& l, const Multigraph& g, TreeEdge e);

// Sum over graph edges of multiplicity * dilation; equals the sum of
// congestions over tree edges. Exact integer arithmetic throughout.
std::int64_t tree_length(const Layout& l, const Multigraph& g);

// Sum of pairwise leaf distances; equals tree_length against K_n.
std::int64_t sigma_ll(const LeafTree& t);

// All-pairs shortest-path distance sum of the simple skeleton.
std::int64_t wiener(const Multigraph& g);

struct AlphaBeta {
    std::int64_t alpha = 0;  // max edge congestion of the rooted tree
    std::int64_t beta = 0;   // rooted tree length (sum of edge congestions)
};

AlphaBeta alpha_beta(const RootedBinaryTree& b, const Multigraph& g);

struct MeasureReport {
    int n = 0;
    std::int64_t m = 0;
    std::int64_t tree_length = 0;
    std::int64_t sigma_ll = 0;
    std::int64_t max_dilation = 0;
    std::int64_t max_congestion = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::vector<std::pair<GraphEdge, std::int64_t>> per_graph_edge_dilation;
    std::vector<std::pair<TreeEdge, std::int64_t>> per_tree_edge_congestion;
};

MeasureReport measure(const Layout& l, const Multigraph& g);
MeasureReport measure(const RootedBinaryTree& b, const Multigraph& g);

}  // namespace treelay
