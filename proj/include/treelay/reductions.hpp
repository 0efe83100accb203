#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "treelay/exact.hpp"
#include "treelay/multigraph.hpp"

namespace treelay {

enum class ReductionKind {
    clique4_multigraph,
    subdivision_simple,
    pendant,
    rooted_isolated,
    pad_k,
    cliquek_routing,
};

// Output graph of a gadget construction plus the bookkeeping needed to pull
// solutions of the output back to the input.
struct ReductionArtifact {
    ReductionKind kind{};
    Multigraph original{0};
    Multigraph output{0};

    std::int64_t m_value = 0;                              // clique4 / cliquek M
    int clique_k = 0;                                      // cliquek / pad_k
    std::vector<std::pair<int, int>> subdivision_endpoints;  // new vertex i -> {u, v}
    int pendant_vertex = -1;
    int added_vertex = -1;
    int pad_l = 0;
    std::vector<int> pad_component;  // per padding vertex, in id order
};

// Thrown when a solved reduced instance contradicts the construction's
// guarantees (e.g. an optimal witness outside the expected tree family).
class ReductionSoundnessError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// g simple with n = 2^l >= 4 vertices: adds M = m(2n-2) parallel edges
// between every vertex pair.
ReductionArtifact reduce_clique4_multigraph(const Multigraph& g);

// Scans the witnesses of an exact solve of artifact.output: each must be a
// T(3,3) tree; removing its two central nodes yields four equal leaf blocks,
// returned as a partition when every block induces a clique in the original.
std::optional<VertexPartition> extract_clique4_answer(const ReductionArtifact& artifact,
                                                      const ExactSolution& solution);

// One new degree-2 vertex per parallel edge; output is simple with n + m
// vertices.
ReductionArtifact subdivide_all_edges(const Multigraph& g);

// Total edge congestion of the optimal all-degree-2-leaf subtree on q leaves:
// the most balanced rooted binary tree, every edge (the root's attachment
// edge included) carrying twice the leaf count below it.
std::int64_t balanced_subtree_congestion_total(std::int64_t q);

// Predicted optimum for the subdivided instance of a complete multigraph
// with even multiplicity l: base + n * (T + l(n-1)).
std::int64_t expected_subdivided_optimum(const ExactSolution& base, const Multigraph& g);

// True iff every attachment of degree-2-vertex subtrees in the witness sits
// on an external segment of the skeleton spanned by the original vertices'
// leaves. original_count = number of vertices of the pre-subdivision graph.
bool witness_subdivides_only_external(const Layout& witness, int original_count);

ReductionArtifact add_pendant(const Multigraph& g, int v);
ReductionArtifact add_isolated(const Multigraph& g);

// n = k * n': pads with k complete components of size (k-1)^l - n', each new
// vertex also joined to every original vertex; preserves Equal Size k-Clique
// Cover YES/NO.
ReductionArtifact pad_to_k_power(const Multigraph& g, int k);

// Same parallel-edge blow-up as the 4-clique gadget, solved over routing
// trees with max degree k; extraction removes the single central node.
ReductionArtifact reduce_cliquek_routing(const Multigraph& g, int k);

std::optional<VertexPartition> extract_cliquek_answer(const ReductionArtifact& artifact,
                                                      const ExactSolution& solution);

}  // namespace treelay
