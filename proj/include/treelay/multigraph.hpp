#pragma once

#include <cstdint>
#include <vector>

namespace treelay {

struct GraphEdge {
    int u = 0;
    int v = 0;
    std::int64_t mult = 1;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Finite undirected multigraph over dense 0-based vertex indices. Parallel
// edges are stored as per-pair multiplicities, never as individual edge
// objects. Immutable after construction; no self-loops.
class Multigraph {
public:
    explicit Multigraph(int vertex_count);

    // Edges are normalized (u < v), merged by summing multiplicities.
    Multigraph(int vertex_count, std::vector<GraphEdge> edges);

    static Multigraph complete(int n, std::int64_t multiplicity = 1);

    int vertex_count() const noexcept { return n_; }

    // Distinct vertex pairs with at least one edge, sorted lexicographically.
    const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
    std::size_t pair_count() const noexcept { return edges_.size(); }

    // m: parallel edges counted individually.
    std::int64_t edge_total() const noexcept { return edge_total_; }

    std::int64_t multiplicity(int u, int v) const;
    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }
    bool is_simple() const noexcept;

    std::int64_t degree(int v) const;  // weighted by multiplicity
    std::int64_t min_degree() const;
    bool connected() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<GraphEdge> edges_;
    std::int64_t edge_total_ = 0;
};

// Complement of a simple graph; rejects multigraphs.
Multigraph complement(const Multigraph& g);

// Same vertex set, multiplicities add.
Multigraph edge_disjoint_union(const Multigraph& a, const Multigraph& b);

// Disjoint non-empty vertex blocks covering V(G).
struct VertexPartition {
    std::vector<std::vector<int>> blocks;
};

void validate_partition(const VertexPartition& p, int vertex_count);
bool blocks_are_cliques(const VertexPartition& p, const Multigraph& g);

}  // namespace treelay
