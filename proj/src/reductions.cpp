#include "treelay/reductions.hpp"

#include <algorithm>
#include <string>

#include "treelay/family.hpp"
#include "treelay/isomorphism.hpp"

namespace treelay {

namespace {

bool is_power_of(int value, int base) {
    if (value < 1) return false;
    while (value % base == 0) value /= base;
    return value == 1;
}

// Leaf blocks of the components left after deleting the given nodes, mapped
// back to graph vertices through phi.
std::vector<std::vector<int>> leaf_blocks_after_removal(const Layout& l,
                                                        const std::vector<int>& removed) {
    const LeafTree& t = l.tree;
    std::vector<char> gone(t.node_count(), 0);
    for (int v : removed) gone[v] = 1;
    std::vector<char> seen = gone;
    std::vector<std::vector<int>> blocks;
    for (int start = 0; start < t.node_count(); ++start) {
        if (seen[start]) continue;
        std::vector<int> stack{start};
        seen[start] = 1;
        std::vector<int> block;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (t.is_leaf(x)) {
                int vertex = l.vertex_at(x);
                if (vertex >= 0) block.push_back(vertex);
            }
            for (int y : t.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::optional<VertexPartition> extract_blocks(const ReductionArtifact& artifact,
                                              const ExactSolution& solution, int expected_centrals,
                                              const FamilyParams& family, int block_count) {
    const Multigraph& g = artifact.original;
    const int n = g.vertex_count();
    if (n % block_count != 0)
        throw std::invalid_argument("extract: vertex count not divisible by block count");
    const int block_size = n / block_count;

    for (const Layout& witness : solution.witnesses) {
        if (!is_family_member(witness.tree, family))
            throw ReductionSoundnessError(
                "optimal witness tree is not a family member (node count " +
                std::to_string(witness.tree.node_count()) + ")");
        std::vector<int> centers = central_nodes(witness.tree);
        if (static_cast<int>(centers.size()) != expected_centrals)
            throw ReductionSoundnessError("witness has " + std::to_string(centers.size()) +
                                          " central nodes, expected " +
                                          std::to_string(expected_centrals));
        auto blocks = leaf_blocks_after_removal(witness, centers);
        if (static_cast<int>(blocks.size()) != block_count) continue;
        bool sized = std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) {
            return static_cast<int>(b.size()) == block_size;
        });
        if (!sized)
            throw ReductionSoundnessError("central removal gave unequal leaf blocks");
        VertexPartition p{blocks};
        validate_partition(p, n);
        if (blocks_are_cliques(p, g)) return p;
    }
    return std::nullopt;
}

}  // namespace

ReductionArtifact reduce_clique4_multigraph(const Multigraph& g) {
    const int n = g.vertex_count();
    if (!g.is_simple())
        throw std::invalid_argument("reduce_clique4_multigraph: input must be simple");
    if (n < 4 || !is_power_of(n, 2))
        throw std::invalid_argument("reduce_clique4_multigraph: |V| must be 2^l with l >= 2");
    if (g.edge_total() < 1)
        throw std::invalid_argument("reduce_clique4_multigraph: input needs at least one edge");

    ReductionArtifact a;
    a.kind = ReductionKind::clique4_multigraph;
    a.original = g;
    a.m_value = g.edge_total() * (2 * n - 2);
    a.output = edge_disjoint_union(g, Multigraph::complete(n, a.m_value));
    return a;
}

std::optional<VertexPartition> extract_clique4_answer(const ReductionArtifact& artifact,
                                                      const ExactSolution& solution) {
    if (artifact.kind != ReductionKind::clique4_multigraph)
        throw std::invalid_argument("extract_clique4_answer: wrong artifact kind");
    return extract_blocks(artifact, solution, 2, FamilyParams{3, 3}, 4);
}

ReductionArtifact subdivide_all_edges(const Multigraph& g) {
    ReductionArtifact a;
    a.kind = ReductionKind::subdivision_simple;
    a.original = g;
    std::vector<GraphEdge> out;
    int next = g.vertex_count();
    for (const auto& e : g.edges())
        for (std::int64_t i = 0; i < e.mult; ++i) {
            out.push_back({e.u, next, 1});
            out.push_back({next, e.v, 1});
            a.subdivision_endpoints.push_back({e.u, e.v});
            ++next;
        }
    a.output = Multigraph(next, std::move(out));
    return a;
}

std::int64_t balanced_subtree_congestion_total(std::int64_t q) {
    if (q < 1) throw std::invalid_argument("balanced_subtree_congestion_total: q must be >= 1");
    if (q == 1) return 2;
    return 2 * q + balanced_subtree_congestion_total(q / 2) +
           balanced_subtree_congestion_total(q - q / 2);
}

std::int64_t expected_subdivided_optimum(const ExactSolution& base, const Multigraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("expected_subdivided_optimum: need n >= 2");
    const std::int64_t l = g.multiplicity(0, 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.multiplicity(u, v) != l)
                throw std::invalid_argument(
                    "expected_subdivided_optimum: graph must be a uniform complete multigraph");
    if (l % 2 != 0)
        throw std::invalid_argument("expected_subdivided_optimum: multiplicity must be even");
    const std::int64_t q = (l / 2) * (n - 1);
    return base.best_value + n * (balanced_subtree_congestion_total(q) + l * (n - 1));
}

bool witness_subdivides_only_external(const Layout& witness, int original_count) {
    const LeafTree& t = witness.tree;
    const int nodes = t.node_count();

    std::vector<char> original_leaf(nodes, 0);
    for (int v = 0; v < original_count; ++v) original_leaf[witness.phi[v]] = 1;

    // Steiner skeleton of the original leaves: a node is on it iff originals
    // lie in at least two of its neighbor directions (or it is one itself).
    const int root = witness.phi[0];
    std::vector<int> parent(nodes, -2), order{root};
    parent[root] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int y : t.neighbors(order[i]))
            if (parent[y] == -2) {
                parent[y] = order[i];
                order.push_back(y);
            }
    std::vector<int> below(nodes, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (original_leaf[*it]) below[*it] += 1;
        if (parent[*it] >= 0) below[parent[*it]] += below[*it];
    }
    std::vector<char> on_skeleton(nodes, 0);
    for (int x = 0; x < nodes; ++x) {
        if (original_leaf[x]) {
            on_skeleton[x] = 1;
            continue;
        }
        int directions = original_count - below[x] > 0 ? 1 : 0;
        for (int y : t.neighbors(x))
            if (y != parent[x] && below[y] > 0) ++directions;
        on_skeleton[x] = directions >= 2;
    }

    auto skeleton_degree = [&](int x) {
        int d = 0;
        for (int y : t.neighbors(x))
            if (on_skeleton[y]) ++d;
        return d;
    };

    for (int x = 0; x < nodes; ++x) {
        if (!on_skeleton[x] || original_leaf[x]) continue;
        bool has_attachment = false;
        for (int y : t.neighbors(x))
            if (!on_skeleton[y]) has_attachment = true;
        if (!has_attachment) continue;
        if (skeleton_degree(x) != 2) return false;  // no free slot on branch nodes
        // Walk to the segment's two endpoints (nearest base nodes).
        bool touches_original = false;
        for (int y : t.neighbors(x)) {
            if (!on_skeleton[y]) continue;
            int prev = x, cur = y;
            while (!original_leaf[cur] && skeleton_degree(cur) == 2) {
                for (int z : t.neighbors(cur))
                    if (on_skeleton[z] && z != prev) {
                        prev = cur;
                        cur = z;
                        break;
                    }
            }
            if (original_leaf[cur]) touches_original = true;
        }
        if (!touches_original) return false;
    }
    return true;
}

ReductionArtifact add_pendant(const Multigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("add_pendant: vertex out of range");
    ReductionArtifact a;
    a.kind = ReductionKind::pendant;
    a.original = g;
    a.pendant_vertex = v;
    a.added_vertex = g.vertex_count();
    std::vector<GraphEdge> es = g.edges();
    es.push_back({v, a.added_vertex, 1});
    a.output = Multigraph(g.vertex_count() + 1, std::move(es));
    return a;
}

ReductionArtifact add_isolated(const Multigraph& g) {
    ReductionArtifact a;
    a.kind = ReductionKind::rooted_isolated;
    a.original = g;
    a.added_vertex = g.vertex_count();
    a.output = Multigraph(g.vertex_count() + 1, g.edges());
    return a;
}

ReductionArtifact pad_to_k_power(const Multigraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 3) throw std::invalid_argument("pad_to_k_power: k must be >= 3");
    if (!g.is_simple()) throw std::invalid_argument("pad_to_k_power: input must be simple");
    if (n % k != 0) throw std::invalid_argument("pad_to_k_power: k must divide |V|");
    const int n_prime = n / k;

    int l = 0;
    std::int64_t power = 1;
    while (power < n_prime) {
        power *= k - 1;
        ++l;
    }
    const int pad_size = static_cast<int>(power) - n_prime;

    ReductionArtifact a;
    a.kind = ReductionKind::pad_k;
    a.original = g;
    a.clique_k = k;
    a.pad_l = l;
    std::vector<GraphEdge> es = g.edges();
    int next = n;
    for (int comp = 0; comp < k; ++comp) {
        std::vector<int> members;
        for (int i = 0; i < pad_size; ++i) {
            members.push_back(next);
            a.pad_component.push_back(comp);
            for (int u = 0; u < n; ++u) es.push_back({u, next, 1});
            for (int prev : members)
                if (prev != next) es.push_back({prev, next, 1});
            ++next;
        }
    }
    a.output = Multigraph(next, std::move(es));
    return a;
}

ReductionArtifact reduce_cliquek_routing(const Multigraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 3) throw std::invalid_argument("reduce_cliquek_routing: k must be >= 3");
    if (!g.is_simple())
        throw std::invalid_argument("reduce_cliquek_routing: input must be simple");
    if (n % k != 0 || !is_power_of(n / k, k - 1))
        throw std::invalid_argument("reduce_cliquek_routing: |V| must be k(k-1)^l");
    if (g.edge_total() < 1)
        throw std::invalid_argument("reduce_cliquek_routing: input needs at least one edge");

    ReductionArtifact a;
    a.kind = ReductionKind::cliquek_routing;
    a.original = g;
    a.clique_k = k;
    a.m_value = g.edge_total() * (2 * n - 2);
    a.output = edge_disjoint_union(g, Multigraph::complete(n, a.m_value));
    return a;
}

std::optional<VertexPartition> extract_cliquek_answer(const ReductionArtifact& artifact,
                                                      const ExactSolution& solution) {
    if (artifact.kind != ReductionKind::cliquek_routing)
        throw std::invalid_argument("extract_cliquek_answer: wrong artifact kind");
    return extract_blocks(artifact, solution, 1, FamilyParams{artifact.clique_k, artifact.clique_k},
                          artifact.clique_k);
}

}  // namespace treelay
